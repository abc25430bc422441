#include "ergolab/observable.hpp"

#include <algorithm>

namespace ergolab {

std::complex<double> FourierPoly::eval(const Coords& x) const {
  if (static_cast<int>(x.size()) != dim)
    throw Error("dimension-mismatch", "point dimension != poly dimension");
  std::complex<double> s{0.0, 0.0};
  for (const auto& t : terms) {
    double phase = 0.0;
    for (int i = 0; i < dim; ++i) phase += t.freq[i] * x[i];
    s += t.coeff * unit_exp(phase);
  }
  return s;
}

std::complex<double> FourierPoly::coefficient(const std::vector<int>& k) const {
  for (const auto& t : terms)
    if (t.freq == k) return t.coeff;
  return {0.0, 0.0};
}

void FourierPoly::add_term(std::vector<int> k, std::complex<double> c) {
  if (static_cast<int>(k.size()) != dim)
    throw Error("dimension-mismatch", "frequency vector length != dimension");
  for (auto& t : terms) {
    if (t.freq == k) {
      t.coeff += c;
      return;
    }
  }
  terms.push_back({std::move(k), c});
}

void FourierPoly::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const FourierTerm& a, const FourierTerm& b) {
              return a.freq < b.freq;
            });
  std::vector<FourierTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().freq == t.freq)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const FourierTerm& t) {
                                return std::abs(t.coeff) == 0.0;
                              }),
               merged.end());
  terms = std::move(merged);
}

int FourierPoly::max_abs_freq() const {
  int m = 0;
  for (const auto& t : terms)
    for (int k : t.freq) m = std::max(m, std::abs(k));
  return m;
}

double FourierPoly::coeff_abs_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.coeff);
  return s;
}

bool FourierPoly::conjugate_symmetric(double tol) const {
  for (const auto& t : terms) {
    std::vector<int> neg(t.freq.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -t.freq[i];
    if (std::abs(coefficient(neg) - std::conj(t.coeff)) > tol) return false;
  }
  return true;
}

FourierPoly poly_mul(const FourierPoly& a, const FourierPoly& b) {
  if (a.dim != b.dim)
    throw Error("dimension-mismatch", "poly dimensions differ");
  FourierPoly r;
  r.dim = a.dim;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      std::vector<int> k(a.dim);
      for (int i = 0; i < a.dim; ++i) k[i] = ta.freq[i] + tb.freq[i];
      r.add_term(std::move(k), ta.coeff * tb.coeff);
    }
  r.canonicalize();
  return r;
}

FourierPoly poly_conj(const FourierPoly& a) {
  FourierPoly r;
  r.dim = a.dim;
  for (const auto& t : a.terms) {
    std::vector<int> k(t.freq.size());
    for (size_t i = 0; i < k.size(); ++i) k[i] = -t.freq[i];
    r.terms.push_back({std::move(k), std::conj(t.coeff)});
  }
  r.canonicalize();
  return r;
}

FourierPoly poly_scale(const FourierPoly& a, std::complex<double> c) {
  FourierPoly r = a;
  for (auto& t : r.terms) t.coeff *= c;
  return r;
}

FourierPoly poly_add(const FourierPoly& a, const FourierPoly& b) {
  if (a.dim != b.dim)
    throw Error("dimension-mismatch", "poly dimensions differ");
  FourierPoly r = a;
  for (const auto& t : b.terms) r.add_term(t.freq, t.coeff);
  r.canonicalize();
  return r;
}

std::complex<double> Observable::eval(const Point& x) const {
  if (poly) return poly->eval(x.coords);
  return fn(x);
}

double Observable::eval_real(const Point& x) const { return eval(x).real(); }

Observable Observable::constant(double c) {
  Observable o;
  o.fn = [c](const Point&) { return std::complex<double>{c, 0.0}; };
  o.real_valued = true;
  o.sup_bound = std::fabs(c);
  return o;
}

Observable Observable::constant_poly(double c, int dim) {
  FourierPoly p;
  p.dim = dim;
  p.add_term(std::vector<int>(dim, 0), {c, 0.0});
  return from_poly(std::move(p), true);
}

Observable Observable::from_poly(FourierPoly p, bool real_valued) {
  p.canonicalize();
  Observable o;
  o.sup_bound = p.coeff_abs_sum();
  o.poly = std::move(p);
  o.real_valued = real_valued;
  return o;
}

Observable Observable::from_fn(
    std::function<std::complex<double>(const Point&)> f, double sup_bound,
    bool real_valued) {
  Observable o;
  o.fn = std::move(f);
  o.sup_bound = sup_bound;
  o.real_valued = real_valued;
  return o;
}

Observable Observable::cosine(std::vector<int> k) {
  FourierPoly p;
  p.dim = static_cast<int>(k.size());
  std::vector<int> neg(k.size());
  for (size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
  p.add_term(k, {0.5, 0.0});
  p.add_term(neg, {0.5, 0.0});
  return from_poly(std::move(p), true);
}

Observable Observable::sine(std::vector<int> k) {
  FourierPoly p;
  p.dim = static_cast<int>(k.size());
  std::vector<int> neg(k.size());
  for (size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
  p.add_term(k, {0.0, -0.5});
  p.add_term(neg, {0.0, 0.5});
  return from_poly(std::move(p), true);
}

Observable Observable::character(std::vector<int> k) {
  FourierPoly p;
  p.dim = static_cast<int>(k.size());
  p.add_term(std::move(k), {1.0, 0.0});
  return from_poly(std::move(p), false);
}

}  // namespace ergolab
