#include "ergolab/system.hpp"

#include <cmath>

namespace ergolab {

bool ErgodicityReport::all_pass() const {
  for (const auto& e : entries)
    if (e.verdict == Verdict::Dependent || e.flagged) return false;
  return true;
}

CommutingCheck check_commuting(const SystemSpec& spec, long sample_count,
                               double tol) {
  if (sample_count < 1)
    throw Error("bad-argument", "sample_count must be >= 1");
  auto pts = sample_points(
      SamplerSpec::random(sample_count, spec.sampler.seed ^ 0x5bd1e995u),
      spec.space);
  CommutingCheck r;
  for (const auto& x : pts) {
    for (size_t i = 0; i < spec.maps.size(); ++i) {
      for (size_t j = i + 1; j < spec.maps.size(); ++j) {
        Point a = apply(spec.maps[i], apply(spec.maps[j], x));
        Point b = apply(spec.maps[j], apply(spec.maps[i], x));
        r.max_discrepancy =
            std::max(r.max_discrepancy, torus_dist(a.coords, b.coords));
      }
    }
  }
  r.commuting = r.max_discrepancy <= tol;
  return r;
}

bool is_rational(double x, long max_den, long* num, long* den) {
  x = std::fabs(x);
  // continued-fraction convergents p/q until q exceeds max_den or the
  // approximation error vanishes at double precision
  double t = x;
  long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(t)), q1 = 1;
  for (int it = 0; it < 64; ++it) {
    if (std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1)) <
        1e-10 / static_cast<double>(q1)) {
      if (num) *num = p1;
      if (den) *den = q1;
      return true;
    }
    double frac = t - std::floor(t);
    if (frac < 1e-12) break;
    t = 1.0 / frac;
    double a = std::floor(t);
    if (a > static_cast<double>(max_den)) break;
    long p2 = static_cast<long>(a) * p1 + p0;
    long q2 = static_cast<long>(a) * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return false;
}

double weyl_sum(const std::function<Point(const Point&)>& step, const Point& x0,
                const std::vector<int>& freq, long n) {
  if (freq.size() != x0.coords.size())
    throw Error("dimension-mismatch", "frequency length != dimension");
  std::complex<double> s{0.0, 0.0};
  Point x = x0;
  for (long i = 0; i < n; ++i) {
    double phase = 0.0;
    for (size_t j = 0; j < freq.size(); ++j) phase += freq[j] * x.coords[j];
    s += unit_exp(phase);
    x = step(x);
  }
  return std::abs(s) / static_cast<double>(n);
}

namespace {

std::vector<std::vector<int>> frequency_battery(int dim) {
  std::vector<std::vector<int>> battery;
  // all nonzero vectors with |k|_inf <= 1, plus 2*e_j
  std::vector<int> k(dim, -1);
  while (true) {
    bool zero = true;
    for (int v : k)
      if (v != 0) zero = false;
    if (!zero) battery.push_back(k);
    int j = 0;
    for (; j < dim; ++j) {
      if (k[j] < 1) {
        ++k[j];
        break;
      }
      k[j] = -1;
    }
    if (j == dim) break;
  }
  for (int j = 0; j < dim; ++j) {
    std::vector<int> e(dim, 0);
    e[j] = 2;
    battery.push_back(e);
  }
  return battery;
}

Point generic_base_point(const SpacePtr& space) {
  Coords c(space->dim);
  for (int j = 0; j < space->dim; ++j)
    c[j] = wrap_unit(0.5441 * (j + 1) + 0.1234567);
  return reduce(c, space);
}

Verdict shift_verdict(const Coords& shift) {
  bool any_rational = false;
  for (double a : shift)
    if (is_rational(a)) any_rational = true;
  if (any_rational) return Verdict::Dependent;
  if (shift.size() == 1) return Verdict::RationallyIndependent;
  // look for small integer relations m*a_i + n*a_j in Z
  for (size_t i = 0; i < shift.size(); ++i)
    for (size_t j = i + 1; j < shift.size(); ++j)
      for (int m = -10; m <= 10; ++m)
        for (int n = -10; n <= 10; ++n) {
          if (m == 0 && n == 0) continue;
          double v = m * shift[i] + n * shift[j];
          if (std::fabs(v - std::round(v)) < 1e-9) return Verdict::Dependent;
        }
  return Verdict::Unknown;
}

HypothesisEntry assess(const std::string& name, const Transformation* direct,
                       const std::function<Point(const Point&)>& step,
                       std::optional<Coords> shift, const SpacePtr& space,
                       long weyl_length, double weyl_threshold) {
  HypothesisEntry e;
  e.name = name;
  e.verdict = shift ? shift_verdict(*shift) : Verdict::Unknown;
  (void)direct;
  Point x0 = generic_base_point(space);
  double worst = 0.0;
  for (const auto& k : frequency_battery(space->dim))
    worst = std::max(worst, weyl_sum(step, x0, k, weyl_length));
  e.weyl_sum = worst;
  e.flagged = worst > weyl_threshold;
  return e;
}

}  // namespace

ErgodicityReport check_hypotheses(const SystemSpec& spec, long weyl_length,
                                  double weyl_threshold) {
  ErgodicityReport rep;
  const auto& maps = spec.maps;
  for (size_t i = 0; i < maps.size(); ++i) {
    const Transformation& t = maps[i];
    rep.entries.push_back(assess(
        "T" + std::to_string(i + 1), &t,
        [&t](const Point& x) { return apply(t, x); }, as_rotation_shift(t),
        spec.space, weyl_length, weyl_threshold));
  }
  for (size_t i = 0; i < maps.size(); ++i) {
    for (size_t j = 0; j < maps.size(); ++j) {
      if (i == j) continue;
      Transformation inv_j = inverse(maps[j]);
      const Transformation& ti = maps[i];
      std::optional<Coords> diff_shift;
      auto si = as_rotation_shift(ti);
      auto sj = as_rotation_shift(maps[j]);
      if (si && sj) {
        Coords d(si->size());
        for (size_t c = 0; c < d.size(); ++c) d[c] = (*si)[c] - (*sj)[c];
        diff_shift = std::move(d);
      }
      rep.entries.push_back(assess(
          "T" + std::to_string(i + 1) + "*T" + std::to_string(j + 1) + "^-1",
          nullptr,
          [&ti, inv_j](const Point& x) { return apply(ti, apply(inv_j, x)); },
          std::move(diff_shift), spec.space, weyl_length, weyl_threshold));
    }
  }
  return rep;
}

Observable kronecker_project(const Observable& f, const SystemSpec& spec) {
  if (spec.space->kind == SpaceKind::Torus) return f;
  if (spec.space->kind != SpaceKind::Heisenberg)
    throw Error("unsupported-space",
                "Z1 projection is not available in closed form on this space");
  if (f.poly) {
    FourierPoly p;
    p.dim = 3;
    for (const auto& t : f.poly->terms)
      if (t.freq[2] == 0) p.terms.push_back(t);
    p.canonicalize();
    Observable o = Observable::from_poly(std::move(p), f.real_valued);
    o.sup_bound = std::min(o.sup_bound, f.sup_bound);
    return o;
  }
  auto g = f;
  return Observable::from_fn(
      [g](const Point& x) {
        // 256-point fiber quadrature over z
        std::complex<double> s{0.0, 0.0};
        Point y = x;
        for (int j = 0; j < 256; ++j) {
          y.coords[2] = static_cast<double>(j) / 256.0;
          s += g.eval(y);
        }
        return s / 256.0;
      },
      f.sup_bound, f.real_valued);
}

}  // namespace ergolab
