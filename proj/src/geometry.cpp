#include "ergolab/geometry.hpp"

namespace ergolab {

SpacePtr Space::torus(int d) {
  if (d < 1) throw Error("bad-dimension", "torus dimension must be positive");
  auto s = std::make_shared<Space>();
  s->kind = SpaceKind::Torus;
  s->dim = d;
  return s;
}

SpacePtr Space::heisenberg() {
  auto s = std::make_shared<Space>();
  s->kind = SpaceKind::Heisenberg;
  s->dim = 3;
  return s;
}

SpacePtr Space::product(std::vector<SpacePtr> fs) {
  if (fs.empty()) throw Error("bad-dimension", "empty product space");
  auto s = std::make_shared<Space>();
  s->kind = SpaceKind::Product;
  s->dim = 0;
  for (const auto& f : fs) s->dim += f->dim;
  s->factors = std::move(fs);
  return s;
}

bool same_space(const Space& a, const Space& b) {
  if (a.kind != b.kind || a.dim != b.dim) return false;
  if (a.kind == SpaceKind::Product) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
      if (!same_space(*a.factors[i], *b.factors[i])) return false;
  }
  return true;
}

double torus_dist(const Coords& a, const Coords& b) {
  if (a.size() != b.size())
    throw Error("dimension-mismatch", "coordinate lengths differ");
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    d = std::max(d, torus_dist1(a[i], b[i]));
  return d;
}

double mod1_scaled(double n, double a) {
  double hi = n * a;
  double lo = std::fma(n, a, -hi);  // n*a = hi + lo exactly
  double f = hi - std::floor(hi);   // exact: both multiples of ulp(hi)
  return wrap_unit(f + lo);
}

double mod1_prod(double q, double a, double b) {
  double chi = a * b;
  double clo = std::fma(a, b, -chi);  // a*b = chi + clo exactly
  return wrap_unit(mod1_scaled(q, chi) + q * clo);
}

std::array<double, 3> heis_mul(const std::array<double, 3>& a,
                               const std::array<double, 3>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]};
}

std::array<double, 3> heis_inv(const std::array<double, 3>& a) {
  return {-a[0], -a[1], a[0] * a[1] - a[2]};
}

void reduce_in_place(Coords& c, const Space& space, int offset) {
  switch (space.kind) {
    case SpaceKind::Torus:
      for (int i = 0; i < space.dim; ++i)
        c[offset + i] = wrap_unit(c[offset + i]);
      break;
    case SpaceKind::Heisenberg: {
      double& x = c[offset];
      double& y = c[offset + 1];
      double& z = c[offset + 2];
      x = wrap_unit(x);
      double n = -std::floor(y);
      y = wrap_unit(y);
      z += x * n;  // right-multiplication by (0,n,0) shifts z by x*n
      z = wrap_unit(z);
      break;
    }
    case SpaceKind::Product: {
      int off = offset;
      for (const auto& f : space.factors) {
        reduce_in_place(c, *f, off);
        off += f->dim;
      }
      break;
    }
  }
}

Point reduce(const Coords& raw, const SpacePtr& space) {
  if (static_cast<int>(raw.size()) != space->dim)
    throw Error("dimension-mismatch",
                "raw coordinate count " + std::to_string(raw.size()) +
                    " != space dimension " + std::to_string(space->dim));
  Point p{raw, space};
  reduce_in_place(p.coords, *space);
  return p;
}

}  // namespace ergolab
