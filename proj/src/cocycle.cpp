#include "ergolab/cocycle.hpp"

namespace ergolab {

Observable coboundary(const Observable& f, const Transformation& T) {
  auto Tp = std::make_shared<Transformation>(T);
  auto g = f;
  return Observable::from_fn(
      [Tp, g](const Point& y) {
        double d = g.eval(apply(*Tp, y)).real() - g.eval(y).real();
        return std::complex<double>{wrap_unit(d), 0.0};
      },
      1.0, true);
}

namespace {

void validate(const Cocycle& rho) {
  if (rho.component_maps.size() != rho.base_maps.size())
    throw Error("arity-mismatch",
                "cocycle needs one component per base transformation");
  for (const auto& comps : rho.component_maps)
    if (static_cast<int>(comps.size()) != rho.target_dim)
      throw Error("dimension-mismatch",
                  "cocycle component count != fiber dimension");
}

// c-th coordinate of d_i rho_j at y
double del(const Cocycle& rho, size_t i, size_t j, int c, const Point& y) {
  const Observable& f = rho.component_maps[j][c];
  return wrap_unit(f.eval(apply(rho.base_maps[i], y)).real() -
                   f.eval(y).real());
}

}  // namespace

CocycleCheck l_cocycle_check(const Cocycle& rho, const SpacePtr& base_space,
                             const SamplerSpec& sampler, double tol) {
  validate(rho);
  auto pts = sample_points(sampler, base_space);
  CocycleCheck r;
  const size_t l = rho.base_maps.size();
  for (const auto& y : pts)
    for (size_t i = 0; i < l; ++i)
      for (size_t j = i + 1; j < l; ++j)
        for (int c = 0; c < rho.target_dim; ++c)
          r.max_residual =
              std::max(r.max_residual,
                       torus_dist1(del(rho, i, j, c, y), del(rho, j, i, c, y)));
  r.compatible = r.max_residual <= tol;
  return r;
}

SystemSpec skew_product_unchecked(const SystemSpec& base, const Cocycle& rho) {
  validate(rho);
  if (rho.base_maps.size() != base.maps.size())
    throw Error("arity-mismatch", "cocycle arity != base system arity");
  SystemSpec sys;
  sys.maps.reserve(base.maps.size());
  for (size_t i = 0; i < base.maps.size(); ++i)
    sys.maps.push_back(
        Transformation::skew_lift(base.maps[i], rho.component_maps[i]));
  sys.space = sys.maps.front().space;
  SamplerSpec s = base.sampler;
  if (s.mode == SamplerSpec::Mode::Grid) {
    int extra = rho.target_dim;
    int rep = s.resolution.empty() ? 16 : s.resolution.back();
    for (int i = 0; i < extra; ++i) s.resolution.push_back(rep);
  }
  sys.sampler = s;
  return sys;
}

SystemSpec skew_product(const SystemSpec& base, const Cocycle& rho) {
  auto chk = l_cocycle_check(rho, base.space, base.sampler, 1e-9);
  if (!chk.compatible)
    throw Error("incompatible-cocycle",
                "l-cocycle compatibility residual " +
                    std::to_string(chk.max_residual));
  return skew_product_unchecked(base, rho);
}

Transformation vertical_rotation(const std::vector<double>& v,
                                 const SpacePtr& product_space) {
  if (product_space->kind != SpaceKind::Product ||
      product_space->factors.back()->kind != SpaceKind::Torus)
    throw Error("space-mismatch",
                "vertical rotation needs a base x fiber-torus product space");
  int fd = product_space->factors.back()->dim;
  if (static_cast<int>(v.size()) != fd)
    throw Error("dimension-mismatch", "fiber element length != fiber dim");
  Coords shift(product_space->dim, 0.0);
  for (int i = 0; i < fd; ++i)
    shift[product_space->dim - fd + i] = wrap_unit(v[i]);
  Transformation t;
  t.kind = MapKind::Rotation;
  t.space = product_space;
  t.shift = std::move(shift);
  return t;
}

double quasi_coboundary_residual(const Cocycle& rho, const Observable& f,
                                 const std::vector<double>& c,
                                 const SpacePtr& base_space,
                                 const SamplerSpec& sampler) {
  validate(rho);
  if (rho.target_dim != 1)
    throw Error("dimension-mismatch",
                "quasi-coboundary residual implemented for 1-d fibers");
  if (c.size() != rho.base_maps.size())
    throw Error("arity-mismatch", "one constant per base transformation");
  auto pts = sample_points(sampler, base_space);
  double worst = 0.0;
  for (const auto& y : pts) {
    double fy = f.eval(y).real();
    for (size_t i = 0; i < rho.base_maps.size(); ++i) {
      double cand = wrap_unit(
          c[i] + f.eval(apply(rho.base_maps[i], y)).real() - fy);
      double got = wrap_unit(rho.component_maps[i][0].eval(y).real());
      worst = std::max(worst, torus_dist1(got, cand));
    }
  }
  return worst;
}

double delta_k(const Observable& rho, int k, const CubePoint& x) {
  if (x.k != k || x.coordinates.size() != (1u << k))
    throw Error("arity-mismatch", "cube point needs 2^k coordinates");
  double s = 0.0;
  for (size_t eps = 0; eps < x.coordinates.size(); ++eps) {
    int bits = __builtin_popcount(static_cast<unsigned>(eps));
    double v = rho.eval(x.coordinates[eps]).real();
    s += (bits % 2 == 0) ? v : -v;
  }
  return wrap_unit(s);
}

}  // namespace ergolab
