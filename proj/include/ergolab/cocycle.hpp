#ifndef ERGOLAB_COCYCLE_HPP
#define ERGOLAB_COCYCLE_HPP

#include "ergolab/system.hpp"

namespace ergolab {

/// Fiber-shift data for a group extension by the torus T^target_dim: one
/// component map per base transformation, each with values taken mod 1.
struct Cocycle {
  int target_dim = 1;
  // component_maps[i][c]: c-th fiber coordinate of rho_i, a map on the base
  std::vector<std::vector<Observable>> component_maps;
  std::vector<Transformation> base_maps;
};

/// A point of the cube X^{[k]}: 2^k coordinates indexed by {0,1}^k.
struct CubePoint {
  int k = 1;
  std::vector<Point> coordinates;  // size 2^k, index bits = epsilon
};

/// The coboundary d_i f = f o T - f, taken mod 1.
Observable coboundary(const Observable& f, const Transformation& T);

struct CocycleCheck {
  bool compatible = false;
  double max_residual = 0.0;  // sup torus-distance of d_i rho_j vs d_j rho_i
};

/// d_i rho_j = d_j rho_i for all pairs, tested on sampled base points;
/// exactly the condition for the lifted skew-product maps to commute.
CocycleCheck l_cocycle_check(const Cocycle& rho, const SpacePtr& base_space,
                             const SamplerSpec& sampler, double tol);

/// System on base x T^d with maps T_i'(y,v) = (T_i y, v + rho_i(y)).
/// Throws when the compatibility check fails at tol 1e-9.
SystemSpec skew_product(const SystemSpec& base, const Cocycle& rho);

/// Same construction without the compatibility gate; used to compare
/// check_commuting with l_cocycle_check on incompatible inputs.
SystemSpec skew_product_unchecked(const SystemSpec& base, const Cocycle& rho);

/// R_v(y,u) = (y, u + v) on a skew-product (base x fiber-torus) space.
Transformation vertical_rotation(const std::vector<double>& v,
                                 const SpacePtr& product_space);

/// sup over sampled y and i of dist(rho_i(y), c_i + d_i f(y)).
double quasi_coboundary_residual(const Cocycle& rho, const Observable& f,
                                 const std::vector<double>& c,
                                 const SpacePtr& base_space,
                                 const SamplerSpec& sampler);

/// Signed cube sum sum_eps (-1)^|eps| rho(x_eps), reduced mod 1.
double delta_k(const Observable& rho, int k, const CubePoint& x);

}  // namespace ergolab

#endif
