#ifndef ERGOLAB_GEOMETRY_HPP
#define ERGOLAB_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ergolab {

/// Structured error carrying a short machine-readable code.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string code_, const std::string& msg)
      : std::runtime_error(msg), code(std::move(code_)) {}
};

// Coordinates of a point in a fundamental domain. Small-buffer storage keeps
// orbit loops off the heap for every space used here (dim <= 8).
using Coords = boost::container::small_vector<double, 8>;

enum class SpaceKind { Torus, Heisenberg, Product };

struct Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A space with a fundamental domain [0,1)^dim and normalized invariant
/// measure (Lebesgue there; Haar for the Heisenberg quotient).
struct Space {
  SpaceKind kind;
  int dim;
  std::vector<SpacePtr> factors;  // Product only

  static SpacePtr torus(int d);
  static SpacePtr heisenberg();
  static SpacePtr product(std::vector<SpacePtr> fs);
};

bool same_space(const Space& a, const Space& b);

struct Point {
  Coords coords;
  SpacePtr space;
};

/// x - floor(x), clamped into [0,1).
inline double wrap_unit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;
  if (r < 0.0) r += 1.0;
  return r;
}

/// Distance on the circle R/Z.
inline double torus_dist1(double a, double b) {
  double d = std::fabs(wrap_unit(a) - wrap_unit(b));
  return d <= 0.5 ? d : 1.0 - d;
}

/// Sup over coordinates of the circle distance.
double torus_dist(const Coords& a, const Coords& b);

// wrap(n * a) without the cancellation loss of forming n*a directly; exact
// integer part removal via an FMA product split. Safe for |n| up to ~2^52.
double mod1_scaled(double n, double a);

// wrap(q * a * b) with a*b split into a double-double product first.
double mod1_prod(double q, double a, double b);

// Heisenberg group law (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
std::array<double, 3> heis_mul(const std::array<double, 3>& a,
                               const std::array<double, 3>& b);
std::array<double, 3> heis_inv(const std::array<double, 3>& a);

/// Reduce raw coordinates into the fundamental domain of `space`.
/// Torus: coordinate-wise x - floor(x). Heisenberg: right-multiply by lattice
/// elements, reducing x, then y (z absorbs the x*n correction), then z.
Point reduce(const Coords& raw, const SpacePtr& space);
void reduce_in_place(Coords& c, const Space& space, int offset = 0);

}  // namespace ergolab

#endif
