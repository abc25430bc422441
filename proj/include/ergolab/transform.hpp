#ifndef ERGOLAB_TRANSFORM_HPP
#define ERGOLAB_TRANSFORM_HPP

#include "ergolab/observable.hpp"

namespace ergolab {

enum class MapKind { Identity, Rotation, NilRotation, Product, SkewLift };

/// A measure-preserving map of its space. Rotation and NilRotation have O(1)
/// closed-form n-th iterates; SkewLift iterates by repeated application.
struct Transformation {
  MapKind kind = MapKind::Identity;
  SpacePtr space;

  Coords shift;                     // Rotation
  std::array<double, 3> element{};  // NilRotation group element (alpha,beta,gamma)
  std::vector<Transformation> parts;  // Product

  // SkewLift over base; fiber is Torus(fiber_dim), one shift map per fiber
  // coordinate, each evaluated on base points.
  std::shared_ptr<const Transformation> base;
  std::vector<Observable> fiber_shift;
  int fiber_dim = 0;

  static Transformation identity(SpacePtr s);
  static Transformation rotation(SpacePtr s, Coords shift);
  static Transformation nilrotation(double alpha, double beta, double gamma);
  static Transformation product(std::vector<Transformation> parts);
  static Transformation skew_lift(Transformation base_map,
                                  std::vector<Observable> rho);
};

Point apply(const Transformation& t, const Point& x);
void apply_in_place(const Transformation& t, Coords& c, int offset = 0);

/// n-fold application, closed form where available. n >= 0.
Point iterate(const Transformation& t, long long n, const Point& x);

Transformation inverse(const Transformation& t);

/// Flatten to a plain torus translation (Rotation / Identity / products
/// thereof). Empty when the map is not a torus rotation.
std::optional<Coords> as_rotation_shift(const Transformation& t);

}  // namespace ergolab

#endif
