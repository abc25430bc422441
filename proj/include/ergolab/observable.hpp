#ifndef ERGOLAB_OBSERVABLE_HPP
#define ERGOLAB_OBSERVABLE_HPP

#include <complex>
#include <functional>
#include <optional>

#include "ergolab/geometry.hpp"

namespace ergolab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// e(t) = exp(2*pi*i*t)
inline std::complex<double> unit_exp(double t) {
  return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}

struct FourierTerm {
  std::vector<int> freq;
  std::complex<double> coeff;
};

/// Finite Fourier expansion on a torus of the given dimension.
struct FourierPoly {
  int dim = 1;
  std::vector<FourierTerm> terms;

  std::complex<double> eval(const Coords& x) const;
  std::complex<double> coefficient(const std::vector<int>& k) const;
  void add_term(std::vector<int> k, std::complex<double> c);
  void canonicalize();  // sort by frequency, merge, drop zeros
  int max_abs_freq() const;
  double coeff_abs_sum() const;
  bool conjugate_symmetric(double tol = 1e-12) const;
};

FourierPoly poly_mul(const FourierPoly& a, const FourierPoly& b);
FourierPoly poly_conj(const FourierPoly& a);
FourierPoly poly_scale(const FourierPoly& a, std::complex<double> c);
FourierPoly poly_add(const FourierPoly& a, const FourierPoly& b);

/// A bounded function on points: a finite Fourier expansion or a black box.
struct Observable {
  std::optional<FourierPoly> poly;
  std::function<std::complex<double>(const Point&)> fn;
  bool real_valued = true;
  double sup_bound = 1.0;

  std::complex<double> eval(const Point& x) const;
  double eval_real(const Point& x) const;

  static Observable constant(double c);
  static Observable constant_poly(double c, int dim);
  static Observable from_poly(FourierPoly p, bool real_valued = true);
  static Observable from_fn(std::function<std::complex<double>(const Point&)> f,
                            double sup_bound, bool real_valued);

  /// cos(2*pi*k.x), sin(2*pi*k.x), e(k.x) on a dim-dimensional torus domain.
  static Observable cosine(std::vector<int> k);
  static Observable sine(std::vector<int> k);
  static Observable character(std::vector<int> k);
};

}  // namespace ergolab

#endif
