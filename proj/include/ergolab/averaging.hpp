#ifndef ERGOLAB_AVERAGING_HPP
#define ERGOLAB_AVERAGING_HPP

#include "ergolab/system.hpp"

namespace ergolab {

/// Compensated (Kahan) accumulator; fixed left-to-right order everywhere.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

struct KahanC {
  Kahan re, im;
  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.sum, im.sum}; }
};

/// Values of a function on a fixed quadrature point set.
struct Snapshot {
  std::shared_ptr<const std::vector<Point>> points;
  std::vector<std::complex<double>> values;
};

struct AverageReport {
  std::vector<long> n_grid;
  std::vector<double> l2_norms;
  std::vector<double> cauchy_gaps;  // ||A_{n[j+1]} - A_{n[j]}||_2
  double fitted_decay_exponent = 0.0;
  bool decay_fit_valid = false;  // false when every gap vanished
};

struct VdcDiagnostic {
  double lhs = 0.0;  // ||(1/N) sum u_n||_2^2
  double rhs = 0.0;  // (1/M) sum_m |(1/N) sum_n <u_{n+m}, u_n>|
  long N = 0, M = 0;
};

/// (1/N) sum_{n<N} prod_i f_i(T_i^n x), compensated summation.
std::complex<double> multi_average_at(const SystemSpec& spec,
                                      const std::vector<Observable>& fs,
                                      const Point& x, long N);

/// Evaluate the N-average at every sampler point. The parallel version fans
/// out over sample points (orbit sums stay sequential) and is bit-identical
/// for any worker count.
Snapshot multi_average_function(const SystemSpec& spec,
                                const std::vector<Observable>& fs, long N,
                                const SamplerSpec& sampler);

/// Plain serial reference: direct closed-form iterates and direct Fourier
/// evaluation; used to validate the optimized path.
Snapshot multi_average_function_serial(const SystemSpec& spec,
                                       const std::vector<Observable>& fs,
                                       long N, const SamplerSpec& sampler);

/// One orbit pass per point, snapshot recorded at every N in n_grid.
std::vector<Snapshot> multi_average_series(const SystemSpec& spec,
                                           const std::vector<Observable>& fs,
                                           const std::vector<long>& n_grid,
                                           const SamplerSpec& sampler);

double l2_norm(const Snapshot& s);
double l2_diff(const Snapshot& a, const Snapshot& b);

AverageReport convergence_report(const SystemSpec& spec,
                                 const std::vector<Observable>& fs,
                                 const std::vector<long>& n_grid,
                                 const SamplerSpec& sampler);

VdcDiagnostic vdc_diagnostic(const SystemSpec& spec,
                             const std::vector<Observable>& fs, long N, long M,
                             const SamplerSpec& sampler);

}  // namespace ergolab

#endif
