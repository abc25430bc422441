#ifndef ERGOLAB_SEMINORM_HPP
#define ERGOLAB_SEMINORM_HPP

#include "ergolab/averaging.hpp"

namespace ergolab {

/// Truncation lengths M_1..M_{k-1} for the seminorm recursion, one per
/// averaging level. `force` overrides the cost guard.
struct Schedule {
  std::vector<long> depths;
  bool force = false;

  static Schedule defaults(int k);
};

struct SeminormEstimate {
  int k = 1;
  double value = 0.0;
  Schedule schedule;
  SamplerSpec quadrature;
  std::vector<std::pair<long, double>> trace;  // top-level running value
  double clamped_magnitude = 0.0;
};

/// |mean of f| against the system's invariant measure.
double seminorm1(const Observable& f, const SystemSpec& spec,
                 const SamplerSpec& sampler);

/// Host-Kra seminorm estimate via the averaging recursion, truncated at the
/// schedule depths, quadrature from spec.sampler.
SeminormEstimate seminorm(const Observable& f, int k, const Transformation& T,
                          const SystemSpec& spec, const Schedule& schedule);

struct EqualityCheck {
  double discrepancy = 0.0;
  bool hypotheses_ok = true;
};

EqualityCheck seminorm_equality_check(const Observable& f, int k,
                                      const Transformation& T,
                                      const Transformation& S,
                                      const SystemSpec& spec,
                                      const Schedule& schedule);

struct BoundCheck {
  double avg_norm = 0.0;
  double min_seminorm = 0.0;
  double satisfied_with_slack = 0.0;  // min_seminorm + slack - avg_norm
  bool applicable = true;             // hypotheses held
};

BoundCheck bound_check(const SystemSpec& spec,
                       const std::vector<Observable>& fs, long N,
                       const Schedule& schedule, const SamplerSpec& sampler,
                       double slack = 0.02);

struct CharacteristicCheck {
  double full_avg = 0.0;       // ||A_N(f1,f2)||_2
  double projected_avg = 0.0;  // ||A_N(Ef1,Ef2)||_2
  double gap = 0.0;            // ||A_N(f1,f2) - A_N(Ef1,Ef2)||_2
};

CharacteristicCheck characteristic_check(const SystemSpec& spec,
                                         const std::vector<Observable>& fs,
                                         long N, const SamplerSpec& sampler);

}  // namespace ergolab

#endif
