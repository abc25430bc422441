#ifndef ERGOLAB_FOURIER_ORACLE_HPP
#define ERGOLAB_FOURIER_ORACLE_HPP

#include "ergolab/averaging.hpp"

namespace ergolab {

/// Closed-form limit of a rotation multiple average, as a Fourier expansion
/// in the starting point.
struct LimitFunction {
  FourierPoly poly;
  std::string provenance;
  bool conditional = false;  // independence verdicts were heuristic
};

/// Shift alpha_i written as (multiplier m_i) x (generator g_i); shifts with a
/// rationally dependent ratio share a generator. Resonance detection then
/// runs in exact integer arithmetic and never touches the generator values.
struct ShiftRelation {
  int generator = 0;
  long long multiplier = 1;
  bool rational = false;  // shift itself is num/den
  long long num = 0, den = 1;
};

struct ShiftRelations {
  std::vector<ShiftRelation> entries;
  bool certain = true;
};

/// Detect rational dependences among the shifts with the continued-fraction
/// test (exact small-denominator ratios accepted, otherwise independent).
ShiftRelations detect_relations(const std::vector<double>& shifts);

/// Limit of (1/N) sum prod f_i(x + n alpha_i): the resonant part
/// sum over (k_1..k_l) with sum k_i alpha_i in Z of prod c_i e((sum k_i) x).
LimitFunction rotation_multi_limit(const std::vector<double>& shifts,
                                   const std::vector<FourierPoly>& fs);
LimitFunction rotation_multi_limit(const ShiftRelations& rel,
                                   const std::vector<FourierPoly>& fs);

struct IdentityGap {
  double gap_between = 0.0;  // ||A_N(T=R_alpha) - A_N(S=R_beta)||_2
  double gap_alpha = 0.0;    // distance of each to the alpha-free oracle
  double gap_beta = 0.0;
  LimitFunction oracle;
};

/// Theorem-1.2-style comparison for the progression (T, T^2, ..., T^l).
IdentityGap progression_identity_gap(double alpha, double beta,
                                     const std::vector<FourierPoly>& fs, int l,
                                     long N);

/// Limit of the shared-factor product counterexample: integral of |f|^2.
double product_counterexample_limit(const FourierPoly& f);

/// Evaluate a Fourier polynomial on sampler points (snapshot form).
Snapshot poly_snapshot(const FourierPoly& p, const SpacePtr& space,
                       const SamplerSpec& sampler);

}  // namespace ergolab

#endif
