#ifndef ERGOLAB_SYSTEM_HPP
#define ERGOLAB_SYSTEM_HPP

#include "ergolab/sampler.hpp"
#include "ergolab/transform.hpp"

namespace ergolab {

enum class Verdict { RationallyIndependent, Dependent, Unknown };

struct HypothesisEntry {
  std::string name;       // e.g. "T1", "T1*T2^-1"
  Verdict verdict = Verdict::Unknown;
  double weyl_sum = 0.0;  // worst |1/N sum e(k.orbit)| over the battery
  bool flagged = false;   // weyl_sum above the equidistribution threshold
};

struct ErgodicityReport {
  std::vector<HypothesisEntry> entries;
  bool all_pass() const;
};

/// A space, an ordered tuple of commuting maps, and the quadrature sampler
/// for its invariant measure. Immutable after construction.
struct SystemSpec {
  SpacePtr space;
  std::vector<Transformation> maps;
  SamplerSpec sampler;
  std::optional<ErgodicityReport> hypothesis_report;
};

struct CommutingCheck {
  bool commuting = true;
  double max_discrepancy = 0.0;
};

CommutingCheck check_commuting(const SystemSpec& spec, long sample_count,
                               double tol);

/// Continued-fraction rationality test: expansion truncated when a partial
/// quotient exceeds max_den (declared irrational) or the remainder vanishes.
bool is_rational(double x, long max_den = 1000000, long* num = nullptr,
                 long* den = nullptr);

ErgodicityReport check_hypotheses(const SystemSpec& spec,
                                  long weyl_length = 10000,
                                  double weyl_threshold = 0.05);

/// Projection onto the explicit Kronecker factor: identity for torus
/// rotations, fiber average over z for the Heisenberg quotient.
Observable kronecker_project(const Observable& f, const SystemSpec& spec);

/// Weyl sum |1/N sum_n e(k . x_n)| along the orbit of `step` from x0.
double weyl_sum(const std::function<Point(const Point&)>& step, const Point& x0,
                const std::vector<int>& freq, long n);

}  // namespace ergolab

#endif
