#ifndef ERGOLAB_SAMPLER_HPP
#define ERGOLAB_SAMPLER_HPP

#include <cstdint>

#include "ergolab/geometry.hpp"

namespace ergolab {

/// splitmix64; used as a counter-based generator so that sample i is a pure
/// function of (seed, i).
uint64_t splitmix64(uint64_t state);
double uniform01(uint64_t seed, uint64_t index);

/// Deterministic quadrature node generator for a space's invariant measure.
///  - Grid: tensor grid i/r per axis (exact for trig polynomials of degree
///    below the resolution).
///  - LowDiscrepancy: rank-1 Korobov lattice x_i = frac(i * z / n + shift),
///    z = (1, a, a^2, ...) mod n, with `a` the smallest multiplier whose dual
///    lattice avoids all nonzero frequency vectors with |k|_inf <= 8; the
///    optional Cranley-Patterson shift is derived from the seed (0 = none).
///  - Random: splitmix64 counter stream.
struct SamplerSpec {
  enum class Mode { Grid, LowDiscrepancy, Random };
  Mode mode = Mode::Grid;
  std::vector<int> resolution;  // Grid: per-axis point counts
  long count = 0;               // LowDiscrepancy / Random
  uint64_t seed = 0;

  static SamplerSpec grid(std::vector<int> resolution);
  static SamplerSpec low_discrepancy(long count, uint64_t seed = 0);
  static SamplerSpec random(long count, uint64_t seed);

  long total_points(int dim) const;
  bool operator==(const SamplerSpec&) const = default;
};

std::vector<Point> sample_points(const SamplerSpec& s, const SpacePtr& space);

/// Korobov multiplier used for the given (n, dim); exposed for tests.
long korobov_multiplier(long n, int dim, int max_freq = 8);

}  // namespace ergolab

#endif
