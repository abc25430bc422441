#include "ergolab/sampler.hpp"

namespace ergolab {

uint64_t splitmix64(uint64_t state) {
  uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(uint64_t seed, uint64_t index) {
  uint64_t h = splitmix64(splitmix64(seed) ^ index);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

SamplerSpec SamplerSpec::grid(std::vector<int> resolution) {
  SamplerSpec s;
  s.mode = Mode::Grid;
  s.resolution = std::move(resolution);
  return s;
}

SamplerSpec SamplerSpec::low_discrepancy(long count, uint64_t seed) {
  SamplerSpec s;
  s.mode = Mode::LowDiscrepancy;
  s.count = count;
  s.seed = seed;
  return s;
}

SamplerSpec SamplerSpec::random(long count, uint64_t seed) {
  SamplerSpec s;
  s.mode = Mode::Random;
  s.count = count;
  s.seed = seed;
  return s;
}

long SamplerSpec::total_points(int dim) const {
  if (mode != Mode::Grid) return count;
  if (static_cast<int>(resolution.size()) != dim)
    throw Error("dimension-mismatch", "grid resolution length != dimension");
  long n = 1;
  for (int r : resolution) {
    if (r < 1) throw Error("bad-argument", "grid resolution must be >= 1");
    n *= r;
  }
  return n;
}

long korobov_multiplier(long n, int dim, int max_freq) {
  if (dim == 1) return 1;
  for (long a = 2; a < n; ++a) {
    // powers of a mod n
    std::vector<long> z(dim);
    z[0] = 1;
    for (int j = 1; j < dim; ++j) z[j] = (z[j - 1] * a) % n;
    // reject if some small nonzero k has k.z = 0 mod n
    bool ok = true;
    std::vector<int> k(dim, -max_freq);
    while (ok) {
      long dot = 0;
      bool zero = true;
      for (int j = 0; j < dim; ++j) {
        dot += k[j] * z[j];
        if (k[j] != 0) zero = false;
      }
      if (!zero && ((dot % n) + n) % n == 0) ok = false;
      int j = 0;
      for (; j < dim; ++j) {
        if (k[j] < max_freq) {
          ++k[j];
          break;
        }
        k[j] = -max_freq;
      }
      if (j == dim) break;
    }
    if (ok) return a;
  }
  // small point counts cannot avoid every |k|_inf <= max_freq dual vector
  if (max_freq > 1) return korobov_multiplier(n, dim, max_freq / 2);
  throw Error("bad-argument", "no admissible Korobov multiplier");
}

std::vector<Point> sample_points(const SamplerSpec& s, const SpacePtr& space) {
  const int dim = space->dim;
  std::vector<Point> pts;
  switch (s.mode) {
    case SamplerSpec::Mode::Grid: {
      if (static_cast<int>(s.resolution.size()) != dim)
        throw Error("dimension-mismatch",
                    "grid resolution length != space dimension");
      long total = s.total_points(dim);
      pts.reserve(total);
      std::vector<long> idx(dim, 0);
      for (long i = 0; i < total; ++i) {
        Coords c(dim);
        for (int j = 0; j < dim; ++j)
          c[j] = static_cast<double>(idx[j]) / s.resolution[j];
        pts.push_back(Point{std::move(c), space});
        for (int j = dim - 1; j >= 0; --j) {
          if (++idx[j] < s.resolution[j]) break;
          idx[j] = 0;
        }
      }
      break;
    }
    case SamplerSpec::Mode::LowDiscrepancy: {
      if (s.count < 1) throw Error("bad-argument", "count must be >= 1");
      long a = korobov_multiplier(s.count, dim);
      std::vector<long> z(dim);
      z[0] = 1 % s.count;
      for (int j = 1; j < dim; ++j) z[j] = (z[j - 1] * a) % s.count;
      Coords shift(dim, 0.0);
      if (s.seed != 0)
        for (int j = 0; j < dim; ++j)
          shift[j] = uniform01(s.seed, static_cast<uint64_t>(j));
      pts.reserve(s.count);
      for (long i = 0; i < s.count; ++i) {
        Coords c(dim);
        for (int j = 0; j < dim; ++j) {
          double v = static_cast<double>((i * z[j]) % s.count) /
                         static_cast<double>(s.count) +
                     shift[j];
          c[j] = wrap_unit(v);
        }
        pts.push_back(Point{std::move(c), space});
      }
      break;
    }
    case SamplerSpec::Mode::Random: {
      if (s.count < 1) throw Error("bad-argument", "count must be >= 1");
      pts.reserve(s.count);
      for (long i = 0; i < s.count; ++i) {
        Coords c(dim);
        for (int j = 0; j < dim; ++j)
          c[j] = uniform01(s.seed,
                           static_cast<uint64_t>(i) * 64u +
                               static_cast<uint64_t>(j));
        pts.push_back(Point{std::move(c), space});
      }
      break;
    }
  }
  return pts;
}

}  // namespace ergolab
