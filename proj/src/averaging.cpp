#include "ergolab/averaging.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ergolab {

namespace {

bool space_is_toral(const Space& s) {
  if (s.kind == SpaceKind::Torus) return true;
  if (s.kind == SpaceKind::Heisenberg) return false;
  for (const auto& f : s.factors)
    if (!space_is_toral(*f)) return false;
  return true;
}

bool fast_path_applies(const SystemSpec& spec,
                       const std::vector<Observable>& fs) {
  if (!space_is_toral(*spec.space)) return false;
  for (const auto& t : spec.maps)
    if (!as_rotation_shift(t)) return false;
  for (const auto& f : fs)
    if (!f.poly) return false;
  return true;
}

void check_arity(const SystemSpec& spec, const std::vector<Observable>& fs) {
  if (fs.size() != spec.maps.size())
    throw Error("arity-mismatch",
                "observable count != transformation count");
}

// Orbit averages at one point, recorded at every N in the (increasing) grid.
void point_series(const SystemSpec& spec, const std::vector<Observable>& fs,
                  const Point& x, const std::vector<long>& n_grid,
                  std::complex<double>* out) {
  const size_t l = fs.size();
  const long n_max = n_grid.back();
  KahanC acc;
  size_t g = 0;

  if (fast_path_applies(spec, fs)) {
    // Per-term phase recurrence: e(k.(x+n a)) advances by the fixed factor
    // e(k.a); no trig calls inside the orbit loop.
    struct Term {
      std::complex<double> phase, step;
    };
    std::vector<std::vector<Term>> terms(l);
    for (size_t i = 0; i < l; ++i) {
      Coords a = *as_rotation_shift(spec.maps[i]);
      for (const auto& t : fs[i].poly->terms) {
        double px = 0.0, pa = 0.0;
        for (size_t j = 0; j < a.size(); ++j) {
          px += t.freq[j] * x.coords[j];
          pa += t.freq[j] * a[j];
        }
        terms[i].push_back({t.coeff * unit_exp(px), unit_exp(pa)});
      }
    }
    for (long n = 0; n < n_max; ++n) {
      std::complex<double> prod{1.0, 0.0};
      for (size_t i = 0; i < l; ++i) {
        std::complex<double> v{0.0, 0.0};
        for (const auto& t : terms[i]) v += t.phase;
        prod *= v;
      }
      acc.add(prod);
      for (size_t i = 0; i < l; ++i)
        for (auto& t : terms[i]) t.phase *= t.step;
      while (g < n_grid.size() && n + 1 == n_grid[g]) {
        out[g] = acc.value() / static_cast<double>(n + 1);
        ++g;
      }
    }
    return;
  }

  std::vector<Coords> pos(l, x.coords);
  std::vector<Point> cur(l, x);
  for (long n = 0; n < n_max; ++n) {
    std::complex<double> prod{1.0, 0.0};
    for (size_t i = 0; i < l; ++i) {
      cur[i].coords = pos[i];
      prod *= fs[i].eval(cur[i]);
    }
    acc.add(prod);
    for (size_t i = 0; i < l; ++i) apply_in_place(spec.maps[i], pos[i]);
    while (g < n_grid.size() && n + 1 == n_grid[g]) {
      out[g] = acc.value() / static_cast<double>(n + 1);
      ++g;
    }
  }
}

void validate_grid(const std::vector<long>& n_grid) {
  if (n_grid.empty()) throw Error("bad-argument", "empty N grid");
  long prev = 0;
  for (long n : n_grid) {
    if (n <= prev)
      throw Error("bad-argument", "N grid must be strictly increasing, >= 1");
    prev = n;
  }
}

}  // namespace

std::complex<double> multi_average_at(const SystemSpec& spec,
                                      const std::vector<Observable>& fs,
                                      const Point& x, long N) {
  check_arity(spec, fs);
  if (N < 1) throw Error("bad-argument", "N must be >= 1");
  std::complex<double> out;
  point_series(spec, fs, x, {N}, &out);
  return out;
}

std::vector<Snapshot> multi_average_series(const SystemSpec& spec,
                                           const std::vector<Observable>& fs,
                                           const std::vector<long>& n_grid,
                                           const SamplerSpec& sampler) {
  check_arity(spec, fs);
  validate_grid(n_grid);
  auto pts = std::make_shared<std::vector<Point>>(
      sample_points(sampler, spec.space));
  const long P = static_cast<long>(pts->size());
  const size_t G = n_grid.size();
  std::vector<Snapshot> snaps(G);
  for (auto& s : snaps) {
    s.points = pts;
    s.values.resize(P);
  }
  // per-point work is independent; results land at fixed indices, so the
  // output does not depend on the worker count
#pragma omp parallel for schedule(static)
  for (long p = 0; p < P; ++p) {
    std::vector<std::complex<double>> buf(G);
    point_series(spec, fs, (*pts)[p], n_grid, buf.data());
    for (size_t g = 0; g < G; ++g) snaps[g].values[p] = buf[g];
  }
  return snaps;
}

Snapshot multi_average_function(const SystemSpec& spec,
                                const std::vector<Observable>& fs, long N,
                                const SamplerSpec& sampler) {
  return std::move(
      multi_average_series(spec, fs, std::vector<long>{N}, sampler)[0]);
}

Snapshot multi_average_function_serial(const SystemSpec& spec,
                                       const std::vector<Observable>& fs,
                                       long N, const SamplerSpec& sampler) {
  check_arity(spec, fs);
  if (N < 1) throw Error("bad-argument", "N must be >= 1");
  auto pts = std::make_shared<std::vector<Point>>(
      sample_points(sampler, spec.space));
  Snapshot snap;
  snap.points = pts;
  snap.values.resize(pts->size());
  for (size_t p = 0; p < pts->size(); ++p) {
    long double sre = 0.0L, sim = 0.0L;
    for (long n = 0; n < N; ++n) {
      std::complex<double> prod{1.0, 0.0};
      for (size_t i = 0; i < fs.size(); ++i)
        prod *= fs[i].eval(iterate(spec.maps[i], n, (*pts)[p]));
      sre += prod.real();
      sim += prod.imag();
    }
    snap.values[p] = {static_cast<double>(sre / N),
                      static_cast<double>(sim / N)};
  }
  return snap;
}

double l2_norm(const Snapshot& s) {
  Kahan acc;
  for (const auto& v : s.values) acc.add(std::norm(v));
  return std::sqrt(acc.sum / static_cast<double>(s.values.size()));
}

double l2_diff(const Snapshot& a, const Snapshot& b) {
  if (a.values.size() != b.values.size() || a.points->size() != b.points->size())
    throw Error("point-set-mismatch", "snapshots use different point sets");
  if (a.points != b.points) {
    for (size_t p = 0; p < a.points->size(); ++p)
      if ((*a.points)[p].coords != (*b.points)[p].coords)
        throw Error("point-set-mismatch", "snapshots use different point sets");
  }
  Kahan acc;
  for (size_t p = 0; p < a.values.size(); ++p)
    acc.add(std::norm(a.values[p] - b.values[p]));
  return std::sqrt(acc.sum / static_cast<double>(a.values.size()));
}

AverageReport convergence_report(const SystemSpec& spec,
                                 const std::vector<Observable>& fs,
                                 const std::vector<long>& n_grid,
                                 const SamplerSpec& sampler) {
  auto snaps = multi_average_series(spec, fs, n_grid, sampler);
  AverageReport rep;
  rep.n_grid = n_grid;
  for (const auto& s : snaps) rep.l2_norms.push_back(l2_norm(s));
  for (size_t j = 0; j + 1 < snaps.size(); ++j)
    rep.cauchy_gaps.push_back(l2_diff(snaps[j + 1], snaps[j]));
  // least-squares slope of log(gap) against log(N)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long m = 0;
  for (size_t j = 0; j < rep.cauchy_gaps.size(); ++j) {
    if (rep.cauchy_gaps[j] <= 1e-15) continue;
    double lx = std::log(static_cast<double>(n_grid[j]));
    double ly = std::log(rep.cauchy_gaps[j]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2 && sxx * m - sx * sx > 0) {
    rep.fitted_decay_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    rep.decay_fit_valid = true;
  }
  return rep;
}

VdcDiagnostic vdc_diagnostic(const SystemSpec& spec,
                             const std::vector<Observable>& fs, long N, long M,
                             const SamplerSpec& sampler) {
  check_arity(spec, fs);
  if (N < 1 || M < 1) throw Error("bad-argument", "N and M must be >= 1");
  if (M > N / 10)
    throw Error("bad-argument", "M must satisfy M <= N/10");
  auto pts = sample_points(sampler, spec.space);
  const long P = static_cast<long>(pts.size());
  std::vector<std::complex<double>> avg_contrib(P);
  std::vector<std::complex<double>> corr_contrib(
      static_cast<size_t>(P) * M);
#pragma omp parallel
  {
    std::vector<std::complex<double>> u(N + M);
#pragma omp for schedule(static)
    for (long p = 0; p < P; ++p) {
      // u_n = prod_i f_i(T_i^n x) along one orbit
      std::vector<Coords> pos(fs.size(), pts[p].coords);
      Point cur = pts[p];
      for (long n = 0; n < N + M; ++n) {
        std::complex<double> prod{1.0, 0.0};
        for (size_t i = 0; i < fs.size(); ++i) {
          cur.coords = pos[i];
          prod *= fs[i].eval(cur);
        }
        u[n] = prod;
        for (size_t i = 0; i < fs.size(); ++i)
          apply_in_place(spec.maps[i], pos[i]);
      }
      KahanC a;
      for (long n = 0; n < N; ++n) a.add(u[n]);
      avg_contrib[p] = a.value() / static_cast<double>(N);
      for (long m = 0; m < M; ++m) {
        KahanC c;
        for (long n = 0; n < N; ++n) c.add(u[n + m] * std::conj(u[n]));
        corr_contrib[static_cast<size_t>(p) * M + m] =
            c.value() / static_cast<double>(N);
      }
    }
  }
  VdcDiagnostic d;
  d.N = N;
  d.M = M;
  Kahan lhs;
  for (long p = 0; p < P; ++p) lhs.add(std::norm(avg_contrib[p]));
  d.lhs = lhs.sum / static_cast<double>(P);
  Kahan rhs;
  for (long m = 0; m < M; ++m) {
    KahanC cm;
    for (long p = 0; p < P; ++p)
      cm.add(corr_contrib[static_cast<size_t>(p) * M + m]);
    rhs.add(std::abs(cm.value() / static_cast<double>(P)));
  }
  d.rhs = rhs.sum / static_cast<double>(M);
  return d;
}

}  // namespace ergolab
