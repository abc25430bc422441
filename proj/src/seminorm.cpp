#include "ergolab/seminorm.hpp"

#include <cmath>
#include <limits>

namespace ergolab {

Schedule Schedule::defaults(int k) {
  Schedule s;
  if (k >= 2) s.depths.assign(k - 1, 5000);
  return s;
}

double seminorm1(const Observable& f, const SystemSpec& spec,
                 const SamplerSpec& sampler) {
  if (!f.real_valued)
    throw Error("complex-observable",
                "seminorms require real observables; split into real and "
                "imaginary parts");
  auto pts = sample_points(sampler, spec.space);
  Kahan acc;
  for (const auto& p : pts) acc.add(f.eval(p).real());
  return std::fabs(acc.sum / static_cast<double>(pts.size()));
}

namespace {

// W_1(g) = (mean g)^2 for g = prod over offsets of f o T^s
double level1(const std::vector<std::vector<double>>& table,
              const std::vector<long>& offsets, long P) {
  Kahan acc;
  for (long p = 0; p < P; ++p) {
    double prod = 1.0;
    for (long s : offsets) prod *= table[s][p];
    acc.add(prod);
  }
  double m = acc.sum / static_cast<double>(P);
  return m * m;
}

// W_j via W_{j}(g) = (1/M_{j-1}) sum_m W_{j-1}(g * g o T^m)
double level(const std::vector<std::vector<double>>& table, int j,
             const std::vector<long>& offsets, const std::vector<long>& depths,
             long P) {
  if (j == 1) return level1(table, offsets, P);
  const long M = depths[j - 2];
  Kahan acc;
  std::vector<long> ext(offsets.size() * 2);
  for (long m = 0; m < M; ++m) {
    for (size_t i = 0; i < offsets.size(); ++i) {
      ext[i] = offsets[i];
      ext[offsets.size() + i] = offsets[i] + m;
    }
    acc.add(level(table, j - 1, ext, depths, P));
  }
  return acc.sum / static_cast<double>(M);
}

}  // namespace

SeminormEstimate seminorm(const Observable& f, int k, const Transformation& T,
                          const SystemSpec& spec, const Schedule& schedule) {
  if (k < 1) throw Error("bad-argument", "k must be >= 1");
  if (!f.real_valued)
    throw Error("complex-observable",
                "seminorms require real observables; split into real and "
                "imaginary parts");
  SeminormEstimate est;
  est.k = k;
  est.schedule = schedule;
  est.quadrature = spec.sampler;
  if (k == 1) {
    est.value = seminorm1(f, spec, spec.sampler);
    return est;
  }
  if (static_cast<int>(schedule.depths.size()) != k - 1)
    throw Error("bad-argument", "schedule must supply k-1 depths");
  for (long m : schedule.depths)
    if (m < 1) throw Error("bad-argument", "schedule depths must be >= 1");

  auto pts = sample_points(spec.sampler, spec.space);
  const long P = static_cast<long>(pts.size());
  double cost = static_cast<double>(P) * std::pow(2.0, k - 1);
  for (long m : schedule.depths) cost *= static_cast<double>(m);
  if (cost > 2e9 && !schedule.force)
    throw Error("schedule-too-expensive",
                "recursion cost ~" + std::to_string(cost) +
                    " evaluations; shrink the schedule or set force");

  // precompute f o T^s on the quadrature set for every reachable offset
  long max_offset = 0;
  for (long m : schedule.depths) max_offset += m - 1;
  std::vector<std::vector<double>> table(max_offset + 1,
                                         std::vector<double>(P));
  {
    const long PP = P;
#pragma omp parallel for schedule(static)
    for (long p = 0; p < PP; ++p) {
      Coords c = pts[p].coords;
      Point cur = pts[p];
      for (long s = 0; s <= max_offset; ++s) {
        cur.coords = c;
        table[s][p] = f.eval(cur).real();
        apply_in_place(T, c);
      }
    }
  }

  const long M_top = schedule.depths[k - 2];
  std::vector<double> wvals(M_top);
#pragma omp parallel for schedule(dynamic, 16)
  for (long m = 0; m < M_top; ++m) {
    std::vector<long> offsets{0, m};
    wvals[m] = level(table, k - 1, offsets, schedule.depths, P);
  }
  // fixed-order reduction; running value exposed at the checkpoints
  const double root = 1.0 / std::pow(2.0, k);
  Kahan acc;
  for (long m = 0; m < M_top; ++m) {
    acc.add(wvals[m]);
    long done = m + 1;
    if (done == 1000 || done == 2000 || done == 5000 || done == M_top) {
      double w = acc.sum / static_cast<double>(done);
      double v = w <= 0.0 ? 0.0 : std::pow(w, root);
      est.trace.emplace_back(done, v);
    }
  }
  double w = acc.sum / static_cast<double>(M_top);
  if (w < 0.0) {
    est.clamped_magnitude = -w;
    w = 0.0;
  }
  est.value = std::pow(w, root);
  return est;
}

EqualityCheck seminorm_equality_check(const Observable& f, int k,
                                      const Transformation& T,
                                      const Transformation& S,
                                      const SystemSpec& spec,
                                      const Schedule& schedule) {
  EqualityCheck r;
  SystemSpec pair = spec;
  pair.maps = {T, S};
  auto rep = check_hypotheses(pair);
  r.hypotheses_ok = true;
  for (const auto& e : rep.entries) {
    if (e.name == "T1" || e.name == "T2")
      if (e.verdict == Verdict::Dependent || e.flagged) r.hypotheses_ok = false;
  }
  double a = seminorm(f, k, T, spec, schedule).value;
  double b = seminorm(f, k, S, spec, schedule).value;
  r.discrepancy = std::fabs(a - b);
  return r;
}

BoundCheck bound_check(const SystemSpec& spec,
                       const std::vector<Observable>& fs, long N,
                       const Schedule& schedule, const SamplerSpec& sampler,
                       double slack) {
  BoundCheck r;
  const ErgodicityReport rep = spec.hypothesis_report
                                   ? *spec.hypothesis_report
                                   : check_hypotheses(spec);
  r.applicable = rep.all_pass();
  r.avg_norm = l2_norm(multi_average_function(spec, fs, N, sampler));
  const int l = static_cast<int>(fs.size());
  double mn = std::numeric_limits<double>::infinity();
  for (int i = 0; i < l; ++i)
    mn = std::min(mn, seminorm(fs[i], l, spec.maps[i], spec, schedule).value);
  r.min_seminorm = mn;
  r.satisfied_with_slack = mn + slack - r.avg_norm;
  return r;
}

CharacteristicCheck characteristic_check(const SystemSpec& spec,
                                         const std::vector<Observable>& fs,
                                         long N, const SamplerSpec& sampler) {
  if (fs.size() != 2)
    throw Error("bad-argument", "characteristic check is defined for l = 2");
  std::vector<Observable> proj{kronecker_project(fs[0], spec),
                               kronecker_project(fs[1], spec)};
  Snapshot full = multi_average_function(spec, fs, N, sampler);
  Snapshot projected = multi_average_function(spec, proj, N, sampler);
  CharacteristicCheck r;
  r.full_avg = l2_norm(full);
  r.projected_avg = l2_norm(projected);
  r.gap = l2_diff(full, projected);
  return r;
}

}  // namespace ergolab
