// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ergolab/cocycle.hpp"
#include "ergolab/fourier_oracle.hpp"
#include "ergolab/scenario.hpp"
#include "ergolab/seminorm.hpp"

using namespace ergolab;
namespace fs = std::filesystem;

static const double kAlpha = 0.41421356237309515;  // sqrt(2) - 1
static const double kBeta = 0.7320508075688772;    // sqrt(3) - 1

static int g_failures = 0;

static void report(int id, const std::string& what, bool ok,
                   const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

static double now_s() {
  using clk = std::chrono::steady_clock;
  static const auto t0 = clk::now();
  return std::chrono::duration<double>(clk::now() - t0).count();
}

static FourierPoly real_poly(std::vector<std::pair<int, double>> cos_terms,
                             std::vector<std::pair<int, double>> sin_terms) {
  FourierPoly p;
  p.dim = 1;
  for (auto [k, a] : cos_terms) {
    p.add_term({k}, {a / 2, 0.0});
    p.add_term({-k}, {a / 2, 0.0});
  }
  for (auto [k, a] : sin_terms) {
    p.add_term({k}, {0.0, -a / 2});
    p.add_term({-k}, {0.0, a / 2});
  }
  p.canonicalize();
  return p;
}

static SystemSpec rotation_pair(double a, double b, int res = 1024) {
  SystemSpec s;
  s.space = Space::torus(1);
  s.maps = {Transformation::rotation(s.space, Coords{a}),
            Transformation::rotation(s.space, Coords{b})};
  s.sampler = SamplerSpec::grid({res});
  return s;
}

// ---- 1: oracle agreement ---------------------------------------------------
static void criterion1() {
  double t0 = now_s();
  auto sys = rotation_pair(kAlpha, kBeta);
  FourierPoly p1 = real_poly({{1, 0.5}, {3, 0.2}}, {{2, 0.3}});
  FourierPoly p2 = real_poly({{1, 1.0}, {2, 0.25}}, {{3, 0.4}});
  std::vector<Observable> fs{Observable::from_poly(p1, true),
                             Observable::from_poly(p2, true)};
  Snapshot avg = multi_average_function(sys, fs, 100000, sys.sampler);
  auto lim = rotation_multi_limit({kAlpha, kBeta}, {p1, p2});
  Snapshot lsnap = poly_snapshot(lim.poly, sys.space, sys.sampler);
  lsnap.points = avg.points;
  double diff = l2_diff(avg, lsnap);
  double dt = now_s() - t0;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "l2 diff %.3e, %.1f s", diff, dt);
  report(1, "oracle agreement at N=1e5, Grid(1024)", diff <= 5e-3 && dt <= 60.0,
         buf);
}

// ---- 2: Cauchy decay -------------------------------------------------------
static void criterion2() {
  auto sys = rotation_pair(kAlpha, kBeta);
  FourierPoly p1 = real_poly({{1, 0.5}, {3, 0.2}}, {{2, 0.3}});
  FourierPoly p2 = real_poly({{1, 1.0}, {2, 0.25}}, {{3, 0.4}});
  std::vector<Observable> fs{Observable::from_poly(p1, true),
                             Observable::from_poly(p2, true)};
  std::vector<long> grid{1000, 2000, 4000, 8000, 16000, 32000, 64000, 100000};
  auto rep = convergence_report(sys, fs, grid, sys.sampler);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "fitted exponent %.3f",
                rep.fitted_decay_exponent);
  report(2, "Cauchy gaps decay with exponent <= -0.8",
         rep.decay_fit_valid && rep.fitted_decay_exponent <= -0.8, buf);
}

// ---- 3: Theorem 1.2 identity ----------------------------------------------
static void criterion3() {
  std::vector<FourierPoly> f2{real_poly({{1, 1.0}, {3, 0.3}}, {{2, 0.5}}),
                              real_poly({{2, 1.0}}, {{1, 0.4}, {3, 0.2}})};
  auto g2 = progression_identity_gap(kAlpha, kBeta, f2, 2, 100000);

  std::vector<FourierPoly> f3{real_poly({{1, 1.0}}, {{2, 0.5}}),
                              real_poly({{2, 0.8}}, {{1, 0.3}}),
                              real_poly({{1, 0.6}, {2, 0.2}}, {})};
  auto g3 = progression_identity_gap(kAlpha, kBeta, f3, 3, 100000);

  // oracle limits must not depend on the rotation number at all
  auto oa = progression_identity_gap(kAlpha, kAlpha, f2, 2, 100).oracle;
  auto ob = progression_identity_gap(kBeta, kBeta, f2, 2, 100).oracle;
  bool bitwise = oa.poly.terms.size() == ob.poly.terms.size();
  for (size_t i = 0; bitwise && i < oa.poly.terms.size(); ++i)
    bitwise = oa.poly.terms[i].freq == ob.poly.terms[i].freq &&
              oa.poly.terms[i].coeff.real() == ob.poly.terms[i].coeff.real() &&
              oa.poly.terms[i].coeff.imag() == ob.poly.terms[i].coeff.imag();

  char buf[128];
  std::snprintf(buf, sizeof(buf), "l=2 gap %.3e, l=3 gap %.3e, bitwise %d",
                g2.gap_between, g3.gap_between, bitwise ? 1 : 0);
  report(3, "progression identity gaps and alpha-free oracle",
         g2.gap_between <= 1e-2 && g3.gap_between <= 2e-2 && bitwise, buf);
}

// ---- 4: seminorm value -----------------------------------------------------
// independent brute-force oracle, computed before the engine runs: direct
// quadrature of (1/M) sum_m (mean f * f o T^m)^2, fourth root
static double brute_v2(double alpha, long M, int res) {
  long double outer = 0.0L;
  for (long m = 0; m < M; ++m) {
    long double mean = 0.0L;
    for (int i = 0; i < res; ++i) {
      double x = static_cast<double>(i) / res;
      mean += std::cos(kTwoPi * x) * std::cos(kTwoPi * wrap_unit(x + m * alpha));
    }
    mean /= res;
    outer += mean * mean;
  }
  outer /= M;
  return std::pow(static_cast<double>(outer), 0.25);
}

static void criterion4() {
  double t0 = now_s();
  double oracle = brute_v2(kAlpha, 5000, 1024);
  SystemSpec sys;
  sys.space = Space::torus(1);
  sys.maps = {Transformation::rotation(sys.space, Coords{kAlpha})};
  sys.sampler = SamplerSpec::grid({1024});
  Schedule sched;
  sched.depths = {5000};
  auto est = seminorm(Observable::cosine({1}), 2, sys.maps[0], sys, sched);
  double target = std::pow(8.0, -0.25);
  double dt = now_s() - t0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "engine %.10f, oracle %.10f, 8^(-1/4) %.10f, %.1f s", est.value,
                oracle, target, dt);
  report(4, "Host-Kra seminorm of cos(2 pi x) at k=2",
         std::fabs(est.value - target) <= 1e-2 &&
             std::fabs(est.value - oracle) <= 1e-6 && dt <= 120.0,
         buf);
}

// ---- 5: shared seminorms ---------------------------------------------------
static std::vector<Observable> battery() {
  return {Observable::cosine({1}), Observable::sine({2}),
          Observable::cosine({3}),
          Observable::from_poly(real_poly({{1, 0.6}, {2, 0.3}}, {{3, 0.1}}),
                                true)};
}

static void criterion5() {
  auto sys = rotation_pair(kAlpha, kBeta);
  Schedule sched;
  sched.depths = {5000};
  double worst = 0.0;
  bool ok = true;
  for (const auto& f : battery()) {
    auto r = seminorm_equality_check(f, 2, sys.maps[0], sys.maps[1], sys, sched);
    ok = ok && r.hypotheses_ok && r.discrepancy <= 2e-2;
    worst = std::max(worst, r.discrepancy);
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "worst discrepancy %.3e", worst);
  report(5, "seminorms agree across ergodic rotations", ok, buf);
}

// ---- 6: seminorm bound -----------------------------------------------------
static void criterion6() {
  auto sys = rotation_pair(kAlpha, kBeta);
  Schedule sched;
  sched.depths = {5000};
  auto fs = battery();
  std::vector<std::pair<int, int>> suite{{0, 1}, {0, 3}, {2, 3}};
  bool ok = true;
  double worst = 1e300;
  for (auto [i, j] : suite) {
    auto b = bound_check(sys, {fs[i], fs[j]}, 100000, sched, sys.sampler, 0.02);
    ok = ok && b.applicable && b.satisfied_with_slack >= 0.0;
    worst = std::min(worst, b.satisfied_with_slack);
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "min slack margin %.3e", worst);
  report(6, "||A_N||_2 <= min seminorm + slack across the l=2 suite", ok, buf);
}

// ---- 7: counterexample -----------------------------------------------------
static void criterion7() {
  SystemSpec sys;
  sys.space = Space::torus(2);
  auto shift = Coords{kAlpha, kBeta};
  sys.maps = {Transformation::rotation(sys.space, shift),
              Transformation::rotation(sys.space, shift)};
  sys.sampler = SamplerSpec::grid({32, 32});
  FourierPoly ex;
  ex.dim = 2;
  ex.add_term({1, 0}, {1.0, 0.0});
  std::vector<Observable> fs{Observable::from_poly(ex, false),
                             Observable::from_poly(poly_conj(ex), false)};
  Snapshot avg = multi_average_function(sys, fs, 100000, sys.sampler);
  double limit = l2_norm(avg);
  double mean_f = std::abs(ex.coefficient({0, 0}));
  char buf[96];
  std::snprintf(buf, sizeof(buf), "||A_N||_2 = %.6f, integral of f = %.1e",
                limit, mean_f);
  report(7, "non-ergodic difference: A_N -> 1 while f has zero mean",
         std::fabs(limit - 1.0) <= 1e-2 && mean_f == 0.0, buf);
}

// ---- 8: nilsystem pointwise convergence ------------------------------------
static void criterion8() {
  SystemSpec sys;
  sys.space = Space::heisenberg();
  sys.maps = {Transformation::nilrotation(kAlpha, kBeta, 0.0),
              Transformation::nilrotation(2 * kAlpha, 2 * kBeta,
                                          kAlpha * kBeta)};
  sys.sampler = SamplerSpec::grid({4, 4, 4});  // unused at a fixed point
  std::vector<Observable> fs{Observable::cosine({1, 0, 0}),
                             Observable::cosine({0, 1, 0})};
  Point x{Coords{0.1, 0.2, 0.3}, sys.space};
  std::vector<long> grid{12500, 25000, 50000, 100000};
  std::vector<double> gaps;
  std::complex<double> prev = multi_average_at(sys, fs, x, grid[0]);
  for (size_t i = 1; i < grid.size(); ++i) {
    auto cur = multi_average_at(sys, fs, x, grid[i]);
    gaps.push_back(std::abs(cur - prev));
    prev = cur;
  }
  bool monotone = true;
  for (size_t i = 1; i < gaps.size(); ++i)
    monotone = monotone && gaps[i] <= gaps[i - 1];
  char buf[128];
  std::snprintf(buf, sizeof(buf), "gaps %.3e %.3e %.3e", gaps[0], gaps[1],
                gaps[2]);
  report(8, "Heisenberg progression converges pointwise",
         gaps.back() <= 0.05 && monotone, buf);
}

// ---- 9: cocycle equivalence ------------------------------------------------
static void criterion9() {
  SystemSpec base = rotation_pair(kAlpha, kBeta, 256);
  base.sampler = SamplerSpec::grid({256});
  int agree = 0, total = 0;
  for (int trial = 0; trial < 40; ++trial) {
    bool want_compatible = trial < 20;
    uint64_t seed = 0x9e3779b97f4a7c15ULL + trial;
    FourierPoly p;
    p.dim = 1;
    for (int k = 1; k <= 3; ++k) {
      double a = 0.2 + 0.3 * uniform01(seed, 2 * k);
      double b = 0.2 + 0.3 * uniform01(seed, 2 * k + 1);
      FourierPoly t = real_poly({{k, a}}, {{k, b}});
      p = poly_add(p, t);
    }
    auto f = Observable::from_poly(p, true);
    Cocycle rho;
    rho.target_dim = 1;
    rho.base_maps = base.maps;
    if (want_compatible) {
      // coboundary family (d1 f, d2 f): always an l-cocycle
      for (int i = 0; i < 2; ++i) {
        auto T = base.maps[i];
        rho.component_maps.push_back({Observable::from_fn(
            [f, T](const Point& y) {
              return std::complex<double>{
                  wrap_unit(f.eval_real(apply(T, y)) - f.eval_real(y)), 0.0};
            },
            1.0, true)});
      }
    } else {
      // rho1 = f, rho2 = 0: d2 rho1 = f o T2 - f != 0 = d1 rho2
      rho.component_maps.push_back({Observable::from_fn(
          [f](const Point& y) {
            return std::complex<double>{wrap_unit(f.eval_real(y)), 0.0};
          },
          1.0, true)});
      rho.component_maps.push_back(
          {Observable::constant_poly(0.0, 1)});
    }
    auto chk = l_cocycle_check(rho, base.space, base.sampler, 1e-6);
    auto lifted = skew_product_unchecked(base, rho);
    auto comm = check_commuting(lifted, 200, 1e-6);
    if (chk.compatible == comm.commuting &&
        chk.compatible == want_compatible)
      ++agree;
    ++total;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%d/%d agree", agree, total);
  report(9, "check_commuting matches l_cocycle_check on 40 random cocycles",
         agree == total, buf);
}

// ---- 10: determinism across worker counts ----------------------------------
static std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

static void criterion10() {
  fs::path cfg_dir = CONFIG_DIR;
  fs::path out1 = fs::temp_directory_path() / "ergolab-acc-w1";
  fs::path out8 = fs::temp_directory_path() / "ergolab-acc-w8";
  fs::remove_all(out1);
  fs::remove_all(out8);
  int configs = 0;
  bool ok = true;
  std::string first_mismatch;
  for (const auto& entry : fs::directory_iterator(cfg_dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    auto cfg = nlohmann::json::parse(in);
    std::string name = cfg.at("scenario").get<std::string>();
    omp_set_num_threads(1);
    run_scenario(cfg, (out1 / name).string());
    omp_set_num_threads(8);
    run_scenario(cfg, (out8 / name).string());
    auto csv = name + "_series.csv";
    std::string a = slurp(out1 / name / csv);
    std::string b = slurp(out8 / name / csv);
    if (a.empty() || a != b) {
      ok = false;
      if (first_mismatch.empty()) first_mismatch = name;
    }
    ++configs;
  }
  omp_set_num_threads(1);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d configs, %s", configs,
                ok ? "all byte-identical" : ("mismatch: " + first_mismatch).c_str());
  report(10, "scenario CSVs byte-identical with 1 and 8 workers",
         ok && configs == 8, buf);
}

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
  } catch (const Error& e) {
    std::printf("[FAIL] unexpected error (%s): %s\n", e.code.c_str(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::printf("[FAIL] unexpected exception: %s\n", e.what());
    return 1;
  }
  std::printf("%s: %d/10 criteria passed\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
