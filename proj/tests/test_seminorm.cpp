#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ergolab/seminorm.hpp"

using namespace ergolab;

static const double kAlpha = 0.41421356237309515;
static const double kBeta = 0.7320508075688772;

static SystemSpec single_rotation(double a, int res = 1024) {
  SystemSpec s;
  s.space = Space::torus(1);
  s.maps = {Transformation::rotation(s.space, Coords{a})};
  s.sampler = SamplerSpec::grid({res});
  return s;
}

TEST_CASE("seminorm1") {
  auto sys = single_rotation(kAlpha);
  CHECK(seminorm1(Observable::constant_poly(-0.75, 1), sys, sys.sampler) ==
        doctest::Approx(0.75));
  CHECK(seminorm1(Observable::cosine({1}), sys, sys.sampler) <= 1e-12);

  FourierPoly p;  // 1 + cos(2 pi x)
  p.dim = 1;
  p.add_term({0}, {1.0, 0.0});
  p.add_term({1}, {0.5, 0.0});
  p.add_term({-1}, {0.5, 0.0});
  CHECK(seminorm1(Observable::from_poly(p), sys, sys.sampler) ==
        doctest::Approx(1.0));

  CHECK_THROWS_WITH_AS(
      seminorm1(Observable::character({1}), sys, sys.sampler),
      doctest::Contains("real"), Error);
}

// independent brute-force oracle for the k=2 recursion: direct quadrature of
// (1/M) sum_m (mean f * f o T^m)^2, no shared code with the engine
static double brute_force_v2(double alpha, long M, int res) {
  long double outer = 0.0L;
  for (long m = 0; m < M; ++m) {
    long double mean = 0.0L;
    for (int i = 0; i < res; ++i) {
      double x = static_cast<double>(i) / res;
      mean += std::cos(kTwoPi * x) *
              std::cos(kTwoPi * wrap_unit(x + m * alpha));
    }
    mean /= res;
    outer += mean * mean;
  }
  outer /= M;
  return std::pow(static_cast<double>(outer), 0.25);
}

TEST_CASE("seminorm of cos(2 pi x) at k=2") {
  auto sys = single_rotation(kAlpha);
  Schedule sched;
  sched.depths = {5000};
  auto est = seminorm(Observable::cosine({1}), 2, sys.maps[0], sys, sched);

  double oracle = brute_force_v2(kAlpha, 5000, 1024);
  CHECK(std::fabs(est.value - oracle) <= 1e-9);
  CHECK(std::fabs(est.value - std::pow(8.0, -0.25)) <= 1e-2);

  // trace exposes the running value at the documented checkpoints
  REQUIRE(est.trace.size() == 3);  // 1000, 2000, 5000 (= M_top)
  CHECK(est.trace[0].first == 1000);
  CHECK(est.trace[1].first == 2000);
  CHECK(est.trace[2].first == 5000);
  CHECK(est.trace[2].second == est.value);
  CHECK(est.clamped_magnitude == 0.0);
}

TEST_CASE("seminorm normalization, homogeneity, monotonicity") {
  auto sys = single_rotation(kAlpha, 256);
  auto one = Observable::constant_poly(1.0, 1);
  Schedule s1;  // k=1 ignores depths
  CHECK(seminorm(one, 1, sys.maps[0], sys, s1).value == doctest::Approx(1.0));
  Schedule s2;
  s2.depths = {400};
  CHECK(seminorm(one, 2, sys.maps[0], sys, s2).value == doctest::Approx(1.0));
  Schedule s3;
  s3.depths = {200, 200};
  CHECK(seminorm(one, 3, sys.maps[0], sys, s3).value == doctest::Approx(1.0));

  auto f = Observable::cosine({1});
  auto scaled = Observable::from_poly(poly_scale(*f.poly, {0.3, 0.0}), true);
  double vf = seminorm(f, 2, sys.maps[0], sys, s2).value;
  double vs = seminorm(scaled, 2, sys.maps[0], sys, s2).value;
  CHECK(std::fabs(vs - 0.3 * vf) <= 1e-10);

  double v3 = seminorm(f, 3, sys.maps[0], sys, s3).value;
  CHECK(vf <= v3 + 0.02);
}

TEST_CASE("schedule validation and the cost guard") {
  auto sys = single_rotation(kAlpha);
  auto f = Observable::cosine({1});
  Schedule wrong;
  wrong.depths = {100, 100};
  CHECK_THROWS_AS(seminorm(f, 2, sys.maps[0], sys, wrong), Error);

  // k=4 with default depths exceeds the cost ceiling unless forced
  auto d4 = Schedule::defaults(4);
  REQUIRE(d4.depths.size() == 3);
  try {
    seminorm(f, 4, sys.maps[0], sys, d4);
    FAIL("expected schedule-too-expensive");
  } catch (const Error& e) {
    CHECK(e.code == "schedule-too-expensive");
  }
}

TEST_CASE("determinism: identical inputs give bit-identical estimates") {
  auto sys = single_rotation(kBeta);
  Schedule s;
  s.depths = {1500};
  auto f = Observable::cosine({2});
  auto a = seminorm(f, 2, sys.maps[0], sys, s);
  auto b = seminorm(f, 2, sys.maps[0], sys, s);
  CHECK(a.value == b.value);
  CHECK(a.trace == b.trace);
}

TEST_CASE("nilrotation seminorm agrees with its Kronecker base") {
  // f depends only on the base coordinate, so the fiber structure is inert
  SystemSpec nil;
  nil.space = Space::heisenberg();
  nil.maps = {Transformation::nilrotation(kAlpha, kBeta, 0.0)};
  nil.sampler = SamplerSpec::low_discrepancy(2000);
  Schedule s;
  s.depths = {2000};
  auto fh = Observable::cosine({1, 0, 0});
  double vnil = seminorm(fh, 2, nil.maps[0], nil, s).value;

  auto rot = single_rotation(kAlpha);
  double vrot = seminorm(Observable::cosine({1}), 2, rot.maps[0], rot, s).value;
  CHECK(std::fabs(vnil - vrot) <= 2e-2);
}

TEST_CASE("seminorm_equality_check") {
  auto sys = single_rotation(kAlpha);
  auto S = Transformation::rotation(sys.space, Coords{kBeta});
  auto f = Observable::cosine({1});
  Schedule sched;
  sched.depths = {5000};

  auto same = seminorm_equality_check(f, 2, sys.maps[0], sys.maps[0], sys,
                                      sched);
  CHECK(same.discrepancy == 0.0);

  auto cross = seminorm_equality_check(f, 2, sys.maps[0], S, sys, sched);
  CHECK(cross.hypotheses_ok);
  CHECK(cross.discrepancy <= 2e-2);

  auto one = Observable::constant_poly(1.0, 1);
  CHECK(seminorm_equality_check(one, 2, sys.maps[0], S, sys, sched)
            .discrepancy == 0.0);

  // a rational rotation fails the hypotheses but still yields a number
  auto Q = Transformation::rotation(sys.space, Coords{0.5});
  auto warned = seminorm_equality_check(f, 2, sys.maps[0], Q, sys, sched);
  CHECK(!warned.hypotheses_ok);
}

TEST_CASE("bound_check") {
  SystemSpec sys;
  sys.space = Space::torus(1);
  sys.maps = {Transformation::rotation(sys.space, Coords{kAlpha}),
              Transformation::rotation(sys.space, Coords{kBeta})};
  sys.sampler = SamplerSpec::grid({1024});
  Schedule sched;
  sched.depths = {5000};

  auto f = Observable::cosine({1});
  auto b = bound_check(sys, {f, f}, 100000, sched, sys.sampler, 0.02);
  CHECK(b.applicable);
  CHECK(b.avg_norm <= std::pow(8.0, -0.25) + 0.02);
  CHECK(b.satisfied_with_slack >= 0.0);

  auto zero = Observable::constant_poly(0.0, 1);
  auto bz = bound_check(sys, {zero, f}, 1000, sched, sys.sampler, 0.02);
  CHECK(bz.avg_norm == 0.0);
  CHECK(bz.min_seminorm == 0.0);

  sys.maps[1] = sys.maps[0];  // difference no longer ergodic
  auto inap = bound_check(sys, {f, f}, 1000, sched, sys.sampler, 0.02);
  CHECK(!inap.applicable);
}

TEST_CASE("characteristic_check") {
  // Z1-measurable inputs: the projection is the identity, gap exactly 0
  SystemSpec rots;
  rots.space = Space::torus(1);
  rots.maps = {Transformation::rotation(rots.space, Coords{kAlpha}),
               Transformation::rotation(rots.space, Coords{kBeta})};
  rots.sampler = SamplerSpec::grid({256});
  auto f = Observable::cosine({1});
  auto r = characteristic_check(rots, {f, f}, 2000, rots.sampler);
  CHECK(r.gap == 0.0);
  CHECK(r.full_avg == r.projected_avg);

  CHECK_THROWS_AS(characteristic_check(rots, {f}, 100, rots.sampler), Error);

  // Heisenberg with a fiber character: Ef1 = 0, so the projected average
  // vanishes; dropping difference-ergodicity (T1 = T2) makes the full
  // average stick at 1 — the Section 3 failure mode
  SystemSpec heis;
  heis.space = Space::heisenberg();
  heis.maps = {Transformation::nilrotation(kAlpha, kBeta, 0.0),
               Transformation::nilrotation(kAlpha, kBeta, 0.0)};
  heis.sampler = SamplerSpec::low_discrepancy(500);
  std::vector<Observable> fz{Observable::character({0, 0, 1}),
                             Observable::character({0, 0, -1})};
  auto h = characteristic_check(heis, fz, 2000, heis.sampler);
  CHECK(h.full_avg == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(h.projected_avg <= 1e-12);
  CHECK(h.gap >= 1.0 - 0.02);

  // with the genuine progression (T_a, T_{a^2}) the factor is characteristic:
  // the full average must be small
  heis.maps[1] =
      Transformation::nilrotation(2 * kAlpha, 2 * kBeta, kAlpha * kBeta);
  std::vector<Observable> mix{Observable::character({0, 0, 1}),
                              Observable::character({0, 1, 0})};
  auto g = characteristic_check(heis, mix, 100000, heis.sampler);
  CHECK(g.full_avg <= 0.05);
  CHECK(g.projected_avg <= 1e-12);
}
