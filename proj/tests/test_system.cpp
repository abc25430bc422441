#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ergolab/system.hpp"

using namespace ergolab;

static const double kAlpha = 0.41421356237309515;
static const double kBeta = 0.7320508075688772;

static SystemSpec rotation_pair(double a, double b) {
  SystemSpec s;
  s.space = Space::torus(1);
  s.maps = {Transformation::rotation(s.space, Coords{a}),
            Transformation::rotation(s.space, Coords{b})};
  s.sampler = SamplerSpec::grid({1024});
  return s;
}

TEST_CASE("check_commuting") {
  auto rots = rotation_pair(kAlpha, kBeta);
  auto r = check_commuting(rots, 200, 1e-12);
  CHECK(r.commuting);
  CHECK(r.max_discrepancy <= 1e-12);  // abelian up to rounding

  // nilrotations commute iff alpha*beta' - beta*alpha' is an integer
  SystemSpec nil;
  nil.space = Space::heisenberg();
  nil.maps = {Transformation::nilrotation(kAlpha, kBeta, 0.0),
              Transformation::nilrotation(0.1, 0.2, 0.3)};
  nil.sampler = SamplerSpec::grid({8, 8, 8});
  double comm = kAlpha * 0.2 - kBeta * 0.1;  // not an integer
  CHECK(std::fabs(comm - std::round(comm)) > 1e-3);
  CHECK(!check_commuting(nil, 200, 1e-9).commuting);

  // the progression (T_a, T_{a^2}) does commute
  nil.maps[1] =
      Transformation::nilrotation(2 * kAlpha, 2 * kBeta, kAlpha * kBeta);
  CHECK(check_commuting(nil, 200, 1e-9).commuting);

  CHECK_THROWS_AS(check_commuting(rots, 0, 1e-9), Error);
}

TEST_CASE("is_rational") {
  long p = 0, q = 0;
  CHECK(is_rational(0.5, 1000000, &p, &q));
  CHECK(p == 1);
  CHECK(q == 2);
  CHECK(is_rational(355.0 / 113.0, 1000000, &p, &q));
  CHECK(q == 113);
  CHECK(!is_rational(kAlpha));
  CHECK(!is_rational(kBeta / kAlpha, 1000));
  CHECK(is_rational(0.0));
}

TEST_CASE("check_hypotheses on rotation systems") {
  auto good = check_hypotheses(rotation_pair(kAlpha, kBeta));
  REQUIRE(good.entries.size() == 4);  // T1, T2, T1*T2^-1, T2*T1^-1
  for (const auto& e : good.entries) {
    CHECK(e.verdict == Verdict::RationallyIndependent);
    CHECK(!e.flagged);
    CHECK(e.weyl_sum < 0.05);
  }
  CHECK(good.all_pass());

  // equal shifts: the difference map is the identity
  auto bad = check_hypotheses(rotation_pair(kAlpha, kAlpha));
  bool saw_dependent = false;
  for (const auto& e : bad.entries)
    if (e.name == "T1*T2^-1") {
      CHECK(e.verdict == Verdict::Dependent);
      saw_dependent = true;
    }
  CHECK(saw_dependent);
  CHECK(!bad.all_pass());
}

TEST_CASE("product system with a shared factor fails the difference check") {
  // (R x S, R' x S) on the 2-torus: the difference is the identity on the
  // second coordinate
  SystemSpec s;
  s.space = Space::torus(2);
  s.maps = {Transformation::rotation(s.space, Coords{kAlpha, 0.3337001}),
            Transformation::rotation(s.space, Coords{kBeta, 0.3337001})};
  s.sampler = SamplerSpec::grid({64, 64});
  auto rep = check_hypotheses(s);
  bool flagged_difference = false;
  for (const auto& e : rep.entries)
    if (e.name == "T1*T2^-1")
      flagged_difference =
          e.verdict == Verdict::Dependent || e.flagged;
  CHECK(flagged_difference);
  CHECK(!rep.all_pass());
}

TEST_CASE("weyl_sum decays for an irrational rotation") {
  auto t1 = Space::torus(1);
  auto R = Transformation::rotation(t1, Coords{kAlpha});
  double w = weyl_sum([&R](const Point& x) { return apply(R, x); },
                      Point{Coords{0.123}, t1}, {1}, 10000);
  CHECK(w < 0.01);
  // rational rotation: no equidistribution
  auto Q = Transformation::rotation(t1, Coords{0.5});
  double wq = weyl_sum([&Q](const Point& x) { return apply(Q, x); },
                       Point{Coords{0.123}, t1}, {2}, 10000);
  CHECK(wq > 0.9);
}

TEST_CASE("kronecker projection") {
  SystemSpec heis;
  heis.space = Space::heisenberg();
  heis.maps = {Transformation::nilrotation(kAlpha, kBeta, 0.0)};
  heis.sampler = SamplerSpec::low_discrepancy(1000);

  // fiber character e(z) projects to zero
  auto ez = Observable::character({0, 0, 1});
  auto pz = kronecker_project(ez, heis);
  REQUIRE(pz.poly.has_value());
  CHECK(pz.poly->terms.empty());

  // base character unchanged
  auto ex = Observable::character({1, 0, 0});
  auto px = kronecker_project(ex, heis);
  REQUIRE(px.poly.has_value());
  CHECK(px.poly->terms.size() == 1);
  CHECK(px.poly->terms[0].freq == std::vector<int>{1, 0, 0});

  // torus rotations are their own Kronecker factor
  auto rots = rotation_pair(kAlpha, kBeta);
  auto f = Observable::cosine({3});
  auto pf = kronecker_project(f, rots);
  REQUIRE(pf.poly.has_value());
  CHECK(pf.poly->terms.size() == f.poly->terms.size());

  // idempotence and linearity on a mixed poly
  FourierPoly mix;
  mix.dim = 3;
  mix.add_term({1, 0, 0}, {0.5, 0.0});
  mix.add_term({-1, 0, 0}, {0.5, 0.0});
  mix.add_term({0, 1, 2}, {0.25, 0.0});
  mix.add_term({0, -1, -2}, {0.25, 0.0});
  auto once = kronecker_project(Observable::from_poly(mix), heis);
  auto twice = kronecker_project(once, heis);
  REQUIRE(once.poly.has_value());
  CHECK(once.poly->terms.size() == 2);  // z-dependent terms dropped
  CHECK(twice.poly->terms.size() == once.poly->terms.size());

  // black-box path: 256-point fiber quadrature
  auto blackbox = Observable::from_fn(
      [](const Point& x) {
        return std::complex<double>{std::cos(kTwoPi * x.coords[2]), 0.0};
      },
      1.0, true);
  auto pb = kronecker_project(blackbox, heis);
  Point x{Coords{0.2, 0.4, 0.7}, heis.space};
  CHECK(std::abs(pb.eval(x)) <= 1e-12);

  SystemSpec prod;
  prod.space = Space::product({Space::torus(1), Space::torus(1)});
  prod.maps = {Transformation::rotation(prod.space, Coords{kAlpha, kBeta})};
  prod.sampler = SamplerSpec::grid({32, 32});
  CHECK_THROWS_AS(kronecker_project(f, prod), Error);
}
