#include "orlicz/bounds.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/numerics.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace orlicz;

TEST_SUITE("bounds") {

TEST_CASE("equivalence constants") {
  CHECK(tau_upper_const(1.0) == doctest::Approx(2 * std::numbers::sqrt2).epsilon(1e-15));
  CHECK(tau_upper_const(2.0) == doctest::Approx(2 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(tau_upper_const(kInf) == doctest::Approx(1 + 2 * std::numbers::sqrt2).epsilon(1e-15));
  // right limit at 1 is (8/p)^(1/p) -> 8, not the p = 1 value
  CHECK(tau_upper_const(1.0 + 1e-9) == doctest::Approx(8.0).epsilon(1e-6));
  CHECK(tau_upper_const(1e8) == doctest::Approx(1 + 2 * std::numbers::sqrt2).epsilon(1e-6));
  CHECK(luxemburg_upper_const(2.0) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  CHECK(luxemburg_upper_const(1.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(luxemburg_upper_const(4.0) == doctest::Approx(std::pow(12.0, 0.25)).epsilon(1e-15));
  CHECK(luxemburg_upper_const(4.0) == doctest::Approx(1.8612097182041991).epsilon(1e-14));
  CHECK_THROWS_AS(tau_upper_const(0.5), InvalidExponent);
}

TEST_CASE("constant sanity and continuity on [1, 64]") {
  double prev_tau = tau_upper_const(1.0);
  double prev_lux = luxemburg_upper_const(1.0);
  for (int i = 1; i <= 63000; ++i) {
    const double p = 1.0 + i * 1e-3;
    const double t = tau_upper_const(p);
    const double l = luxemburg_upper_const(p);
    CHECK(t >= 2 * std::numbers::sqrt2 * (1 - 1e-12));
    CHECK(l >= 1.0);
    if (i > 1) {
      CHECK(std::abs(t - prev_tau) <= 0.05);
      CHECK(std::abs(l - prev_lux) <= 0.05);
    }
    prev_tau = t;
    prev_lux = l;
  }
}

TEST_CASE("tail_from_tau") {
  CHECK(tail_from_tau(Exponent::of(2.0), 1.0)(2.0) == doctest::Approx(2 * std::exp(-2.0)).epsilon(1e-15));
  for (double p : {1.0, 1.5, 3.0, kInf}) CHECK(tail_from_tau(Exponent::of(p), 1.3)(0.0) == 2.0);
  CHECK(tail_from_tau(Exponent::of(kInf), 1.0)(1.5) == 0.0);
  CHECK(tail_from_tau(Exponent::of(kInf), 1.0)(1.0) == doctest::Approx(2 * std::exp(-0.5)));
}

TEST_CASE("power tail and hoeffding curves") {
  CHECK(lemma1_tail_curve(Exponent::of(2.0), 3.0)(0.0) == 2.0);
  CHECK(lemma1_tail_curve(Exponent::of(1.0), 1.0)(std::log(4.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lemma1_tail_curve(Exponent::of(2.0), 2.0)(2.0) == doctest::Approx(2 / std::numbers::e).epsilon(1e-15));

  CHECK(hoeffding_classic(1.0)(0.0) == 2.0);
  CHECK(hoeffding_classic(1.0)(2.0) == doctest::Approx(0.270670566473225).epsilon(1e-14));
  CHECK(hoeffding_classic(1.0)(1.0) == doctest::Approx(1.21306131942527).epsilon(1e-14));

  CHECK(hoeffding_complementary(1.0)(3.0) == 0.0);
  CHECK(hoeffding_complementary(1.0)(2.0) == doctest::Approx(1.21306131942527).epsilon(1e-14));
  CHECK(hoeffding_complementary(1.0)(0.0) == 2.0);
  CHECK(hoeffding_complementary(1.0)(2.0 + 1e-12) == 0.0);
  CHECK_THROWS(hoeffding_classic(0.0));
}

TEST_CASE("curves are nonincreasing and nonnegative") {
  const std::vector<BoundCurve> curves{
      tail_from_tau(Exponent::of(1.0), 0.7), tail_from_tau(Exponent::of(3.0), 2.0),
      tail_from_tau(Exponent::of(kInf), 1.0), lemma1_tail_curve(Exponent::of(1.5), 1.0),
      hoeffding_classic(2.0),                  hoeffding_complementary(2.0)};
  for (const BoundCurve& c : curves) {
    CAPTURE(c.name);
    double prev = c(0.0);
    for (int i = 1; i <= 2000; ++i) {
      const double v = c(i * 0.005);
      CHECK(v >= 0.0);
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("classic vs complementary ordering") {
  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(0.1, 10.0);
    const double t = rng.uniform(0.0, 4.0 * a);
    const double c = hoeffding_classic(a)(t);
    const double h = hoeffding_complementary(a)(t);
    if (t <= 2 * a) {
      CHECK(c <= h);
    } else {
      CHECK(h == 0.0);
      CHECK(c > 0.0);
    }
  }
}

TEST_CASE("hoeffding_sum_params") {
  const std::vector<double> four(4, 1.0);
  const auto s = hoeffding_sum_params(four);
  CHECK(s.a_l2 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s.a_l1 == 4.0);
  const std::vector<double> tf{3.0, 4.0};
  CHECK(hoeffding_sum_params(tf).a_l2 == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(hoeffding_sum_params(tf).a_l1 == 7.0);
  const std::vector<double> one{2.5};
  CHECK(hoeffding_sum_params(one).a_l2 == 2.5);
  CHECK(hoeffding_sum_params(one).a_l1 == 2.5);
  CHECK_THROWS(hoeffding_sum_params(std::vector<double>{}));
  CHECK_THROWS(hoeffding_sum_params(std::vector<double>{1.0, -1.0}));
}

TEST_CASE("verify_bound") {
  const auto grid = linear_grid(0.0, 3.0, 0.01);
  CHECK(grid.size() == 301);
  CHECK(grid.back() == doctest::Approx(3.0));
  CHECK(verify_bound(RandomVariable::rademacher(), hoeffding_classic(1.0), grid).ok());
  CHECK(verify_bound(RandomVariable::rademacher(), hoeffding_complementary(1.0), grid).ok());

  const BoundCurve zero{"zero", std::nullopt, {}, "test", [](double) { return 0.0; }};
  const VerificationReport rep = verify_bound(RandomVariable::uniform(1.0), zero, grid);
  CHECK_FALSE(rep.ok());
  for (const Violation& v : rep.violations) {
    CHECK(v.t < 1.0);
    CHECK(v.truth > 0.0);
  }
  CHECK(rep.violations.size() == 100);  // t = 0, 0.01, ..., 0.99
  CHECK(rep.max_gap == doctest::Approx(1.0));

  // report invariant: violations empty iff max gap <= tol
  testing::Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.2, 3.0);
    const RandomVariable u = RandomVariable::uniform(a);
    const BoundCurve c = lemma1_tail_curve(Exponent::of(2.0), rng.uniform(0.1, 2.0));
    const auto r = verify_bound(u, c, linear_grid(0.0, 2 * a, a / 50));
    CHECK(r.ok() == (r.max_gap <= kVerifyTol));
  }

  CHECK_THROWS(verify_bound(RandomVariable::rademacher(), zero, std::vector<double>{}));
  CHECK_THROWS(verify_bound(RandomVariable::rademacher(), zero, std::vector<double>{1.0, 0.5}));
}

TEST_CASE("tau tail curve dominates exact tails") {
  for (const RandomVariable& m : {RandomVariable::laplace(1.0), RandomVariable::uniform(1.0)}) {
    const double tau = tau_norm(m, Exponent::of(1.0)).value;
    const auto rep = verify_bound(m, tail_from_tau(Exponent::of(1.0), tau), linear_grid(0.0, 40.0, 0.01));
    CHECK(rep.ok());
  }
}

}
