#include "orlicz/errors.hpp"
#include "orlicz/numerics.hpp"
#include "orlicz/rv_models.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace orlicz;


namespace {

std::vector<RandomVariable> continuous_models() {
  return {RandomVariable::uniform(1.0),     RandomVariable::uniform(2.5),
          RandomVariable::gaussian(1.0),    RandomVariable::gaussian(0.3),
          RandomVariable::laplace(1.0),     RandomVariable::laplace(2.0),
          RandomVariable::weibull(1.0, 1.0), RandomVariable::weibull(1.5, 2.0),
          RandomVariable::weibull(2.0, 1.0), RandomVariable::weibull(3.0, 0.7)};
}

std::vector<RandomVariable> all_models() {
  auto m = continuous_models();
  m.push_back(RandomVariable::rademacher());
  m.push_back(RandomVariable::point_mass(0.7));
  m.push_back(RandomVariable::bounded({-1.0, 2.0}, {2.0 / 3.0, 1.0 / 3.0}));
  m.push_back(RandomVariable::empirical({-1.5, 0.25, 0.5, 2.0, -0.1}));
  return m;
}

}  // namespace

TEST_SUITE("rv_models") {

TEST_CASE("tail examples") {
  CHECK(tail(RandomVariable::rademacher(), 0.5) == 1.0);
  CHECK(tail(RandomVariable::rademacher(), 1.0) == 1.0);
  CHECK(tail(RandomVariable::rademacher(), 1.0 + 1e-12) == 0.0);
  CHECK(tail(RandomVariable::gaussian(1.0), 1.0) ==
        doctest::Approx(0.317310507862914103).epsilon(1e-13));
  CHECK(tail(RandomVariable::uniform(2.0), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(tail(RandomVariable::uniform(2.0), 3.0) == 0.0);
  CHECK(tail(RandomVariable::laplace(2.0), 3.0) == doctest::Approx(std::exp(-1.5)).epsilon(1e-15));
  CHECK(tail(RandomVariable::weibull(2.0, 1.0), 0.5) == 1.0);
  CHECK(tail(RandomVariable::weibull(2.0, 1.0), 2.0) ==
        doctest::Approx(2 * std::exp(-4.0)).epsilon(1e-15));
  CHECK(tail(RandomVariable::point_mass(-3.0), 3.0) == 1.0);
  CHECK(tail(RandomVariable::empirical({-2, -1, 0, 1}), 1.0) == doctest::Approx(0.75));
}

TEST_CASE("abs_moment examples") {
  for (double a : {1.0, 2.5, 7.0}) CHECK(abs_moment(RandomVariable::rademacher(), a).value == 1.0);
  CHECK(abs_moment(RandomVariable::gaussian(1.0), 2.0).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(abs_moment(RandomVariable::laplace(1.0), 3.0).value == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(abs_moment(RandomVariable::uniform(1.0), 2.0).value == doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("mgf examples") {
  for (const RandomVariable& m : all_models()) {
    const ExpectationResult r = mgf(m, 0.0);
    CHECK(r.value == 1.0);
  }
  const double s = 1.7;
  for (double t : {-2.0, 0.3, 1.5})
    CHECK(mgf(RandomVariable::gaussian(s), t).value ==
          doctest::Approx(std::exp(s * s * t * t / 2)).epsilon(1e-14));
  CHECK(mgf(RandomVariable::laplace(1.0), 2.0).value == kInf);
  CHECK(mgf(RandomVariable::laplace(1.0), 1.0).value == kInf);
  CHECK(mgf(RandomVariable::laplace(1.0), 0.5).value == doctest::Approx(1 / 0.75).epsilon(1e-14));
  CHECK(mgf(RandomVariable::weibull(1.0, 1.0), 1.0).value == kInf);
}

TEST_CASE("weibull p=1 mgf closed form") {
  // two-sided exponential tail started at ln 2 on each side
  const RandomVariable w = RandomVariable::weibull(1.0, 1.0);
  for (double t : {0.1, 0.5, 0.9}) {
    const double exact = std::pow(2.0, t - 1) / (1 - t) + std::pow(2.0, -t - 1) / (1 + t);
    CHECK(mgf(w, t).value == doctest::Approx(exact).epsilon(1e-10));
    CHECK(mgf(w, t, Evaluation::quadrature).value == doctest::Approx(exact).epsilon(1e-10));
  }
  CHECK(mgf(w, 0.5).value == doctest::Approx(1.64991582276861089).epsilon(1e-12));
}

TEST_CASE("exp_pow_moment examples") {
  for (double c : {-2.0, 0.5, 3.0})
    for (double p : {1.0, 2.0, 3.0})
      CHECK(exp_pow_moment(RandomVariable::point_mass(c), Exponent::of(p), 1.5).value ==
            doctest::Approx(std::exp(std::pow(std::abs(c) / 1.5, p))).epsilon(1e-14));
  CHECK(exp_pow_moment(RandomVariable::gaussian(1.0), Exponent::of(2.0), 2.0).value ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(exp_pow_moment(RandomVariable::gaussian(1.0), Exponent::of(2.0), std::sqrt(2.0)).value == kInf);
  CHECK(exp_pow_moment(RandomVariable::gaussian(1.0), Exponent::of(3.0), 50.0).value == kInf);
  CHECK(exp_pow_moment(RandomVariable::laplace(1.0), Exponent::of(1.0), 0.5).value == kInf);
  CHECK(exp_pow_moment(RandomVariable::laplace(1.0), Exponent::of(1.0), 2.0).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(exp_pow_moment(RandomVariable::weibull(2.0, 1.0), Exponent::of(2.0), 1.0).value == kInf);
  CHECK_THROWS(exp_pow_moment(RandomVariable::gaussian(1.0), Exponent::of(kInf), 1.0));
}

TEST_CASE("quadrature agrees with closed forms") {
  for (const RandomVariable& m : continuous_models()) {
    CAPTURE(m.name());
    for (double alpha : {1.0, 2.0, 3.5, 10.0}) {
      const auto cf = abs_moment(m, alpha);
      const auto qd = abs_moment(m, alpha, Evaluation::quadrature);
      CHECK(qd.method == ExpectationMethod::quadrature);
      CHECK(std::abs(cf.value - qd.value) <= std::max(1e-8 * cf.value, qd.abs_error_estimate));
    }
    const double edge = m.mgf_domain_edge();
    for (double t : {-2.0, -0.4, 0.05, 0.6, 3.0}) {
      if (std::abs(t) >= edge) continue;
      const auto cf = mgf(m, t);
      const auto qd = mgf(m, t, Evaluation::quadrature);
      CHECK(std::abs(cf.value - qd.value) <= std::max(1e-8 * cf.value, qd.abs_error_estimate));
    }
    for (double p : {1.0, 1.5, 2.0}) {
      for (double K : {1.5, 3.0, 6.0}) {
        const auto cf = exp_pow_moment(m, Exponent::of(p), K);
        const auto qd = exp_pow_moment(m, Exponent::of(p), K, Evaluation::quadrature);
        if (!std::isfinite(cf.value)) {
          CHECK(qd.value == kInf);
          continue;
        }
        CHECK(std::abs(cf.value - qd.value) <= std::max(1e-8 * cf.value, qd.abs_error_estimate));
      }
    }
  }
}

TEST_CASE("exp_pow_moment is nonincreasing in K") {
  testing::Rng rng(19);
  for (const RandomVariable& m : all_models()) {
    CAPTURE(m.name());
    for (double p : {1.0, 2.0}) {
      double K = 0.5;
      double prev = exp_pow_moment(m, Exponent::of(p), K).value;
      for (int i = 0; i < 12; ++i) {
        K *= 1.0 + rng.uniform(0.05, 0.8);
        const double cur = exp_pow_moment(m, Exponent::of(p), K).value;
        CHECK(cur <= prev * (1 + 1e-12));
        if (std::isfinite(prev)) CHECK(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("exponential Markov and Jensen") {
  testing::Rng rng(23);
  for (const RandomVariable& m : all_models()) {
    CAPTURE(m.name());
    for (int i = 0; i < 40; ++i) {
      const double t = rng.uniform(0.0, 4.0);
      const double K = rng.uniform(0.8, 6.0);
      const double e = exp_pow_moment(m, Exponent::of(2.0), K).value;
      CHECK(tail(m, t) <= std::exp(-std::pow(t / K, 2)) * e * (1 + 1e-12));
      const double s = rng.uniform(-0.95, 0.95) * std::min(2.0, m.mgf_domain_edge());
      CHECK(mgf(m, s).value >= std::exp(s * m.mean()) * (1 - 1e-12));
    }
  }
}

TEST_CASE("log_mgf keeps relative accuracy near zero") {
  const double t = 1e-6;
  CHECK(log_mgf(RandomVariable::rademacher(), t) == doctest::Approx(t * t / 2).epsilon(1e-9));
  CHECK(log_mgf(RandomVariable::uniform(1.0), t) == doctest::Approx(t * t / 6).epsilon(1e-9));
  CHECK(log_mgf(RandomVariable::laplace(1.0), t) == doctest::Approx(-std::log1p(-t * t)).epsilon(1e-9));
  CHECK(log_mgf(RandomVariable::laplace(1.0), t, Evaluation::quadrature) ==
        doctest::Approx(t * t).epsilon(1e-7));
}

TEST_CASE("center") {
  const RandomVariable g = center(RandomVariable::gaussian(2.0));
  CHECK(g.name() == "gaussian:2");
  const RandomVariable z = center(RandomVariable::point_mass(3.0));
  CHECK(z.is_zero());
  const RandomVariable e = center(RandomVariable::empirical({0.0, 1.0, 2.0}));
  const auto& s = std::get<Empirical>(e.family()).samples;
  REQUIRE(s.size() == 3);
  CHECK(s[0] == -1.0);
  CHECK(s[1] == 0.0);
  CHECK(s[2] == 1.0);
  const RandomVariable b = center(RandomVariable::bounded({0.0, 3.0}, {0.5, 0.5}));
  CHECK(std::abs(b.mean()) <= 1e-15);
  CHECK(*b.essential_sup() == doctest::Approx(1.5));
}

TEST_CASE("scaled and sums") {
  const RandomVariable r = scaled(RandomVariable::rademacher(), 3.0);
  CHECK(*r.essential_sup() == 3.0);
  CHECK(scaled(RandomVariable::gaussian(1.0), 2.0).name() == "gaussian:2");
  CHECK_THROWS_AS(scaled(RandomVariable::gaussian(1.0), -1.0), InvalidInput);

  // 20 Rademachers against the binomial tail computed here
  std::vector<RandomVariable> parts(20, RandomVariable::rademacher());
  const RandomVariable s = sum_of_independent(parts);
  for (int k = 0; k <= 20; k += 2) {
    // P(|S| >= k): S = 2B - 20, B ~ Bin(20, 1/2)
    double prob = 0.0;
    for (int b = 0; b <= 20; ++b)
      if (std::abs(2 * b - 20) >= k)
        prob += std::exp(std::lgamma(21.0) - std::lgamma(b + 1.0) - std::lgamma(21.0 - b)) *
                std::pow(0.5, 20);
    CHECK(tail(s, k) == doctest::Approx(prob).epsilon(1e-12));
  }
  std::vector<RandomVariable> bad{RandomVariable::gaussian(1.0)};
  CHECK_THROWS_AS(sum_of_independent(bad), InvalidInput);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(RandomVariable::uniform(0.0), InvalidInput);
  CHECK_THROWS_AS(RandomVariable::gaussian(-1.0), InvalidInput);
  CHECK_THROWS_AS(RandomVariable::weibull(0.5, 1.0), InvalidInput);
  CHECK_THROWS_AS(RandomVariable::bounded({1.0, 2.0}, {0.5, 0.4}), InvalidInput);
  CHECK_THROWS_AS(RandomVariable::bounded({1.0}, {0.5, 0.5}), InvalidInput);
  CHECK_THROWS_AS(RandomVariable::empirical({}), InvalidInput);
}

TEST_CASE("parse_model and names round-trip") {
  for (const char* spec : {"pointmass:3", "rademacher", "uniform:2.5", "gaussian:1", "laplace:0.5",
                           "weibull:1.5,2", "bounded:-1@0.25,1@0.75"}) {
    CAPTURE(spec);
    const RandomVariable m = parse_model(spec);
    CHECK(m.name() == spec);
    CHECK(parse_model(m.name()).name() == m.name());
  }
  CHECK_THROWS_AS(parse_model("gaussian"), InvalidInput);
  CHECK_THROWS_AS(parse_model("gaussian:1,2"), InvalidInput);
  CHECK_THROWS_AS(parse_model("gaussian:x"), InvalidInput);
  CHECK_THROWS_AS(parse_model("cauchy:1"), InvalidInput);
  CHECK_THROWS_AS(parse_model("bounded:1@"), InvalidInput);
  CHECK(parse_number("+2.5") == 2.5);
  CHECK(parse_number("inf") == kInf);
  CHECK_THROWS_AS(parse_number("2.5x"), InvalidInput);
  CHECK_THROWS_AS(parse_number(""), InvalidInput);
}

TEST_CASE("sample files") {
  std::istringstream ok("\xEF\xBB\xBF# header\n1.5\n  -2 \n\n3e-1 # trailing\n");
  const auto v = read_samples(ok);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 1.5);
  CHECK(v[1] == -2.0);
  CHECK(v[2] == 0.3);

  std::istringstream bad("1\n2\nabc\n");
  try {
    read_samples(bad);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  const auto path = std::filesystem::temp_directory_path() / "orlicz_samples_test.txt";
  {
    std::ofstream f(path);
    f << "# three points\n0\n1\n2\n";
  }
  const RandomVariable m = parse_model("empirical:" + path.string());
  CHECK(m.name() == "empirical[3]");
  CHECK(m.mean() == doctest::Approx(1.0));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_model("empirical:" + path.string()), InvalidInput);
}

}
