#include "orlicz/battery.hpp"

#include "orlicz/bounds.hpp"
#include "orlicz/format.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>

namespace orlicz {

namespace {

std::string label(const RandomVariable& model, Exponent p) {
  return model.name() + ",p=" + format_number(p.p());
}

/// 1 - lhs / rhs: the relative slack in lhs <= rhs.
double slack(double lhs, double rhs) { return rhs > 0.0 ? 1.0 - lhs / rhs : -lhs; }

CheckResult conjugacy_check(double p_value) {
  const Exponent p = Exponent::of(p_value);
  const PhiFunction f = PhiFunction::phi_p(p);
  double worst = 0.0;
  double worst_y = 0.0;
  bool divergence_ok = true;
  for (int i = 0; i <= 400; ++i) {
    const double y = -5.0 + 0.025 * i;
    const double exact = phi(p.conjugate(), y);
    const double numeric = legendre_numeric(f, y);
    if (std::isinf(exact)) {
      divergence_ok = divergence_ok && numeric > 1e6;
      continue;
    }
    const double err = std::abs(numeric - exact);
    if (err > worst) {
      worst = err;
      worst_y = y;
    }
  }
  const bool ok = worst <= 1e-6 && divergence_ok;
  return {"conjugacy[p=" + format_number(p_value) + "]", ok, 1e-6 - worst,
          "max |numeric - phi_q| = " + format_number(worst, 3) + " at y = " +
              format_number(worst_y) + (divergence_ok ? "" : "; divergence not reported")};
}

CheckResult norm_chain_check(const RandomVariable& model, Exponent p) {
  const double lux = luxemburg_norm(model, p).value;
  const double tn = tail_norm(model, p).value;
  const double mn = moment_norm(model, p).value;
  const double three = std::pow(3.0, 1.0 / p.p());
  const double s1 = slack(tn, lux);
  const double s2 = slack(mn, tn);
  const double s3 = slack(lux, three * mn);
  const bool ok = s1 >= -1e-6 && s2 >= -(1e-6 + kLemmaGridSlack) && s3 >= -1e-6;
  return {"norm_chain[" + label(model, p) + "]", ok, std::min({s1, s2, s3}),
          "luxemburg=" + format_number(lux) + " tail=" + format_number(tn) +
              " moment=" + format_number(mn)};
}

CheckResult equivalence_check(const RandomVariable& model, Exponent p, double const_scale) {
  const double lux = luxemburg_norm(model, p).value;
  const double tau = tau_norm(model, p).value;
  const double c_up = const_scale * tau_upper_const(p);
  const double c_lux = luxemburg_upper_const(p);
  const double s1 = slack(tau, c_up * lux);
  const double s2 = slack(lux, c_lux * tau);
  const bool ok = std::isfinite(tau) && s1 >= -1e-6 && s2 >= -1e-6;
  return {"tau_equivalence[" + label(model, p) + "]", ok, std::min(s1, s2),
          "tau=" + format_number(tau) + " luxemburg=" + format_number(lux) +
              " tau/luxemburg=" + format_number(tau / lux) + " (<= " + format_number(c_up) +
              ") luxemburg/tau=" + format_number(lux / tau) + " (<= " + format_number(c_lux) +
              ")"};
}

CheckResult tau_tail_check(const RandomVariable& model, Exponent p) {
  const double tau = tau_norm(model, p).value;
  const auto grid = default_tail_grid(model);
  const auto report = verify_bound(model, tail_from_tau(p, tau), grid);
  return {"tau_tail_domination[" + label(model, p) + "]", report.ok(), -report.max_gap,
          std::to_string(report.violations.size()) + " violations on " +
              std::to_string(grid.size()) + " points"};
}

CheckResult mgf_bound_check(const RandomVariable& model) {
  const double a = *model.essential_sup();
  double worst = kInf;
  for (int i = 0; i <= 1000; ++i) {
    const double t = (-20.0 + 0.04 * i) / a;
    const double rhs = 0.5 * a * a * t * t;
    const double lhs = log_mgf(model, t);
    worst = std::min(worst, t == 0.0 ? -lhs : slack(lhs, rhs));
  }
  return {"hoeffding_lemma[" + model.name() + "]", worst >= -1e-12, worst,
          "log E exp(tX) <= a^2 t^2 / 2 on 1001 points, a = " + format_number(a)};
}

CheckResult hoeffding_verify_check(const RandomVariable& model, bool complementary) {
  const double a = *model.essential_sup();
  const BoundCurve curve = complementary ? hoeffding_complementary(a) : hoeffding_classic(a);
  std::vector<double> grid;
  for (int i = 0; i <= 600; ++i) grid.push_back(3.0 * a * i / 600.0);
  const auto report = verify_bound(model, curve, grid);
  return {"hoeffding_" + curve.name + "[" + model.name() + "]", report.ok(), -report.max_gap,
          std::to_string(report.violations.size()) + " violations on [0, 3a]"};
}

CheckResult crossover_check(double a) {
  const BoundCurve classic = hoeffding_classic(a);
  const BoundCurve comp = hoeffding_complementary(a);
  bool dominated = true;
  for (int i = 0; i <= 1000; ++i) {
    const double t = 2.0 * a * i / 1000.0;
    dominated = dominated && classic(t) <= comp(t);
  }
  numerics::BisectionSpec spec;
  spec.predicate = [&](double t) { return comp(t) < classic(t); };
  spec.lo = a;
  spec.hi = 4.0 * a;
  spec.rel_tol = 1e-12;
  const double crossing = numerics::monotone_bisect(spec);
  const double err = std::abs(crossing - 2.0 * a) / a;
  return {"hoeffding_crossover[a=" + format_number(a) + "]", dominated && err <= 1e-9,
          1e-9 - err, "crossover at t = " + format_number(crossing, 12)};
}

CheckResult sum_check(int n) {
  const std::vector<RandomVariable> parts(static_cast<std::size_t>(n), RandomVariable::rademacher());
  const RandomVariable sum = sum_of_independent(parts);
  const std::vector<double> a_list(static_cast<std::size_t>(n), 1.0);
  const HoeffdingSumParams params = hoeffding_sum_params(a_list);
  const auto grid = linear_grid(0.0, 1.5 * params.a_l1, 0.01);
  const auto classic = verify_bound(sum, hoeffding_classic(params.a_l2), grid);
  const auto comp = verify_bound(sum, hoeffding_complementary(params.a_l1), grid);
  const auto comp_l2 = verify_bound(sum, hoeffding_complementary(params.a_l2), grid);
  return {"hoeffding_sum[n=" + std::to_string(n) + "]", classic.ok() && comp.ok(),
          -std::max(classic.max_gap, comp.max_gap),
          "a_l2=" + format_number(params.a_l2) + " a_l1=" + format_number(params.a_l1) +
              "; complementary with a_l2 would have " +
              std::to_string(comp_l2.violations.size()) + " violations"};
}

CheckResult homogeneity_check(const RandomVariable& model, Exponent p, double c) {
  const RandomVariable cx = scaled(model, c);
  const double lux = luxemburg_norm(model, p).value;
  const double lux_c = luxemburg_norm(cx, p).value;
  const double tau = tau_norm(model, p).value;
  const double tau_c = tau_norm(cx, p).value;
  const double e1 = std::abs(lux_c - c * lux) / (c * lux);
  const double e2 = std::abs(tau_c - c * tau) / (c * tau);
  const double worst = std::max(e1, e2);
  return {"homogeneity[" + label(model, p) + ",c=" + format_number(c) + "]", worst <= 1e-6,
          1e-6 - worst, "relative errors " + format_number(e1, 3) + ", " + format_number(e2, 3)};
}

// K feasible for tau implies every larger K is; likewise exp_pow_moment only
// falls as K grows.
CheckResult monotone_feasibility_check(const RandomVariable& model, Exponent p,
                                       std::span<const double> factors) {
  const NormEstimate tau = tau_norm(model, p);
  const double lux = luxemburg_norm(model, p).value;
  double worst = -kInf;
  double prev_moment = exp_pow_moment(model, p, lux).value;
  for (double f : factors) {
    worst = std::max(worst, tau_check(model, p, tau.value * f).worst_relative_excess);
    const double m = exp_pow_moment(model, p, lux * f).value;
    worst = std::max(worst, m - prev_moment);
    prev_moment = m;
  }
  std::string list;
  for (double f : factors) list += (list.empty() ? "" : " ") + format_number(f, 4);
  return {"monotone_feasibility[" + label(model, p) + "]", worst <= kTauFeasibilityMargin,
          kTauFeasibilityMargin - worst, "factors " + list};
}

}  // namespace

bool BatteryReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<RandomVariable> battery_models(Exponent p) {
  const double pp = p.p();
  std::vector<RandomVariable> models{
      RandomVariable::rademacher(),
      RandomVariable::uniform(1.0),
      center(RandomVariable::bounded({-1.0, 2.0}, {2.0 / 3.0, 1.0 / 3.0})),
  };
  if (pp <= 2.0) models.push_back(RandomVariable::gaussian(1.0));
  if (pp == 1.0) models.push_back(RandomVariable::laplace(1.0));
  if (p.is_finite()) models.push_back(RandomVariable::weibull(pp, 1.0));
  return models;
}

std::vector<RandomVariable> bounded_battery_models() {
  return {RandomVariable::rademacher(), RandomVariable::uniform(1.0),
          RandomVariable::uniform(2.5),
          center(RandomVariable::bounded({-1.0, 2.0}, {2.0 / 3.0, 1.0 / 3.0}))};
}

BatteryReport run_battery(const BatteryOptions& options) {
  BatteryReport report;
  auto add = [&report](CheckResult r) { report.checks.push_back(std::move(r)); };

  for (double p : {1.0, 1.25, 1.5, 2.0, 3.0, 4.0}) add(conjugacy_check(p));

  std::mt19937_64 rng(options.seed);
  auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  for (double p_value : options.p_values) {
    const Exponent p = Exponent::of(p_value);
    for (const RandomVariable& model : battery_models(p)) {
      add(norm_chain_check(model, p));
      add(equivalence_check(model, p, options.tau_const_scale));
      add(tau_tail_check(model, p));
    }
    const double c = 0.5 + 9.5 * uniform01();
    add(homogeneity_check(RandomVariable::uniform(1.0), p, c));
    // increasing factors >= 1
    std::vector<double> factors{1.0};
    for (int i = 0; i < 4; ++i) factors.push_back(factors.back() * (1.0 + 3.0 * uniform01()));
    add(monotone_feasibility_check(battery_models(p).back(), p, factors));
  }

  for (const RandomVariable& model : bounded_battery_models()) {
    add(mgf_bound_check(model));
    add(hoeffding_verify_check(model, false));
    add(hoeffding_verify_check(model, true));
  }
  add(crossover_check(1.0));
  add(crossover_check(2.5));
  add(sum_check(20));
  return report;
}

}  // namespace orlicz
