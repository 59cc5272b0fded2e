#include "orlicz/bounds.hpp"

#include "orlicz/errors.hpp"
#include "orlicz/numerics.hpp"

#include <cmath>
#include <numbers>

namespace orlicz {

namespace {

constexpr double kTwoSqrt2 = 2.0 * std::numbers::sqrt2;

void require_positive(double v, const char* what) {
  if (!(v > 0.0 && std::isfinite(v))) throw InvalidInput(std::string(what) + " must be positive");
}

}  // namespace

double tau_upper_const(Exponent p) {
  const double pp = p.p();
  if (pp == 1.0) return kTwoSqrt2;
  if (!p.is_finite()) return 1.0 + kTwoSqrt2;
  const double q = p.q();
  // log space: q blows up as p -> 1 and both powers overflow
  const double a = q / pp * std::log(8.0 / pp);
  const double b = q * std::log(kTwoSqrt2);
  const double m = std::max(a, b);
  return std::exp((m + std::log(std::exp(a - m) + std::exp(b - m))) / q);
}

double tau_upper_const(double p) { return tau_upper_const(Exponent::of(p)); }

double luxemburg_upper_const(Exponent p) {
  const double pp = p.p();
  if (!p.is_finite()) return 1.0;
  const double base = pp >= 2.0 ? pp : 2.0;
  return std::pow(3.0 * base, 1.0 / pp);
}

double luxemburg_upper_const(double p) { return luxemburg_upper_const(Exponent::of(p)); }

std::vector<double> BoundCurve::table(std::span<const double> ts) const {
  std::vector<double> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(eval(t));
  return out;
}

BoundCurve tail_from_tau(Exponent p, double K) {
  require_positive(K, "tail_from_tau: K");
  return {"tau_tail",
          p,
          {{"K", K}},
          "Chernoff bound from MGF domination by exp(phi_q(Kt))",
          [p, K](double t) { return 2.0 * std::exp(-phi(p, t / K)); }};
}

BoundCurve lemma1_tail_curve(Exponent p, double L) {
  if (!p.is_finite()) throw UnsupportedKind("lemma1_tail_curve: p must be finite");
  require_positive(L, "lemma1_tail_curve: L");
  const double pp = p.p();
  return {"psi_tail",
          p,
          {{"L", L}},
          "tail condition equivalent to finite psi_p norm",
          [pp, L](double t) { return 2.0 * std::exp(-std::pow(t / L, pp)); }};
}

BoundCurve hoeffding_classic(double a) {
  require_positive(a, "hoeffding_classic: a");
  return {"classic",
          Exponent::of(2.0),
          {{"a", a}},
          "Hoeffding: E exp(tX) <= exp(a^2 t^2 / 2)",
          [a](double t) { return 2.0 * std::exp(-t * t / (2.0 * a * a)); }};
}

BoundCurve hoeffding_complementary(double a) {
  require_positive(a, "hoeffding_complementary: a");
  BoundCurve curve = tail_from_tau(Exponent::of(kInf), 2.0 * a);
  curve.name = "complementary";
  curve.params = {{"a", a}};
  curve.provenance = "limit p -> inf of the phi_p tail bound with tau_{phi_p}(X) <= 2a";
  return curve;
}

HoeffdingSumParams hoeffding_sum_params(std::span<const double> a_list) {
  if (a_list.empty()) throw InvalidInput("hoeffding_sum_params: empty list");
  double sum_sq = 0.0;
  double sum = 0.0;
  for (double a : a_list) {
    require_positive(a, "hoeffding_sum_params: every a_k");
    sum_sq += a * a;
    sum += a;
  }
  return {std::sqrt(sum_sq), sum};
}

VerificationReport verify_bound(const RandomVariable& model, const BoundCurve& curve,
                                std::span<const double> t_grid, double tol) {
  if (t_grid.empty()) throw InvalidInput("verify_bound: empty t grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw InvalidInput("verify_bound: t grid must increase");
  }
  VerificationReport report;
  report.t_grid.assign(t_grid.begin(), t_grid.end());
  report.max_gap = -kInf;
  for (double t : t_grid) {
    const double truth = tail(model, t);
    const double bound = curve(t);
    report.truth.push_back(truth);
    report.bound.push_back(bound);
    const double gap = truth - bound;
    report.max_gap = std::max(report.max_gap, gap);
    if (gap > tol) report.violations.push_back({t, truth, bound});
  }
  return report;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw InvalidInput("grid: need lo <= hi and step > 0");
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

}  // namespace orlicz
