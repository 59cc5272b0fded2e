#include "orlicz/norms.hpp"

#include "orlicz/errors.hpp"
#include "orlicz/format.hpp"
#include "orlicz/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace orlicz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_finite(Exponent p, const char* who) {
  if (!p.is_finite()) throw UnsupportedKind(std::string(who) + ": p must be finite");
}

NormEstimate zero_estimate(NormKind kind, Exponent p, double rel_tol) {
  return {0.0, kind, p, rel_tol, "X = 0 almost surely", 0.0, kNaN};
}

std::vector<double> geometric(double from, double to, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double ratio = std::pow(to / from, 1.0 / (n - 1));
  double x = from;
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = x;
    x *= ratio;
  }
  out.back() = to;
  return out;
}

/// Exponent r such that log E e^{tX} grows like |t|^r; the tau constraint
/// can only hold for all t when q >= r.
double log_mgf_growth(const RandomVariable& model) {
  if (std::holds_alternative<Gaussian>(model.family())) return 2.0;
  if (const auto* w = std::get_if<WeibullSym>(&model.family())) {
    return w->p_tail == 1.0 ? kInf : w->p_tail / (w->p_tail - 1.0);
  }
  if (std::holds_alternative<Laplace>(model.family())) return kInf;
  return 1.0;
}

/// log E e^{tX} tabulated on a symmetric log-spaced grid, reused across the
/// K values visited by the bisection.
class TauProblem {
 public:
  TauProblem(const RandomVariable& model, Exponent p, int t_points)
      : model_(model), p_(p), edge_(model.mgf_domain_edge()) {
    if (t_points < 16) throw InvalidInput("tau: t_points must be >= 16");
    const double s = model.scale();
    t_hi_ = std::min(edge_ * (1.0 - 1e-9), 1e3 / s);
    const double t_lo = std::min(1e-6 / s, t_hi_ * 1e-6);
    const std::vector<double> pos = geometric(t_lo, t_hi_, t_points);
    ts_.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) ts_.push_back(-*it);
    ts_.insert(ts_.end(), pos.begin(), pos.end());
    lms_.reserve(ts_.size());
    for (double t : ts_) lms_.push_back(log_mgf(model, t));
  }

  double t_max() const { return t_hi_; }

  TauCheck check(double K) const {
    const double q = p_.q();
    double limit = t_hi_;
    if (!std::isfinite(q)) {
      // phi_inf(Kt) is +inf for |t| > 1/K, so only |t| <= 1/K constrains.
      if (1.0 / K >= edge_) return {kInf, kInf, edge_};
      limit = 1.0 / K;
    }
    auto excess = [&](double t, double lm) {
      const double ph = phi(p_.conjugate(), K * t);
      if (lm == kInf) return kInf;
      if (!(ph > 0.0)) return lm > 0.0 ? kInf : -kInf;
      return (lm - ph) / ph;
    };
    auto excess_at = [&](double t) {
      return std::abs(t) > limit ? -kInf : excess(t, log_mgf(model_, t));
    };

    std::vector<double> grid;
    std::vector<double> values;
    grid.reserve(ts_.size() + 2);
    values.reserve(ts_.size() + 2);
    auto push_endpoint = [&](double t) {
      grid.push_back(t);
      values.push_back(excess_at(t));
    };
    if (limit < t_hi_) push_endpoint(-limit);
    for (std::size_t i = 0; i < ts_.size(); ++i) {
      if (std::abs(ts_[i]) > limit) continue;
      grid.push_back(ts_[i]);
      values.push_back(excess(ts_[i], lms_[i]));
    }
    if (limit < t_hi_) push_endpoint(limit);

    const auto worst_it = std::max_element(values.begin(), values.end());
    const std::size_t wi = static_cast<std::size_t>(worst_it - values.begin());
    TauCheck result{*worst_it, kNaN, grid[wi]};
    if (std::isfinite(result.worst_relative_excess) && grid.size() > 1) {
      const double a = grid[wi == 0 ? 0 : wi - 1];
      const double b = grid[std::min(wi + 1, grid.size() - 1)];
      // Stay on one side of t = 0, where phi vanishes.
      const double lo = (a < 0.0 && grid[wi] > 0.0) ? 0.5 * grid[wi] : a;
      const double hi = (b > 0.0 && grid[wi] < 0.0) ? 0.5 * grid[wi] : b;
      const auto refined = numerics::golden_max(excess_at, lo, hi, 120);
      if (refined.max > result.worst_relative_excess) {
        result.worst_relative_excess = refined.max;
        result.worst_t = refined.argmax;
      }
    }
    const double t = result.worst_t;
    result.worst_absolute_excess =
        log_mgf(model_, t) - phi(p_.conjugate(), K * t);
    return result;
  }

 private:
  const RandomVariable& model_;
  Exponent p_;
  double edge_;
  double t_hi_;
  std::vector<double> ts_;
  std::vector<double> lms_;
};

}  // namespace

const char* to_string(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::luxemburg:
      return "luxemburg";
    case NormKind::tail:
      return "tail";
    case NormKind::moment:
      return "moment";
    case NormKind::tau:
      return "tau";
  }
  return "unknown";
}

bool NormEstimate::finite() const noexcept { return std::isfinite(value); }

NormEstimate luxemburg_norm(const RandomVariable& model, Exponent p, double rel_tol) {
  require_finite(p, "luxemburg_norm");
  if (model.is_zero()) return zero_estimate(NormKind::luxemburg, p, rel_tol);

  numerics::BisectionSpec spec;
  spec.predicate = [&](double K) { return exp_pow_moment(model, p, K).value <= 2.0; };
  spec.lo = 0.5 * model.scale();
  spec.hi = 2.0 * model.scale();
  spec.rel_tol = rel_tol;
  try {
    const double K = numerics::monotone_bisect(spec);
    const ExpectationResult at = exp_pow_moment(model, p, K);
    return {K,
            NormKind::luxemburg,
            p,
            rel_tol,
            "E exp(|X/K|^p) = " + format_number(at.value) + " <= 2 (" + to_string(at.method) +
                ")",
            at.value,
            kNaN};
  } catch (const NoBracket&) {
    return {kInf, NormKind::luxemburg, p, rel_tol,
            "E exp(|X/K|^p) > 2 for every K up to 2^60 times the scale: not in L_psi_p", kInf,
            kNaN};
  }
}

std::vector<double> default_tail_grid(const RandomVariable& model) {
  constexpr int kLinear = 4096;
  constexpr int kGeometric = 512;
  std::vector<double> grid;
  double t_max = 0.0;
  if (const auto sup = model.essential_sup()) {
    t_max = *sup;
    if (const auto* b = std::get_if<BoundedScaled>(&model.family())) {
      for (double v : b->values) grid.push_back(std::abs(v));
    } else if (const auto* e = std::get_if<Empirical>(&model.family())) {
      for (double v : e->samples) grid.push_back(std::abs(v));
    }
  } else {
    numerics::BisectionSpec spec;
    spec.predicate = [&](double t) { return tail(model, t) <= 1e-250; };
    spec.lo = model.scale();
    spec.hi = 2.0 * model.scale();
    spec.rel_tol = 1e-9;
    t_max = numerics::monotone_bisect(spec);
  }
  if (t_max > 0.0) {
    for (int i = 1; i <= kLinear; ++i) grid.push_back(t_max * i / kLinear);
    const auto g = geometric(t_max * 1e-6, t_max, kGeometric);
    grid.insert(grid.end(), g.begin(), g.end());
  }
  std::erase_if(grid, [](double t) { return !(t > 0.0); });
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

NormEstimate tail_norm(const RandomVariable& model, Exponent p,
                       std::optional<std::span<const double>> t_grid) {
  require_finite(p, "tail_norm");
  std::vector<double> owned;
  if (!t_grid) owned = default_tail_grid(model);
  const std::span<const double> grid = t_grid ? *t_grid : std::span<const double>(owned);

  double best = 0.0;
  double best_t = kNaN;
  for (double t : grid) {
    if (!(t > 0.0)) continue;
    const double pr = tail(model, t);
    if (!(pr > 0.0)) continue;
    const double ratio = t / std::pow(std::log(2.0 / pr), 1.0 / p.p());
    if (ratio > best) {
      best = ratio;
      best_t = t;
    }
  }
  if (std::isnan(best_t)) {
    return {0.0, NormKind::tail, p, 0.0, "tail vanishes on the whole grid", 0.0, kNaN};
  }
  const double t_last = grid.empty() ? 0.0 : grid.back();
  return {best,
          NormKind::tail,
          p,
          0.0,
          "P(|X| >= t) <= 2 exp(-(t/L)^p) on " + std::to_string(grid.size()) +
              " grid points in (0, " + format_number(t_last) + "], tight at t = " +
              format_number(best_t),
          best,
          best_t};
}

std::vector<double> default_alpha_grid() { return geometric(1.0, kMomentAlphaMax, 64); }

NormEstimate moment_norm(const RandomVariable& model, Exponent p,
                         std::optional<std::span<const double>> alpha_grid) {
  require_finite(p, "moment_norm");
  std::vector<double> owned;
  if (!alpha_grid) owned = default_alpha_grid();
  const std::span<const double> grid = alpha_grid ? *alpha_grid : std::span<const double>(owned);
  if (grid.empty()) throw InvalidInput("moment_norm: empty alpha grid");

  double best = 0.0;
  double best_alpha = kNaN;
  double alpha_max = 0.0;
  for (double alpha : grid) {
    if (!(alpha >= 1.0)) throw InvalidInput("moment_norm: alpha grid must lie in [1, inf)");
    alpha_max = std::max(alpha_max, alpha);
    const double m = abs_moment(model, alpha).value;
    if (m == kInf) {
      return {kInf, NormKind::moment, p, 0.0,
              "E|X|^alpha diverges at alpha = " + format_number(alpha), kInf, alpha};
    }
    const double log_ratio =
        (std::log(m) - std::numbers::ln2 - numerics::log_gamma(alpha / p.p() + 1.0)) / alpha;
    const double value = std::exp(log_ratio);
    if (value > best) {
      best = value;
      best_alpha = alpha;
    }
  }
  if (std::isnan(best_alpha)) return zero_estimate(NormKind::moment, p, 0.0);
  return {best,
          NormKind::moment,
          p,
          0.0,
          "E|X|^alpha <= 2 M^alpha Gamma(alpha/p + 1) on " + std::to_string(grid.size()) +
              " alpha values in [1, " + format_number(alpha_max) + "], tight at alpha = " +
              format_number(best_alpha),
          best,
          best_alpha};
}

TauCheck tau_check(const RandomVariable& model, Exponent p, double K, int t_points) {
  if (!(K > 0.0)) throw InvalidInput("tau_check: K must be positive");
  return TauProblem(model, p, t_points).check(K);
}

NormEstimate tau_norm(const RandomVariable& model, Exponent p, double rel_tol, int t_points) {
  const double s = model.scale();
  if (std::abs(model.mean()) > 1e-10 * s) {
    throw CenteringRequired("tau norm requires a centered model, mean is " +
                            format_number(model.mean()));
  }
  if (model.is_zero()) return zero_estimate(NormKind::tau, p, rel_tol);

  const double q = p.q();
  if (std::isfinite(q) && (std::isfinite(model.mgf_domain_edge()) || q < log_mgf_growth(model))) {
    return {kInf, NormKind::tau, p, rel_tol,
            "log E exp(tX) outgrows phi_q(Kt) for every K (q = " + format_number(q) + ")", kInf,
            kNaN};
  }

  const TauProblem problem(model, p, t_points);
  numerics::BisectionSpec spec;
  spec.predicate = [&](double K) {
    return problem.check(K).worst_relative_excess <= kTauFeasibilityMargin;
  };
  spec.lo = 0.5 * s;
  spec.hi = 2.0 * s;
  spec.rel_tol = rel_tol;
  try {
    const double K = numerics::monotone_bisect(spec);
    const TauCheck at = problem.check(K);
    return {K,
            NormKind::tau,
            p,
            rel_tol,
            "log E exp(tX) <= phi_q(Kt) on |t| <= " +
                format_number(std::isfinite(q) ? problem.t_max()
                                               : std::min(problem.t_max(), 1.0 / K)) +
                ", worst relative excess " + format_number(at.worst_relative_excess, 3) +
                " at t = " + format_number(at.worst_t),
            at.worst_relative_excess,
            at.worst_t};
  } catch (const NoBracket&) {
    return {kInf, NormKind::tau, p, rel_tol,
            "no K up to 2^60 times the scale dominates the MGF", kInf, kNaN};
  }
}

}  // namespace orlicz
