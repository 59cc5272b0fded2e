#pragma once

#include "orlicz/phi.hpp"
#include "orlicz/rv_models.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orlicz {

enum class NormKind { luxemburg, tail, moment, tau };

const char* to_string(NormKind kind) noexcept;

/// A computed norm together with the evidence that `value` is feasible.
struct NormEstimate {
  double value;
  NormKind kind;
  Exponent p;
  double rel_tol;
  /// Human-readable description of the check performed at `value`.
  std::string certificate;
  /// The checked quantity at `value`: E exp(|X/K|^p) for luxemburg, the
  /// attaining ratio for tail/moment, the worst relative MGF excess for tau.
  double check_value = 0.0;
  /// Where the supremum behind the estimate sits: t for tail and tau,
  /// alpha for moment. NaN when not applicable.
  double witness;

  bool finite() const noexcept;
};

/// inf{K > 0 : E exp(|X/K|^p) <= 2}. Models outside L_psi_p give +inf.
NormEstimate luxemburg_norm(const RandomVariable& model, Exponent p, double rel_tol = 1e-9);

/// Default grid for tail_norm: dense on (0, t_max] with t_max the essential
/// supremum for bounded models (atoms included exactly) or the point where
/// the tail drops to 1e-250.
std::vector<double> default_tail_grid(const RandomVariable& model);

/// Smallest L with P(|X| >= t) <= 2 exp(-(t/L)^p) on every grid point.
NormEstimate tail_norm(const RandomVariable& model, Exponent p,
                       std::optional<std::span<const double>> t_grid = std::nullopt);

/// 64 geometric points on [1, 50].
std::vector<double> default_alpha_grid();
inline constexpr double kMomentAlphaMax = 50.0;

/// Smallest M with E|X|^alpha <= 2 M^alpha Gamma(alpha/p + 1) on every grid point.
NormEstimate moment_norm(const RandomVariable& model, Exponent p,
                         std::optional<std::span<const double>> alpha_grid = std::nullopt);

/// Relative excess tolerated when comparing log E e^{tX} with phi_q(Kt).
inline constexpr double kTauFeasibilityMargin = 1e-12;

/// Worst relative excess sup_t (log E e^{tX} - phi_q(Kt)) / phi_q(Kt) over the
/// tau search grid for a single K; <= kTauFeasibilityMargin means feasible.
struct TauCheck {
  double worst_relative_excess;
  double worst_absolute_excess;
  double worst_t;
};
TauCheck tau_check(const RandomVariable& model, Exponent p, double K, int t_points = 512);

/// inf{K > 0 : E exp(tX) <= exp(phi_q(Kt)) for all t}, q conjugate to p.
/// Throws CenteringRequired unless |E X| <= 1e-10 * scale.
NormEstimate tau_norm(const RandomVariable& model, Exponent p, double rel_tol = 1e-9,
                      int t_points = 512);

}  // namespace orlicz
