#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Arguments of exp above this cap saturate to +inf.
inline constexpr double kExpCap = 700.0;

/// exp(x) with deterministic saturation: +inf for x > kExpCap.
double safe_exp(double x) noexcept;

namespace numerics {

/// log Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// log(sum_i w_i exp(v_i)) without overflow. Weights must be >= 0; entries
/// with zero weight or v = -inf are skipped. Returns -inf for an empty sum.
double log_sum_exp(std::span<const double> values, std::span<const double> weights);

/// e^x - 1 - x, accurate for small |x|.
double expm1mx(double x) noexcept;

/// log(cosh(x)), accurate near zero and overflow free.
double log_cosh(double x) noexcept;

/// log(cosh(x) - 1), i.e. log(2 sinh^2(x/2)); -inf at 0.
double log_cosh_m1(double x) noexcept;

/// Standard normal upper tail 1 - Phi(x).
double normal_upper_tail(double x) noexcept;

inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kMonteCarloRelTol = 1e-4;

struct BisectionSpec {
  /// Monotone: false below some threshold, true above it.
  std::function<bool(double)> predicate;
  double lo = 0.5;
  double hi = 2.0;
  double rel_tol = kDefaultRelTol;
  int max_iter = 400;
};

/// Smallest K (to rel_tol) for which spec.predicate(K) holds. The bracket is
/// auto-expanded (hi doubled up to 2^60 * lo, lo halved down to 2^-60 * lo).
/// Returns the upper end of the final bracket, which is certified feasible.
/// Throws NoBracket or ConvergenceError.
double monotone_bisect(const BisectionSpec& spec);

struct Interval {
  double lo;
  double hi;
};

struct SupResult {
  double argmax;
  double max;
};

/// Grid-plus-golden-section maximization of f over [domain.lo, domain.hi].
/// The grid mixes grid_points linear points with grid_points geometric points
/// on each signed half of the interval. f may return -inf (outside its
/// effective domain). Throws EmptyDomain if f is -inf everywhere on the grid.
SupResult sup_search(const std::function<double(double)>& f, Interval domain,
                     int grid_points);

/// Same, over a caller-supplied increasing grid.
SupResult sup_search_on_grid(const std::function<double(double)>& f,
                             std::span<const double> grid);

/// Golden-section maximization of a unimodal f on [a, b]; returns the best
/// point seen, including both endpoints.
SupResult golden_max(const std::function<double(double)>& f, double a, double b,
                     int iterations = 200);

struct LogIntegral {
  /// log of the integral; -inf for a zero integral, +inf on overflow.
  double log_value;
  /// Absolute error estimate of the integral (not of its log).
  double abs_error;
};

/// log of the integral of exp(h(r)) over [lo, hi) where hi may be +inf.
/// For an infinite upper limit the range is truncated once h has dropped
/// ~46 nats below its maximum and is still decreasing; the neglected tail is
/// folded into abs_error. `scale` is a characteristic length of h.
LogIntegral log_integrate(const std::function<double(double)>& h, double lo,
                          double hi, double scale);

}  // namespace numerics
}  // namespace orlicz
