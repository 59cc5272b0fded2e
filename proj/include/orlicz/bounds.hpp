#pragma once

#include "orlicz/phi.hpp"
#include "orlicz/rv_models.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

/// Upper constant C with tau_{phi_p}(X) <= C ||X||_{psi_p}: 2 sqrt 2 at p = 1,
/// [(8/p)^(q/p) + (2 sqrt 2)^q]^(1/q) for p > 1 (1 + 2 sqrt 2 in the limit p = inf).
double tau_upper_const(Exponent p);
double tau_upper_const(double p);

/// Upper constant C with ||X||_{psi_p} <= C tau_{phi_p}(X): 3^(1/p) p^(1/p)
/// for p >= 2 and 3^(1/p) 2^(1/p) for 1 <= p < 2.
double luxemburg_upper_const(Exponent p);
double luxemburg_upper_const(double p);

/// A named tail bound t -> B(t), t >= 0.
struct BoundCurve {
  std::string name;
  std::optional<Exponent> p;
  std::vector<std::pair<std::string, double>> params;
  /// Which inequality the curve instantiates.
  std::string provenance;
  std::function<double(double)> eval;

  double operator()(double t) const { return eval(t); }
  std::vector<double> table(std::span<const double> ts) const;
};

/// t -> 2 exp(-phi_p(t/K)): the Chernoff bound implied by tau_{phi_p}(X) <= K.
BoundCurve tail_from_tau(Exponent p, double K);

/// t -> 2 exp(-(t/L)^p).
BoundCurve lemma1_tail_curve(Exponent p, double L);

/// t -> 2 exp(-t^2 / (2 a^2)) for centered X with |X| <= a.
BoundCurve hoeffding_classic(double a);

/// t -> 2 exp(-t^2 / (8 a^2)) on [0, 2a] and 0 beyond, for centered X with
/// |X| <= a almost surely.
BoundCurve hoeffding_complementary(double a);

struct HoeffdingSumParams {
  /// (sum a_k^2)^(1/2): the sub-gaussian constant of the sum.
  double a_l2;
  /// sum a_k: the almost-sure bound of the sum.
  double a_l1;
};

/// Parameters for summing independent centered |X_k| <= a_k. Feed a_l2 to
/// hoeffding_classic and a_l1 to hoeffding_complementary.
HoeffdingSumParams hoeffding_sum_params(std::span<const double> a_list);

struct Violation {
  double t;
  double truth;
  double bound;
};

struct VerificationReport {
  std::vector<double> t_grid;
  std::vector<double> truth;
  std::vector<double> bound;
  std::vector<Violation> violations;
  /// max over the grid of truth - bound.
  double max_gap;

  bool ok() const noexcept { return violations.empty(); }
};

inline constexpr double kVerifyTol = 1e-12;

/// Compares P(|X| >= t) with curve(t) on an increasing grid.
VerificationReport verify_bound(const RandomVariable& model, const BoundCurve& curve,
                                std::span<const double> t_grid, double tol = kVerifyTol);

/// lo, lo + step, ..., up to hi (inclusive within rounding).
std::vector<double> linear_grid(double lo, double hi, double step);

}  // namespace orlicz
