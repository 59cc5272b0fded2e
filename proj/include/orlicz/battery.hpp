#pragma once

#include "orlicz/phi.hpp"
#include "orlicz/rv_models.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orlicz {

struct BatteryOptions {
  std::vector<double> p_values{1.0, 1.5, 2.0, 3.0};
  /// Drives the random scale factors of the homogeneity checks.
  std::uint64_t seed = 20240601;
  /// Multiplies tau_upper_const inside the equivalence checks. Anything other
  /// than 1 is a fault injection used to exercise the failure path.
  double tau_const_scale = 1.0;
};

struct CheckResult {
  std::string name;
  bool passed;
  /// Smallest slack across the inequalities of the check; negative means
  /// violated (before tolerance).
  double worst_margin;
  std::string detail;
};

struct BatteryReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Centered models of the battery that belong to L_psi_p.
std::vector<RandomVariable> battery_models(Exponent p);

/// Bounded centered models used by the Hoeffding checks.
std::vector<RandomVariable> bounded_battery_models();

/// Relative grid slack allowed in moment_norm <= tail_norm: both sides are
/// suprema over finite grids, the tail side truncated where P(|X| >= t)
/// reaches 1e-250.
inline constexpr double kLemmaGridSlack = 1e-3;

BatteryReport run_battery(const BatteryOptions& options = {});

}  // namespace orlicz
