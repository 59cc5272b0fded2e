#pragma once

#include "orlicz/phi.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orlicz {

struct PointMass {
  double c;
};
struct Rademacher {};
/// Uniform on [-a, a].
struct UniformSym {
  double a;
};
/// Finite support `values` with probabilities `weights`.
struct BoundedScaled {
  std::vector<double> values;
  std::vector<double> weights;
};
struct Gaussian {
  double sigma;
};
/// Density exp(-|x|/b) / (2b).
struct Laplace {
  double b;
};
/// Symmetric law with P(|X| >= t) = min(1, 2 exp(-(t/scale)^p_tail)).
struct WeibullSym {
  double p_tail;
  double scale;
};
/// Empirical measure of a finite sample.
struct Empirical {
  std::vector<double> samples;
};

using Family = std::variant<PointMass, Rademacher, UniformSym, BoundedScaled, Gaussian, Laplace,
                            WeibullSym, Empirical>;

/// An immutable distribution model. Construction validates parameters and
/// caches the mean.
class RandomVariable {
 public:
  explicit RandomVariable(Family family);

  static RandomVariable point_mass(double c) { return RandomVariable(PointMass{c}); }
  static RandomVariable rademacher() { return RandomVariable(Rademacher{}); }
  static RandomVariable uniform(double a) { return RandomVariable(UniformSym{a}); }
  static RandomVariable bounded(std::vector<double> values, std::vector<double> weights) {
    return RandomVariable(BoundedScaled{std::move(values), std::move(weights)});
  }
  static RandomVariable gaussian(double sigma) { return RandomVariable(Gaussian{sigma}); }
  static RandomVariable laplace(double b) { return RandomVariable(Laplace{b}); }
  static RandomVariable weibull(double p_tail, double scale) {
    return RandomVariable(WeibullSym{p_tail, scale});
  }
  static RandomVariable empirical(std::vector<double> samples) {
    return RandomVariable(Empirical{std::move(samples)});
  }

  const Family& family() const noexcept { return family_; }
  double mean() const noexcept { return mean_; }

  /// Model spec string that parses back to this model (empirical models
  /// render as "empirical[n]").
  std::string name() const;

  /// True when X = 0 almost surely.
  bool is_zero() const;
  /// True for the finitely supported families.
  bool is_discrete() const;
  /// Smallest a with P(|X| <= a) = 1, for bounded families.
  std::optional<double> essential_sup() const;
  /// sup{|t| : E exp(tX) < inf}; the MGF is infinite at the edge itself.
  double mgf_domain_edge() const;
  /// Root mean square, or 1 for the zero variable. Used to scale grids.
  double scale() const;

 private:
  Family family_;
  double mean_ = 0.0;
};

enum class ExpectationMethod { closed_form, quadrature, finite_sum };

const char* to_string(ExpectationMethod m) noexcept;

struct ExpectationResult {
  double value;
  ExpectationMethod method;
  double abs_error_estimate;
};

/// `quadrature` forces numerical integration for continuous families, which
/// gives an independent route to every closed form.
enum class Evaluation { automatic, quadrature };

/// P(|X| >= t).
double tail(const RandomVariable& model, double t);

/// E|X|^alpha, alpha >= 1.
ExpectationResult abs_moment(const RandomVariable& model, double alpha,
                             Evaluation how = Evaluation::automatic);

/// E exp(tX); +inf outside the MGF domain.
ExpectationResult mgf(const RandomVariable& model, double t,
                      Evaluation how = Evaluation::automatic);

/// log E exp(tX), accurate in relative terms as t -> 0.
double log_mgf(const RandomVariable& model, double t, Evaluation how = Evaluation::automatic);

/// E exp(|X/K|^p) for finite p and K > 0; +inf on divergence.
ExpectationResult exp_pow_moment(const RandomVariable& model, Exponent p, double K,
                                 Evaluation how = Evaluation::automatic);

/// X - E X. Symmetric families come back unchanged.
RandomVariable center(const RandomVariable& model);

/// cX for c > 0.
RandomVariable scaled(const RandomVariable& model, double c);

/// Law of the sum of independent copies of finitely supported models.
RandomVariable sum_of_independent(std::span<const RandomVariable> models);

/// Parses one decimal value per line; '#' starts a comment. Throws
/// InvalidInput naming the offending line.
std::vector<double> read_samples(std::istream& in);
std::vector<double> load_samples(const std::filesystem::path& path);

/// Parses `family[:param[,param...]]`:
///   pointmass:c  rademacher  uniform:a  bounded:v@w,v@w,...  gaussian:sigma
///   laplace:b  weibull:p_tail,scale  empirical:<path>
RandomVariable parse_model(std::string_view spec);

/// Locale-independent double parsing; accepts "inf". Throws InvalidInput.
double parse_number(std::string_view text);

}  // namespace orlicz
