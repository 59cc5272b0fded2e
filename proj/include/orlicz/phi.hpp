#pragma once

#include <functional>
#include <optional>

namespace orlicz {

/// An exponent p in [1, inf] together with its conjugate q, 1/p + 1/q = 1.
/// p = 1 pairs with q = inf and p = inf with q = 1.
class Exponent {
 public:
  /// Throws InvalidExponent unless 1 <= p <= inf.
  static Exponent of(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  bool is_finite() const noexcept;
  Exponent conjugate() const noexcept { return Exponent(q_, p_); }

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent(double p, double q) : p_(p), q_(q) {}
  double p_;
  double q_;
};

/// Same as Exponent::of; named after the operation it performs.
Exponent conjugate_exponent(double p);

/// phi_p(x): x^2/2 on |x| <= 1, |x|^p/p - 1/p + 1/2 beyond (p finite),
/// +inf beyond for p = inf.
double phi(Exponent p, double x) noexcept;
double phi(double p, double x);

/// Derivative of phi_p. Beyond |x| = 1 with p = inf this is +-inf.
double phi_derivative(Exponent p, double x) noexcept;

/// psi_p(x) = exp(|x|^p) - 1, saturating to +inf once |x|^p exceeds the exp
/// cap. Throws UnsupportedKind for p = inf.
double psi(Exponent p, double x);
double psi(double p, double x);

enum class PhiKind { phi_p, psi_p, generic };

/// Even convex function with derivative, as consumed by legendre_numeric.
class PhiFunction {
 public:
  using Fn = std::function<double(double)>;

  static PhiFunction phi_p(Exponent p);
  static PhiFunction psi_p(Exponent p);
  /// deriv may be empty; a central difference is used instead.
  static PhiFunction generic(Fn eval, Fn deriv = {});

  PhiKind kind() const noexcept { return kind_; }
  std::optional<Exponent> exponent() const noexcept { return exponent_; }

  double operator()(double x) const { return eval_(x); }
  double deriv(double x) const;

  /// Inverse of the derivative, [f']^{-1}(y), when known in closed form
  /// (phi_p only). Returns nullopt otherwise or when no maximizer exists.
  std::optional<double> derivative_inverse(double y) const;

 private:
  PhiFunction(PhiKind kind, std::optional<Exponent> exponent, Fn eval, Fn deriv)
      : kind_(kind), exponent_(exponent), eval_(std::move(eval)), deriv_(std::move(deriv)) {}

  PhiKind kind_;
  std::optional<Exponent> exponent_;
  Fn eval_;
  Fn deriv_;
};

/// 10 (1 + |y|)^(q-1) clamped to [10, 1e6] for phi_p; 1e3 otherwise.
double default_search_bound(const PhiFunction& f, double y);

/// Numerical convex conjugate sup_{|x| <= bound} (x y - f(x)). Returns +inf
/// when the objective is still increasing at the bound while f is finite
/// there. Throws InvalidInput if a derivative spot check finds f non-convex.
double legendre_numeric(const PhiFunction& f, double y,
                        std::optional<double> search_bound = std::nullopt);

}  // namespace orlicz
