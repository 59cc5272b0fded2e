#include "orlicz/phi.hpp"

#include "orlicz/errors.hpp"
#include "orlicz/format.hpp"
#include "orlicz/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace orlicz {

Exponent Exponent::of(double p) {
  if (!(p >= 1.0)) {
    throw InvalidExponent("exponent must satisfy 1 <= p <= inf, got " + format_number(p));
  }
  if (p == 1.0) return Exponent(1.0, kInf);
  if (p == kInf) return Exponent(kInf, 1.0);
  return Exponent(p, p / (p - 1.0));
}

bool Exponent::is_finite() const noexcept { return std::isfinite(p_); }

Exponent conjugate_exponent(double p) { return Exponent::of(p); }

double phi(Exponent p, double x) noexcept {
  const double ax = std::abs(x);
  if (ax <= 1.0) return 0.5 * x * x;
  if (!p.is_finite()) return kInf;
  const double pp = p.p();
  if (pp == 2.0) return 0.5 * x * x;
  return std::pow(ax, pp) / pp - 1.0 / pp + 0.5;
}

double phi(double p, double x) { return phi(Exponent::of(p), x); }

double phi_derivative(Exponent p, double x) noexcept {
  const double ax = std::abs(x);
  if (ax <= 1.0) return x;
  const double sign = x < 0.0 ? -1.0 : 1.0;
  if (!p.is_finite()) return sign * kInf;
  return sign * std::pow(ax, p.p() - 1.0);
}

double psi(Exponent p, double x) {
  if (!p.is_finite()) throw UnsupportedKind("psi_p is undefined for p = inf");
  const double arg = std::pow(std::abs(x), p.p());
  if (arg > kExpCap) return kInf;
  return std::expm1(arg);
}

double psi(double p, double x) { return psi(Exponent::of(p), x); }

PhiFunction PhiFunction::phi_p(Exponent p) {
  return PhiFunction(
      PhiKind::phi_p, p, [p](double x) { return phi(p, x); },
      [p](double x) { return phi_derivative(p, x); });
}

PhiFunction PhiFunction::psi_p(Exponent p) {
  if (!p.is_finite()) throw UnsupportedKind("psi_p is undefined for p = inf");
  return PhiFunction(
      PhiKind::psi_p, p, [p](double x) { return psi(p, x); },
      [p](double x) {
        const double ax = std::abs(x);
        if (ax == 0.0) return 0.0;
        const double arg = std::pow(ax, p.p());
        const double sign = x < 0.0 ? -1.0 : 1.0;
        return sign * p.p() * std::pow(ax, p.p() - 1.0) * safe_exp(arg);
      });
}

PhiFunction PhiFunction::generic(Fn eval, Fn deriv) {
  if (!eval) throw InvalidInput("generic PhiFunction needs an evaluator");
  return PhiFunction(PhiKind::generic, std::nullopt, std::move(eval), std::move(deriv));
}

double PhiFunction::deriv(double x) const {
  if (deriv_) return deriv_(x);
  const double h = 1e-6 * (1.0 + std::abs(x));
  const double fp = eval_(x + h);
  const double fm = eval_(x - h);
  if (std::isfinite(fp) && std::isfinite(fm)) return (fp - fm) / (2.0 * h);
  const double f0 = eval_(x);
  if (std::isfinite(fm) && std::isfinite(f0)) return (f0 - fm) / h;
  return kInf;
}

std::optional<double> PhiFunction::derivative_inverse(double y) const {
  if (kind_ != PhiKind::phi_p) return std::nullopt;
  const double ay = std::abs(y);
  const double sign = y < 0.0 ? -1.0 : 1.0;
  if (ay <= 1.0) return y;
  const double p = exponent_->p();
  if (p == 1.0) return std::nullopt;
  if (!std::isfinite(p)) return sign;
  return sign * std::pow(ay, 1.0 / (p - 1.0));
}

double default_search_bound(const PhiFunction& f, double y) {
  if (f.kind() == PhiKind::phi_p) {
    const double q = f.exponent()->q();
    return std::clamp(10.0 * std::pow(1.0 + std::abs(y), q - 1.0), 10.0, 1e6);
  }
  return 1e3;
}

namespace {

void check_convex_even(const PhiFunction& f, double bound) {
  constexpr int kPoints = 65;
  double prev = -kInf;
  for (int i = 0; i < kPoints; ++i) {
    const double x = bound * i / (kPoints - 1);
    const double fx = f(x);
    if (!std::isfinite(fx)) break;
    const double fmx = f(-x);
    if (std::abs(fx - fmx) > 1e-9 * (1.0 + std::abs(fx))) {
      throw InvalidInput("legendre_numeric: function is not even");
    }
    const double d = f.deriv(x);
    if (d < prev - 1e-9 * (1.0 + std::abs(prev))) {
      throw InvalidInput("legendre_numeric: derivative decreases, function is not convex");
    }
    prev = d;
  }
}

}  // namespace

double legendre_numeric(const PhiFunction& f, double y, std::optional<double> search_bound) {
  const double bound = search_bound.value_or(default_search_bound(f, y));
  if (!(bound > 0.0)) throw InvalidInput("legendre_numeric: search_bound must be positive");
  check_convex_even(f, bound);

  // f is even, so the supremum is attained on the half-line carrying the sign of y.
  const double ay = std::abs(y);
  auto objective = [&f, ay](double x) {
    const double fx = f(x);
    return std::isfinite(fx) ? x * ay - fx : -kInf;
  };
  const numerics::SupResult best = numerics::sup_search(objective, {0.0, bound}, 256);

  const double f_bound = f(bound);
  if (best.argmax >= bound * (1.0 - 1e-6) && std::isfinite(f_bound) &&
      ay - f.deriv(bound) > 1e-12 * (1.0 + ay)) {
    return kInf;
  }
  return best.max;
}

}  // namespace orlicz
