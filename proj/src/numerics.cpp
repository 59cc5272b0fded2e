#include "orlicz/numerics.hpp"

#include "orlicz/errors.hpp"
#include "orlicz/format.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace orlicz {

double safe_exp(double x) noexcept { return x > kExpCap ? kInf : std::exp(x); }

namespace numerics {

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive, got " + format_number(x));
  }
  return boost::math::lgamma(x);
}

double log_sum_exp(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw InvalidInput("log_sum_exp: values and weights differ in length");
  }
  double m = -kInf;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i] < 0.0) throw InvalidInput("log_sum_exp: negative weight");
    if (weights[i] > 0.0) m = std::max(m, values[i]);
  }
  if (m == -kInf || m == kInf) return m;
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i] > 0.0) s += weights[i] * std::exp(values[i] - m);
  }
  return m + std::log(s);
}

double expm1mx(double x) noexcept {
  if (std::abs(x) >= 0.5) return std::expm1(x) - x;
  double term = x * x / 2.0;
  double sum = term;
  for (int k = 3; k < 40; ++k) {
    term *= x / k;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double log_cosh(double x) noexcept {
  const double ax = std::abs(x);
  if (ax < 1.0) {
    const double s = std::sinh(ax / 2.0);
    return std::log1p(2.0 * s * s);
  }
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

double log_cosh_m1(double x) noexcept {
  const double ax = std::abs(x);
  if (ax == 0.0) return -kInf;
  if (ax < 40.0) return std::numbers::ln2 + 2.0 * std::log(std::sinh(ax / 2.0));
  return ax + 2.0 * std::log1p(-std::exp(-ax)) - std::numbers::ln2;
}

double normal_upper_tail(double x) noexcept {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double monotone_bisect(const BisectionSpec& spec) {
  if (!spec.predicate) throw InvalidInput("monotone_bisect: missing predicate");
  if (!(spec.lo > 0.0 && spec.hi > spec.lo && std::isfinite(spec.hi))) {
    throw InvalidInput("monotone_bisect: need 0 < lo < hi");
  }
  if (!(spec.rel_tol > 0.0 && spec.rel_tol < 1.0)) {
    throw InvalidInput("monotone_bisect: rel_tol must lie in (0, 1)");
  }
  const double hi_cap = std::ldexp(spec.lo, 60);
  const double lo_floor = std::ldexp(spec.lo, -60);
  double lo = spec.lo;
  double hi = spec.hi;

  while (!spec.predicate(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > hi_cap) {
      throw NoBracket("monotone_bisect: predicate infeasible up to 2^60 * lo", false);
    }
  }
  while (spec.predicate(lo)) {
    hi = lo;
    lo /= 2.0;
    if (lo < lo_floor) {
      throw NoBracket("monotone_bisect: predicate feasible down to 2^-60 * lo", true);
    }
  }

  int iter = 0;
  while (hi - lo > spec.rel_tol * hi) {
    if (++iter > spec.max_iter) {
      throw ConvergenceError("monotone_bisect: max_iter exceeded", lo, hi);
    }
    const double mid = hi > 2.0 * lo ? std::sqrt(lo) * std::sqrt(hi) : lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (spec.predicate(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

namespace {

double finite_or_neg_inf(double v) { return std::isnan(v) ? -kInf : v; }

void push_geometric(std::vector<double>& grid, double from, double to, int n, double sign) {
  // from < to, both > 0
  const double ratio = std::pow(to / from, 1.0 / (n - 1));
  double x = from;
  for (int i = 0; i < n; ++i) {
    grid.push_back(sign * (i == n - 1 ? to : x));
    x *= ratio;
  }
}

}  // namespace

SupResult golden_max(const std::function<double(double)>& f, double a, double b,
                     int iterations) {
  constexpr double kInvPhi = 0.6180339887498949;
  SupResult best{a, finite_or_neg_inf(f(a))};
  auto consider = [&best](double x, double v) {
    if (v > best.max) best = {x, v};
  };
  consider(b, finite_or_neg_inf(f(b)));
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = finite_or_neg_inf(f(c));
  double fd = finite_or_neg_inf(f(d));
  consider(c, fc);
  consider(d, fd);
  for (int i = 0; i < iterations; ++i) {
    if (b - a <= 1e-15 * (std::abs(a) + std::abs(b)) + 1e-300) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = finite_or_neg_inf(f(c));
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = finite_or_neg_inf(f(d));
      consider(d, fd);
    }
  }
  return best;
}

SupResult sup_search_on_grid(const std::function<double(double)>& f,
                             std::span<const double> grid) {
  if (grid.empty()) throw EmptyDomain("sup_search: empty grid");
  std::size_t best_i = 0;
  double best_v = -kInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = finite_or_neg_inf(f(grid[i]));
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  if (best_v == -kInf) throw EmptyDomain("sup_search: objective is -inf on the whole grid");
  SupResult best{grid[best_i], best_v};
  if (best_v == kInf || grid.size() < 2) return best;
  const double a = grid[best_i == 0 ? 0 : best_i - 1];
  const double b = grid[std::min(best_i + 1, grid.size() - 1)];
  const SupResult refined = golden_max(f, a, b);
  if (refined.max > best.max) best = refined;
  return best;
}

SupResult sup_search(const std::function<double(double)>& f, Interval domain,
                     int grid_points) {
  if (grid_points < 16) throw InvalidInput("sup_search: grid_points must be >= 16");
  if (!(domain.lo <= domain.hi)) throw InvalidInput("sup_search: empty interval");
  std::vector<double> grid;
  grid.reserve(3 * static_cast<std::size_t>(grid_points) + 2);
  for (int i = 0; i < grid_points; ++i) {
    grid.push_back(domain.lo + (domain.hi - domain.lo) * i / (grid_points - 1));
  }
  if (domain.hi > 0.0) {
    const double from = std::max(domain.lo, domain.hi * 1e-12);
    if (from > 0.0 && from < domain.hi) push_geometric(grid, from, domain.hi, grid_points, 1.0);
  }
  if (domain.lo < 0.0) {
    const double from = std::max(-domain.hi, -domain.lo * 1e-12);
    if (from > 0.0 && from < -domain.lo) push_geometric(grid, from, -domain.lo, grid_points, -1.0);
  }
  grid.push_back(domain.hi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return sup_search_on_grid(f, grid);
}

namespace {

struct Piece {
  double value;
  double error;
};

Piece integrate_piece(const std::function<double(double)>& g, double a, double b,
                      double rel_tol) {
  if (!(b > a)) return {0.0, 0.0};
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, a, b, 6, rel_tol, &err);
  return {v, err};
}

}  // namespace

LogIntegral log_integrate(const std::function<double(double)>& h, double lo, double hi,
                          double scale) {
  if (!(scale > 0.0)) throw InvalidInput("log_integrate: scale must be positive");
  if (!(hi > lo)) return {-kInf, 0.0};
  auto hv = [&h](double x) { return finite_or_neg_inf(h(x)); };

  // Coarse samples locate the peak and, for an infinite range, a truncation point.
  std::vector<double> xs;
  std::vector<double> hs;
  auto sample = [&](double x) {
    xs.push_back(x);
    hs.push_back(hv(x));
  };
  double tail_error_factor = 0.0;
  double upper = hi;
  if (std::isfinite(hi)) {
    constexpr int kSamples = 257;
    for (int i = 0; i < kSamples; ++i) sample(lo + (hi - lo) * i / (kSamples - 1));
  } else {
    constexpr double kDrop = 46.0;
    sample(lo);
    double step = 1e-3 * scale;
    bool done = false;
    double running_peak = hs.front();
    for (int j = 0; j < 800 && !done; ++j) {
      sample(lo + step);
      step *= 1.1;
      const std::size_t n = hs.size();
      running_peak = std::max(running_peak, hs[n - 1]);
      if (running_peak > -kInf && hs[n - 1] < running_peak - kDrop && hs[n - 1] < hs[n - 2]) {
        done = true;
        upper = xs[n - 1];
        if (hs[n - 1] > -kInf) {
          const double slope = (hs[n - 1] - hs[n - 2]) / (xs[n - 1] - xs[n - 2]);
          // integral of exp(h(T) + slope (r - T)) over [T, inf), relative to the coarse peak
          tail_error_factor = std::exp(hs[n - 1] - running_peak) / -slope;
        }
      }
    }
    if (!done) return {kInf, kInf};
  }

  const std::size_t ip =
      static_cast<std::size_t>(std::max_element(hs.begin(), hs.end()) - hs.begin());
  if (hs[ip] == -kInf) return {-kInf, 0.0};
  if (hs[ip] == kInf) return {kInf, kInf};
  const SupResult top = golden_max(hv, xs[ip == 0 ? 0 : ip - 1], xs[std::min(ip + 1, xs.size() - 1)]);
  const double x_peak = top.argmax;
  const double peak = std::max(top.max, hs[ip]);
  if (peak == kInf) return {kInf, kInf};
  tail_error_factor *= std::exp(hs[ip] - peak);

  // Local width: distance at which h has dropped by one nat on a side inside
  // the range.
  const double range = upper - lo;
  double width = 1e-9 * std::max(std::abs(x_peak), scale);
  for (int i = 0; i < 200 && width < range; ++i) {
    const bool has_right = x_peak + width <= upper;
    const bool has_left = x_peak - width >= lo;
    if (!has_right && !has_left) break;
    if ((has_right && hv(x_peak + width) < peak - 1.0) ||
        (has_left && hv(x_peak - width) < peak - 1.0)) {
      break;
    }
    width *= 2.0;
  }

  auto g = [&h, peak](double r) {
    const double v = h(r);
    return std::isnan(v) ? 0.0 : std::exp(v - peak);
  };
  // Beyond x on the given side, do coarse samples stay far below the peak?
  auto negligible_beyond = [&](double x, double side) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if ((xs[i] - x) * side > 0.0 && hs[i] >= peak - 46.0) return false;
    }
    return true;
  };
  // exp(h - peak) carries relative noise of order eps * |peak|. Boost floors
  // its error estimate, so short pieces stop at the depth cap instead.
  const double rel_tol =
      std::max(1e-13, 64.0 * std::numeric_limits<double>::epsilon() * std::abs(peak));
  double total = 0.0;
  double error = 0.0;
  for (const double side : {1.0, -1.0}) {
    double inner = x_peak;
    double step = width;
    while (side > 0.0 ? inner < upper : inner > lo) {
      const double outer = side > 0.0 ? std::min(inner + step, upper) : std::max(inner - step, lo);
      const Piece piece = integrate_piece(g, std::min(inner, outer), std::max(inner, outer), rel_tol);
      total += piece.value;
      error += piece.error;
      if (hv(outer) < peak - 50.0 && negligible_beyond(outer, side)) break;
      inner = outer;
      step *= 2.0;
    }
  }
  if (!(total > 0.0)) return {-kInf, 0.0};
  const double log_value = peak + std::log(total);
  return {log_value, (error + tail_error_factor) * std::exp(peak)};
}

}  // namespace numerics
}  // namespace orlicz
