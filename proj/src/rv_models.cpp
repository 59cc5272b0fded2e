#include "orlicz/rv_models.hpp"

#include "orlicz/errors.hpp"
#include "orlicz/format.hpp"
#include "orlicz/numerics.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace orlicz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kRademacherValues[] = {-1.0, 1.0};
constexpr double kRademacherWeights[] = {0.5, 0.5};
constexpr double kUnitWeight[] = {1.0};

/// A finitely supported law. Empty `weights` means uniform weights.
struct DiscreteLaw {
  std::span<const double> values;
  std::span<const double> weights;

  std::size_t size() const { return values.size(); }
  double weight(std::size_t i) const {
    return weights.empty() ? 1.0 / static_cast<double>(values.size()) : weights[i];
  }
};

std::optional<DiscreteLaw> discrete_law(const Family& family) {
  return std::visit(
      overloaded{
          [](const PointMass& m) -> std::optional<DiscreteLaw> {
            return DiscreteLaw{std::span<const double>(&m.c, 1), kUnitWeight};
          },
          [](const Rademacher&) -> std::optional<DiscreteLaw> {
            return DiscreteLaw{kRademacherValues, kRademacherWeights};
          },
          [](const BoundedScaled& m) -> std::optional<DiscreteLaw> {
            return DiscreteLaw{m.values, m.weights};
          },
          [](const Empirical& m) -> std::optional<DiscreteLaw> {
            return DiscreteLaw{m.samples, {}};
          },
          [](const auto&) -> std::optional<DiscreteLaw> { return std::nullopt; },
      },
      family);
}

/// log sum_i w_i exp(fn(v_i)).
template <class Fn>
double discrete_log_expectation(const DiscreteLaw& law, Fn fn) {
  double m = -kInf;
  std::vector<double> exponents(law.size());
  for (std::size_t i = 0; i < law.size(); ++i) {
    exponents[i] = fn(law.values[i]);
    if (law.weight(i) > 0.0) m = std::max(m, exponents[i]);
  }
  if (m == -kInf || m == kInf) return m;
  double s = 0.0;
  for (std::size_t i = 0; i < law.size(); ++i) {
    if (law.weight(i) > 0.0) s += law.weight(i) * std::exp(exponents[i] - m);
  }
  return m + std::log(s);
}

/// Density of |X| on [lower, upper), in log form.
struct ContinuousLaw {
  double lower;
  double upper;
  double scale;
  std::function<double(double)> log_density;
};

std::optional<ContinuousLaw> continuous_law(const Family& family) {
  return std::visit(
      overloaded{
          [](const UniformSym& m) -> std::optional<ContinuousLaw> {
            const double a = m.a;
            return ContinuousLaw{0.0, a, a, [a](double) { return -std::log(a); }};
          },
          [](const Gaussian& m) -> std::optional<ContinuousLaw> {
            const double s = m.sigma;
            const double log_norm = std::log(2.0 / (s * std::sqrt(2.0 * std::numbers::pi)));
            return ContinuousLaw{0.0, kInf, s, [s, log_norm](double r) {
                                   return log_norm - r * r / (2.0 * s * s);
                                 }};
          },
          [](const Laplace& m) -> std::optional<ContinuousLaw> {
            const double b = m.b;
            return ContinuousLaw{0.0, kInf, b,
                                 [b](double r) { return -std::log(b) - r / b; }};
          },
          [](const WeibullSym& m) -> std::optional<ContinuousLaw> {
            const double p = m.p_tail;
            const double s = m.scale;
            const double lower = s * std::pow(std::numbers::ln2, 1.0 / p);
            return ContinuousLaw{lower, kInf, s, [p, s, lower](double r) {
                                   if (r < lower) return -kInf;
                                   const double u = r / s;
                                   return std::log(2.0 * p / s) + (p - 1.0) * std::log(u) -
                                          std::pow(u, p);
                                 }};
          },
          [](const auto&) -> std::optional<ContinuousLaw> { return std::nullopt; },
      },
      family);
}

numerics::LogIntegral integrate_abs(const ContinuousLaw& law,
                                    const std::function<double(double)>& log_g) {
  return numerics::log_integrate(
      [&](double r) { return log_g(r) + law.log_density(r); }, law.lower, law.upper, law.scale);
}

struct LogExpectation {
  double log_value;
  ExpectationMethod method;
  double abs_error;
};

LogExpectation closed(double log_value) {
  return {log_value, ExpectationMethod::closed_form, 0.0};
}

/// log(sinh(x)/x) for x >= 0.
double log_sinhc(double x) {
  x = std::abs(x);
  if (x < 0.5) {
    const double x2 = x * x;
    // sinh(x)/x - 1 = sum_{k>=1} x^{2k} / (2k+1)!
    double term = x2 / 6.0;
    double sum = term;
    for (int k = 2; k < 20; ++k) {
      term *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
    }
    return std::log1p(sum);
  }
  if (x < 20.0) return std::log(std::sinh(x) / x);
  return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x)) - std::log(x);
}

LogExpectation discrete_log_mgf(const DiscreteLaw& law, double t) {
  double max_abs = 0.0;
  for (double v : law.values) max_abs = std::max(max_abs, std::abs(v));
  if (std::abs(t) * max_abs <= 1.0) {
    // E e^{tX} - 1 = t E X + E(e^{tX} - 1 - tX), each piece accurate near t = 0.
    double mean = 0.0;
    double excess = 0.0;
    for (std::size_t i = 0; i < law.size(); ++i) {
      mean += law.weight(i) * law.values[i];
      excess += law.weight(i) * numerics::expm1mx(t * law.values[i]);
    }
    return {std::log1p(t * mean + excess), ExpectationMethod::finite_sum, 0.0};
  }
  return {discrete_log_expectation(law, [t](double v) { return t * v; }),
          ExpectationMethod::finite_sum, 0.0};
}

LogExpectation quadrature_log_mgf(const ContinuousLaw& law, double t) {
  // E cosh(t|X|) - 1 keeps full relative accuracy as t -> 0.
  const numerics::LogIntegral excess =
      integrate_abs(law, [t](double r) { return numerics::log_cosh_m1(t * r); });
  const double li = excess.log_value;
  const double log_value = li < 0.0 ? std::log1p(std::exp(li)) : li + std::log1p(std::exp(-li));
  return {log_value, ExpectationMethod::quadrature, excess.abs_error};
}

LogExpectation log_mgf_impl(const RandomVariable& model, double t, Evaluation how) {
  const Family& family = model.family();
  if (const auto law = discrete_law(family)) {
    if (t == 0.0) return {0.0, ExpectationMethod::finite_sum, 0.0};
    if (const auto* pm = std::get_if<PointMass>(&family)) {
      return {pm->c * t, ExpectationMethod::finite_sum, 0.0};
    }
    if (std::holds_alternative<Rademacher>(family)) {
      return {numerics::log_cosh(t), ExpectationMethod::finite_sum, 0.0};
    }
    return discrete_log_mgf(*law, t);
  }
  if (std::abs(t) >= model.mgf_domain_edge()) {
    return {kInf, std::holds_alternative<WeibullSym>(family) ? ExpectationMethod::quadrature
                                                            : ExpectationMethod::closed_form,
            0.0};
  }
  const ContinuousLaw law = *continuous_law(family);
  const bool force = how == Evaluation::quadrature;
  if (t == 0.0) {
    return {0.0, force || std::holds_alternative<WeibullSym>(family)
                     ? ExpectationMethod::quadrature
                     : ExpectationMethod::closed_form,
            0.0};
  }
  if (!force) {
    if (const auto* u = std::get_if<UniformSym>(&family)) return closed(log_sinhc(u->a * t));
    if (const auto* g = std::get_if<Gaussian>(&family)) {
      return closed(0.5 * g->sigma * g->sigma * t * t);
    }
    if (const auto* l = std::get_if<Laplace>(&family)) {
      const double bt = l->b * t;
      return closed(-std::log1p(-bt * bt));
    }
  }
  return quadrature_log_mgf(law, t);
}

}  // namespace

const char* to_string(ExpectationMethod m) noexcept {
  switch (m) {
    case ExpectationMethod::closed_form:
      return "closed_form";
    case ExpectationMethod::quadrature:
      return "quadrature";
    case ExpectationMethod::finite_sum:
      return "finite_sum";
  }
  return "unknown";
}

RandomVariable::RandomVariable(Family family) : family_(std::move(family)) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidInput(what);
  };
  mean_ = std::visit(
      overloaded{
          [&](const PointMass& m) {
            require(std::isfinite(m.c), "pointmass: location must be finite");
            return m.c;
          },
          [](const Rademacher&) { return 0.0; },
          [&](const UniformSym& m) {
            require(m.a > 0.0 && std::isfinite(m.a), "uniform: half-width must be positive");
            return 0.0;
          },
          [&](const BoundedScaled& m) {
            require(!m.values.empty(), "bounded: support must be nonempty");
            require(m.values.size() == m.weights.size(),
                    "bounded: values and weights differ in length");
            double total = 0.0;
            double mean = 0.0;
            for (std::size_t i = 0; i < m.values.size(); ++i) {
              require(std::isfinite(m.values[i]), "bounded: support points must be finite");
              require(m.weights[i] >= 0.0, "bounded: weights must be nonnegative");
              total += m.weights[i];
              mean += m.weights[i] * m.values[i];
            }
            require(std::abs(total - 1.0) <= 1e-12, "bounded: weights must sum to 1");
            return mean;
          },
          [&](const Gaussian& m) {
            require(m.sigma > 0.0 && std::isfinite(m.sigma), "gaussian: sigma must be positive");
            return 0.0;
          },
          [&](const Laplace& m) {
            require(m.b > 0.0 && std::isfinite(m.b), "laplace: scale must be positive");
            return 0.0;
          },
          [&](const WeibullSym& m) {
            require(m.p_tail >= 1.0 && std::isfinite(m.p_tail),
                    "weibull: tail exponent must be finite and >= 1");
            require(m.scale > 0.0 && std::isfinite(m.scale), "weibull: scale must be positive");
            return 0.0;
          },
          [&](const Empirical& m) {
            require(!m.samples.empty(), "empirical: sample must be nonempty");
            double sum = 0.0;
            for (double x : m.samples) {
              require(std::isfinite(x), "empirical: samples must be finite");
              sum += x;
            }
            return sum / static_cast<double>(m.samples.size());
          },
      },
      family_);
}

std::string RandomVariable::name() const {
  return std::visit(
      overloaded{
          [](const PointMass& m) { return "pointmass:" + format_number(m.c); },
          [](const Rademacher&) { return std::string("rademacher"); },
          [](const UniformSym& m) { return "uniform:" + format_number(m.a); },
          [](const BoundedScaled& m) {
            std::string s = "bounded:";
            for (std::size_t i = 0; i < m.values.size(); ++i) {
              if (i) s += ',';
              s += format_number(m.values[i]) + '@' + format_number(m.weights[i]);
            }
            return s;
          },
          [](const Gaussian& m) { return "gaussian:" + format_number(m.sigma); },
          [](const Laplace& m) { return "laplace:" + format_number(m.b); },
          [](const WeibullSym& m) {
            return "weibull:" + format_number(m.p_tail) + ',' + format_number(m.scale);
          },
          [](const Empirical& m) { return "empirical[" + std::to_string(m.samples.size()) + ']'; },
      },
      family_);
}

bool RandomVariable::is_zero() const {
  const auto law = discrete_law(family_);
  if (!law) return false;
  for (std::size_t i = 0; i < law->size(); ++i) {
    if (law->weight(i) > 0.0 && law->values[i] != 0.0) return false;
  }
  return true;
}

bool RandomVariable::is_discrete() const { return discrete_law(family_).has_value(); }

std::optional<double> RandomVariable::essential_sup() const {
  if (const auto* u = std::get_if<UniformSym>(&family_)) return u->a;
  const auto law = discrete_law(family_);
  if (!law) return std::nullopt;
  double m = 0.0;
  for (std::size_t i = 0; i < law->size(); ++i) {
    if (law->weight(i) > 0.0) m = std::max(m, std::abs(law->values[i]));
  }
  return m;
}

double RandomVariable::mgf_domain_edge() const {
  if (const auto* l = std::get_if<Laplace>(&family_)) return 1.0 / l->b;
  if (const auto* w = std::get_if<WeibullSym>(&family_)) {
    return w->p_tail == 1.0 ? 1.0 / w->scale : kInf;
  }
  return kInf;
}

double RandomVariable::scale() const {
  if (is_zero()) return 1.0;
  return std::sqrt(abs_moment(*this, 2.0).value);
}

double tail(const RandomVariable& model, double t) {
  if (t <= 0.0) return 1.0;
  if (const auto law = discrete_law(model.family())) {
    double p = 0.0;
    for (std::size_t i = 0; i < law->size(); ++i) {
      if (std::abs(law->values[i]) >= t) p += law->weight(i);
    }
    return std::min(p, 1.0);
  }
  return std::visit(
      overloaded{
          [t](const UniformSym& m) { return std::max(0.0, 1.0 - t / m.a); },
          [t](const Gaussian& m) { return 2.0 * numerics::normal_upper_tail(t / m.sigma); },
          [t](const Laplace& m) { return std::exp(-t / m.b); },
          [t](const WeibullSym& m) {
            return std::min(1.0, 2.0 * std::exp(-std::pow(t / m.scale, m.p_tail)));
          },
          [](const auto&) { return 0.0; },
      },
      model.family());
}

ExpectationResult abs_moment(const RandomVariable& model, double alpha, Evaluation how) {
  if (!(alpha >= 1.0)) throw InvalidInput("abs_moment: alpha must be >= 1");
  if (const auto law = discrete_law(model.family())) {
    double s = 0.0;
    for (std::size_t i = 0; i < law->size(); ++i) {
      s += law->weight(i) * std::pow(std::abs(law->values[i]), alpha);
    }
    return {s, ExpectationMethod::finite_sum, 0.0};
  }
  const ContinuousLaw law = *continuous_law(model.family());
  if (how == Evaluation::quadrature) {
    const auto li =
        integrate_abs(law, [alpha](double r) { return r > 0.0 ? alpha * std::log(r) : -kInf; });
    return {safe_exp(li.log_value), ExpectationMethod::quadrature, li.abs_error};
  }
  const double log_value = std::visit(
      overloaded{
          [alpha](const UniformSym& m) { return alpha * std::log(m.a) - std::log(alpha + 1.0); },
          [alpha](const Gaussian& m) {
            return 0.5 * alpha * std::numbers::ln2 + numerics::log_gamma((alpha + 1.0) / 2.0) -
                   0.5 * std::log(std::numbers::pi) + alpha * std::log(m.sigma);
          },
          [alpha](const Laplace& m) {
            return numerics::log_gamma(alpha + 1.0) + alpha * std::log(m.b);
          },
          [alpha](const WeibullSym& m) {
            // 2 s^alpha Gamma(alpha/p + 1, ln 2)
            const double a = alpha / m.p_tail + 1.0;
            return std::numbers::ln2 + alpha * std::log(m.scale) + numerics::log_gamma(a) +
                   std::log(boost::math::gamma_q(a, std::numbers::ln2));
          },
          [](const auto&) { return -kInf; },
      },
      model.family());
  return {safe_exp(log_value), ExpectationMethod::closed_form, 0.0};
}

double log_mgf(const RandomVariable& model, double t, Evaluation how) {
  return log_mgf_impl(model, t, how).log_value;
}

ExpectationResult mgf(const RandomVariable& model, double t, Evaluation how) {
  const LogExpectation le = log_mgf_impl(model, t, how);
  if (t == 0.0) return {1.0, le.method, 0.0};
  return {safe_exp(le.log_value), le.method, le.abs_error};
}

ExpectationResult exp_pow_moment(const RandomVariable& model, Exponent p, double K,
                                 Evaluation how) {
  if (!p.is_finite()) throw UnsupportedKind("exp_pow_moment: p must be finite");
  if (!(K > 0.0)) throw InvalidInput("exp_pow_moment: K must be positive");
  const double pp = p.p();
  if (const auto law = discrete_law(model.family())) {
    const double le =
        discrete_log_expectation(*law, [pp, K](double v) { return std::pow(std::abs(v) / K, pp); });
    return {safe_exp(le), ExpectationMethod::finite_sum, 0.0};
  }

  const ExpectationResult diverges{kInf, ExpectationMethod::closed_form, 0.0};
  const bool force = how == Evaluation::quadrature;
  std::optional<double> closed_value;
  bool divergent = false;
  std::visit(overloaded{
                 [&](const Gaussian& m) {
                   const double k_min = m.sigma * std::numbers::sqrt2;
                   if (pp > 2.0 || (pp == 2.0 && K <= k_min)) {
                     divergent = true;
                   } else if (pp == 2.0) {
                     const double r = m.sigma / K;
                     closed_value = 1.0 / std::sqrt(1.0 - 2.0 * r * r);
                   }
                 },
                 [&](const Laplace& m) {
                   if (pp > 1.0 || K <= m.b) {
                     divergent = true;
                   } else {
                     closed_value = 1.0 / (1.0 - m.b / K);
                   }
                 },
                 [&](const WeibullSym& m) {
                   if (pp > m.p_tail || (pp == m.p_tail && K <= m.scale)) {
                     divergent = true;
                   } else if (pp == m.p_tail) {
                     const double c = std::pow(m.scale / K, pp);
                     closed_value = std::exp2(c) / (1.0 - c);
                   }
                 },
                 [](const auto&) {},
             },
             model.family());
  if (divergent) return diverges;
  if (closed_value && !force) return {*closed_value, ExpectationMethod::closed_form, 0.0};

  const ContinuousLaw law = *continuous_law(model.family());
  const auto li = integrate_abs(law, [pp, K](double r) { return std::pow(r / K, pp); });
  return {safe_exp(li.log_value), ExpectationMethod::quadrature, li.abs_error};
}

RandomVariable center(const RandomVariable& model) {
  const double mean = model.mean();
  // A mean at rounding level of the support is already centered.
  const double support = model.essential_sup().value_or(0.0);
  if (std::abs(mean) <= 4.0 * std::numeric_limits<double>::epsilon() * support) return model;
  return std::visit(
      overloaded{
          [](const PointMass&) { return RandomVariable::point_mass(0.0); },
          [mean](const BoundedScaled& m) {
            std::vector<double> values = m.values;
            for (double& v : values) v -= mean;
            return RandomVariable::bounded(std::move(values), m.weights);
          },
          [mean](const Empirical& m) {
            std::vector<double> samples = m.samples;
            for (double& x : samples) x -= mean;
            return RandomVariable::empirical(std::move(samples));
          },
          [&model](const auto&) { return model; },
      },
      model.family());
}

RandomVariable scaled(const RandomVariable& model, double c) {
  if (!(c > 0.0 && std::isfinite(c))) throw InvalidInput("scaled: factor must be positive");
  auto times = [c](std::vector<double> v) {
    for (double& x : v) x *= c;
    return v;
  };
  return std::visit(
      overloaded{
          [c](const PointMass& m) { return RandomVariable::point_mass(c * m.c); },
          [c](const Rademacher&) { return RandomVariable::bounded({-c, c}, {0.5, 0.5}); },
          [c](const UniformSym& m) { return RandomVariable::uniform(c * m.a); },
          [&](const BoundedScaled& m) { return RandomVariable::bounded(times(m.values), m.weights); },
          [c](const Gaussian& m) { return RandomVariable::gaussian(c * m.sigma); },
          [c](const Laplace& m) { return RandomVariable::laplace(c * m.b); },
          [c](const WeibullSym& m) { return RandomVariable::weibull(m.p_tail, c * m.scale); },
          [&](const Empirical& m) { return RandomVariable::empirical(times(m.samples)); },
      },
      model.family());
}

RandomVariable sum_of_independent(std::span<const RandomVariable> models) {
  if (models.empty()) throw InvalidInput("sum_of_independent: no summands");
  std::map<double, double> acc{{0.0, 1.0}};
  for (const RandomVariable& m : models) {
    const auto law = discrete_law(m.family());
    if (!law) throw InvalidInput("sum_of_independent: summands must be finitely supported");
    std::map<double, double> next;
    for (const auto& [x, wx] : acc) {
      for (std::size_t i = 0; i < law->size(); ++i) {
        if (law->weight(i) > 0.0) next[x + law->values[i]] += wx * law->weight(i);
      }
    }
    acc = std::move(next);
  }
  std::vector<double> values;
  std::vector<double> weights;
  for (const auto& [x, w] : acc) {
    values.push_back(x);
    weights.push_back(w);
  }
  return RandomVariable::bounded(std::move(values), std::move(weights));
}

double parse_number(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> read_samples(std::istream& in) {
  std::vector<double> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    if (view.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      samples.push_back(parse_number(view));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (samples.empty()) throw InvalidInput("sample file contains no values");
  return samples;
}

std::vector<double> load_samples(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open sample file '" + path.string() + "'");
  try {
    return read_samples(in);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

RandomVariable parse_model(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string family(spec.substr(0, colon));
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (family == "empirical") {
    if (rest.empty()) throw InvalidInput("empirical: expected empirical:<path>");
    return RandomVariable::empirical(load_samples(std::filesystem::path(std::string(rest))));
  }

  std::vector<double> params;
  std::vector<double> weights;
  if (!rest.empty()) {
    for (std::string_view item : split(rest, ',')) {
      if (family == "bounded") {
        const auto at = item.find('@');
        if (at == std::string_view::npos) {
          throw InvalidInput("bounded: expected value@weight, got '" + std::string(item) + "'");
        }
        params.push_back(parse_number(item.substr(0, at)));
        weights.push_back(parse_number(item.substr(at + 1)));
      } else {
        params.push_back(parse_number(item));
      }
    }
  }
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw InvalidInput(family + ": expected " + std::to_string(n) + " parameter(s), got " +
                         std::to_string(params.size()));
    }
  };
  if (family == "rademacher") {
    expect(0);
    return RandomVariable::rademacher();
  }
  if (family == "weibull") {
    expect(2);
    return RandomVariable::weibull(params[0], params[1]);
  }
  if (family == "pointmass" || family == "uniform" || family == "gaussian" ||
      family == "laplace") {
    expect(1);
    if (family == "pointmass") return RandomVariable::point_mass(params[0]);
    if (family == "uniform") return RandomVariable::uniform(params[0]);
    if (family == "gaussian") return RandomVariable::gaussian(params[0]);
    return RandomVariable::laplace(params[0]);
  }
  if (family == "bounded") {
    if (params.empty()) throw InvalidInput("bounded: expected at least one value@weight");
    return RandomVariable::bounded(std::move(params), std::move(weights));
  }
  throw InvalidInput("unknown model family '" + family + "'");
}

}  // namespace orlicz
