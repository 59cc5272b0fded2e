#include "orlicz/cli.hpp"

#include "orlicz/battery.hpp"
#include "orlicz/bounds.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/format.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/numerics.hpp"
#include "orlicz/rv_models.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>

namespace orlicz::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kModelHelp = R"(Model specs:
  pointmass:c           X = c
  rademacher            +-1 with probability 1/2
  uniform:a             uniform on [-a, a]
  bounded:v@w,v@w,...   finite law, weights sum to 1
  gaussian:s            N(0, s^2)
  laplace:b             density exp(-|x|/b) / 2b
  weibull:p,s           symmetric, P(|X| >= t) = min(1, 2 exp(-(t/s)^p))
  empirical:path        one sample per line, '#' starts a comment

Exit codes: 0 ok, 1 bad arguments or model, 2 not in L_psi_p,
3 model must be centered, 4 a check or verification failed.)";

struct Options {
  std::string model;
  std::string p = "2";
  std::string format = "csv";
  std::string kind = "luxemburg";
  double rel_tol = numerics::kDefaultRelTol;
  int t_points = 512;
  std::optional<double> a;
  std::vector<double> sum;
  std::string t;
  std::string curve = "complementary";
  std::optional<double> K;
  double tol = kVerifyTol;
  std::vector<std::string> battery_p{"1", "1.5", "2", "3"};
  std::uint64_t seed = BatteryOptions{}.seed;
  double tau_const_scale = 1.0;
};

// 9 significant digits as a JSON value; non-finite values become strings.
Json json_number(double x) {
  const std::string s = format_number(x);
  if (!std::isfinite(x)) return s;
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

Exponent parse_exponent(const std::string& text) {
  return Exponent::of(parse_number(text));
}

// "lo:hi:step", "v1,v2,..." or a single value.
std::vector<double> parse_t_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::string_view rest = text;
    for (;;) {
      const auto pos = rest.find(':');
      parts.push_back(parse_number(rest.substr(0, pos)));
      if (pos == std::string_view::npos) break;
      rest.remove_prefix(pos + 1);
    }
    if (parts.size() != 3) throw InvalidInput("--t: expected lo:hi:step, got '" + text + "'");
    if (!(parts[2] > 0.0) || !(parts[1] >= parts[0]))
      throw InvalidInput("--t: need step > 0 and hi >= lo in '" + text + "'");
    grid = linear_grid(parts[0], parts[1], parts[2]);
  } else {
    std::string_view rest = text;
    for (;;) {
      const auto pos = rest.find(',');
      grid.push_back(parse_number(rest.substr(0, pos)));
      if (pos == std::string_view::npos) break;
      rest.remove_prefix(pos + 1);
    }
  }
  for (double t : grid)
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidInput("--t: values must be finite and >= 0");
  if (!std::is_sorted(grid.begin(), grid.end()) ||
      std::adjacent_find(grid.begin(), grid.end()) != grid.end())
    throw InvalidInput("--t: values must be strictly increasing");
  return grid;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

int cmd_norm(const Options& o, bool tau_command, std::ostream& out, std::ostream& err) {
  const RandomVariable model = parse_model(o.model);
  const Exponent p = parse_exponent(o.p);
  const std::string kind = tau_command ? "tau" : o.kind;
  NormEstimate est = [&] {
    if (kind == "luxemburg") return luxemburg_norm(model, p, o.rel_tol);
    if (kind == "tail") return tail_norm(model, p);
    if (kind == "moment") return moment_norm(model, p);
    return tau_norm(model, p, o.rel_tol, o.t_points);
  }();

  if (o.format == "json") {
    Json j;
    j["model"] = model.name();
    j["kind"] = to_string(est.kind);
    j["p"] = json_number(est.p.p());
    j["value"] = json_number(est.value);
    j["rel_tol"] = json_number(est.rel_tol);
    j["check_value"] = json_number(est.check_value);
    j["witness"] = json_number(est.witness);
    j["certificate"] = est.certificate;
    out << j.dump(2) << '\n';
  } else {
    write_csv_row(out, {"model", "kind", "p", "value", "rel_tol", "check_value", "witness",
                        "certificate"});
    write_csv_row(out, {model.name(), to_string(est.kind), format_number(est.p.p()),
                        format_number(est.value), format_number(est.rel_tol),
                        format_number(est.check_value), format_number(est.witness),
                        est.certificate});
  }
  if (!est.finite()) {
    err << "error: not in L_psi_p\n";
    return kExitNotInSpace;
  }
  return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  std::optional<RandomVariable> model;
  if (!o.model.empty()) model = parse_model(o.model);

  double a_l2 = 0.0;
  double a_l1 = 0.0;
  if (!o.sum.empty()) {
    if (o.a) throw InvalidInput("use either --a or --sum, not both");
    const HoeffdingSumParams sp = hoeffding_sum_params(o.sum);
    a_l2 = sp.a_l2;
    a_l1 = sp.a_l1;
    if (model) {
      // summand k is a_k X; |X| <= 1 keeps the bounds applicable
      if (!model->is_discrete())
        throw InvalidInput("--sum with --model needs a discrete model");
      std::vector<RandomVariable> parts;
      for (double ak : o.sum) parts.push_back(scaled(*model, ak));
      model = sum_of_independent(parts);
    }
  } else {
    double a = 0.0;
    if (o.a) {
      a = *o.a;
    } else if (model && model->essential_sup()) {
      a = *model->essential_sup();
    } else {
      throw InvalidInput("bounds needs --a, --sum, or a bounded --model");
    }
    if (!(a > 0.0) || !std::isfinite(a)) throw InvalidInput("--a must be finite and > 0");
    a_l2 = a;
    a_l1 = a;
  }

  const std::vector<double> ts =
      o.t.empty() ? linear_grid(0.0, 3.0 * a_l1, a_l1 / 2.0) : parse_t_grid(o.t);
  const BoundCurve classic = hoeffding_classic(a_l2);
  const BoundCurve complementary = hoeffding_complementary(a_l1);

  std::vector<std::string> columns{"t"};
  if (model) columns.push_back("exact_tail");
  columns.push_back("classic");
  columns.push_back("complementary");

  auto row_values = [&](double t) {
    std::vector<double> v{t};
    if (model) v.push_back(tail(*model, t));
    v.push_back(classic(t));
    v.push_back(complementary(t));
    return v;
  };

  if (o.format == "json") {
    Json j;
    if (model) j["model"] = model->name();
    j["a_l2"] = json_number(a_l2);
    j["a_l1"] = json_number(a_l1);
    j["columns"] = columns;
    Json rows = Json::array();
    for (double t : ts) {
      Json r;
      const auto v = row_values(t);
      for (std::size_t i = 0; i < v.size(); ++i) r[columns[i]] = json_number(v[i]);
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "# a_l2=" << format_number(a_l2) << ", a_l1=" << format_number(a_l1);
  if (model) out << ", model=" << model->name();
  out << '\n';
  write_csv_row(out, columns);
  for (double t : ts) {
    std::vector<std::string> fields;
    for (double v : row_values(t)) fields.push_back(format_number(v));
    write_csv_row(out, fields);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const RandomVariable model = parse_model(o.model);
  const bool hoeffding = o.curve == "classic" || o.curve == "complementary";

  BoundCurve curve;
  double t_hi = 0.0;
  if (hoeffding) {
    const double a = o.a ? *o.a : model.essential_sup().value_or(kInf);
    if (!std::isfinite(a)) throw InvalidInput("Hoeffding curves need --a or a bounded model");
    if (!(a > 0.0)) throw InvalidInput("--a must be > 0");
    if (std::abs(model.mean()) > 1e-10 * model.scale())
      throw CenteringRequired("Hoeffding curves apply to centered models");
    curve = o.curve == "classic" ? hoeffding_classic(a) : hoeffding_complementary(a);
    t_hi = 3.0 * a;
  } else {
    const Exponent p = parse_exponent(o.p);
    double K = 0.0;
    if (o.K) {
      K = *o.K;
    } else {
      K = (o.curve == "tau" ? tau_norm(model, p, o.rel_tol, o.t_points) : tail_norm(model, p)).value;
      if (!std::isfinite(K)) {
        err << "error: not in L_psi_p\n";
        return kExitNotInSpace;
      }
    }
    if (!(K > 0.0)) throw InvalidInput("verify needs K > 0");
    curve = o.curve == "tau" ? tail_from_tau(p, K) : lemma1_tail_curve(p, K);
    t_hi = model.essential_sup() ? 1.5 * *model.essential_sup() : 6.0 * K;
  }

  const std::vector<double> ts =
      o.t.empty() ? linear_grid(0.0, t_hi, t_hi / 60.0) : parse_t_grid(o.t);
  const VerificationReport rep = verify_bound(model, curve, ts, o.tol);

  std::vector<bool> bad(ts.size(), false);
  for (const Violation& v : rep.violations)
    bad[static_cast<std::size_t>(std::find(ts.begin(), ts.end(), v.t) - ts.begin())] = true;

  if (o.format == "json") {
    Json j;
    j["model"] = model.name();
    j["curve"] = curve.name;
    Json params = Json::object();
    for (const auto& [k, v] : curve.params) params[k] = json_number(v);
    j["params"] = std::move(params);
    j["tol"] = json_number(o.tol);
    j["max_gap"] = json_number(rep.max_gap);
    j["violations"] = rep.violations.size();
    Json rows = Json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      Json r;
      r["t"] = json_number(ts[i]);
      r["exact_tail"] = json_number(rep.truth[i]);
      r["bound"] = json_number(rep.bound[i]);
      r["ok"] = !bad[i];
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << "# curve=" << curve.name;
    for (const auto& [k, v] : curve.params) out << ", " << k << '=' << format_number(v);
    out << ", model=" << model.name() << ", max_gap=" << format_number(rep.max_gap)
        << ", violations=" << rep.violations.size() << '\n';
    write_csv_row(out, {"t", "exact_tail", "bound", "ok"});
    for (std::size_t i = 0; i < ts.size(); ++i)
      write_csv_row(out, {format_number(ts[i]), format_number(rep.truth[i]),
                          format_number(rep.bound[i]), bad[i] ? "no" : "yes"});
  }
  if (!rep.ok()) {
    err << "error: " << rep.violations.size() << " violation(s) of " << curve.name << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_battery(const Options& o, std::ostream& out, std::ostream& err) {
  BatteryOptions bo;
  bo.p_values.clear();
  for (const std::string& s : o.battery_p) {
    const Exponent p = parse_exponent(s);
    if (!p.is_finite()) throw InvalidInput("battery takes finite p values");
    bo.p_values.push_back(p.p());
  }
  bo.seed = o.seed;
  bo.tau_const_scale = o.tau_const_scale;
  const BatteryReport rep = run_battery(bo);
  const auto failed = static_cast<std::size_t>(
      std::count_if(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return !c.passed; }));

  if (o.format == "json") {
    Json j;
    j["seed"] = o.seed;
    Json ps = Json::array();
    for (double p : bo.p_values) ps.push_back(json_number(p));
    j["p_values"] = std::move(ps);
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
      Json r;
      r["name"] = c.name;
      r["status"] = c.passed ? "pass" : "fail";
      r["worst_margin"] = json_number(c.worst_margin);
      r["detail"] = c.detail;
      checks.push_back(std::move(r));
    }
    j["checks"] = std::move(checks);
    j["passed"] = rep.checks.size() - failed;
    j["failed"] = failed;
    out << j.dump(2) << '\n';
  } else {
    write_csv_row(out, {"check", "status", "worst_margin", "detail"});
    for (const CheckResult& c : rep.checks)
      write_csv_row(out, {c.name, c.passed ? "pass" : "fail", format_number(c.worst_margin, 3),
                          c.detail});
  }
  err << rep.checks.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential Orlicz norms, tau norms and Hoeffding-type tail bounds", "orlicz"};
  app.footer(kModelHelp);
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"csv", "json"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Exponent p >= 1, or inf")->capture_default_str();
  };

  CLI::App* norm = app.add_subcommand("norm", "Compute a norm of a model");
  norm->add_option("--model", o.model, "Model spec")->required();
  add_p(norm);
  norm->add_option("--kind", o.kind, "Which norm")
      ->check(CLI::IsMember({"luxemburg", "tail", "moment", "tau"}))
      ->capture_default_str();
  norm->add_option("--rel-tol", o.rel_tol, "Bisection relative tolerance")->capture_default_str();
  add_format(norm);

  CLI::App* tau = app.add_subcommand("tau", "Compute tau_{phi_p} of a centered model");
  tau->add_option("--model", o.model, "Model spec")->required();
  add_p(tau);
  tau->add_option("--rel-tol", o.rel_tol, "Bisection relative tolerance")->capture_default_str();
  tau->add_option("--t-points", o.t_points, "Grid points per sign of t")
      ->check(CLI::Range(16, 1 << 20))
      ->capture_default_str();
  add_format(tau);

  CLI::App* bounds = app.add_subcommand("bounds", "Tabulate classic and complementary Hoeffding bounds");
  bounds->add_option("--a", o.a, "Almost-sure bound |X| <= a");
  bounds->add_option("--sum", o.sum, "Bounds a_1,...,a_n of independent summands")->delimiter(',');
  bounds->add_option("--model", o.model, "Add the exact tail of this model (of the sum with --sum)");
  bounds->add_option("--t", o.t, "lo:hi:step, a list v1,v2,..., or one value (default 0:3a:a/2)");
  add_format(bounds);

  CLI::App* verify = app.add_subcommand("verify", "Check a tail bound against the exact tail");
  verify->add_option("--model", o.model, "Model spec")->required();
  verify->add_option("--curve", o.curve, "Bound to check")
      ->check(CLI::IsMember({"classic", "complementary", "tau", "power"}))
      ->capture_default_str();
  verify->add_option("--a", o.a, "Hoeffding a (default: essential sup)");
  add_p(verify);
  verify->add_option("--K", o.K, "Norm value for tau/power curves (default: computed)");
  verify->add_option("--t", o.t, "lo:hi:step, a list, or one value");
  verify->add_option("--tol", o.tol, "Allowed excess of truth over bound")->capture_default_str();
  verify->add_option("--rel-tol", o.rel_tol, "Bisection relative tolerance");
  add_format(verify);

  CLI::App* battery = app.add_subcommand("battery", "Run the invariant battery");
  battery->add_option("--p", o.battery_p, "Exponents to cover")->delimiter(',');
  battery->add_option("--seed", o.seed, "Seed for randomized scale factors")->capture_default_str();
  battery->add_option("--inject-tau-const-scale", o.tau_const_scale)
      ->group("")
      ->check(CLI::PositiveNumber);
  add_format(battery);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (norm->parsed()) return cmd_norm(o, false, out, err);
    if (tau->parsed()) return cmd_norm(o, true, out, err);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_battery(o, out, err);
  } catch (const CenteringRequired& e) {
    err << "error: " << e.what() << '\n';
    return kExitCentering;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace orlicz::cli
