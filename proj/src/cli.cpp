#include "besselsum/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "besselsum/applications.hpp"
#include "besselsum/compare.hpp"
#include "besselsum/errors.hpp"
#include "besselsum/json_io.hpp"
#include "besselsum/mellin_oracle.hpp"

namespace besselsum {

namespace {

struct Options {
  std::string series;
  double s = 0.0;
  double beta = 0.0;
  double B = 0.0;
  int d = 1;
  std::string model;
  double tol = 0.0;
  double order = 4.0;
  std::string format = "text";
  // oracle
  double c = 0.0;
  double y_max = 0.0;
  double oracle_tol = 1e-7;
  // casimir / mass
  int D = 1;
  double L = 1.0;
  double m = 0.0;
  std::string file;
};

void add_series_options(CLI::App* app, Options& o, bool need_beta) {
  app->add_option("--series", o.series, "h, h0, g, f or f0")->required();
  app->add_option("--s", o.s, "order parameter s")->required();
  auto* beta = app->add_option("--beta", o.beta, "beta > 0");
  if (need_beta) beta->required();
  app->add_option("--B,--x", o.B, "B for h and f");
  app->add_option("--d", o.d, "lattice dimension for g");
  app->add_option("--model", o.model, "circle, torus:<d>, hurwitz:<a> or table:<path>");
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

SeriesSpec make_spec(const Options& o) {
  SeriesSpec spec;
  spec.family = o.series;
  spec.s = o.s;
  spec.B = o.B;
  spec.d = o.d;
  if (!o.model.empty()) spec.model = parse_model(o.model);
  validate(spec);
  return spec;
}

Json series_request(const std::string& command, const Options& o) {
  Json r;
  r["command"] = command;
  r["series"] = o.series;
  r["s"] = o.s;
  if (o.beta > 0.0) r["beta"] = o.beta;
  if (o.series == "h" || o.series == "f") r["B"] = o.B;
  if (o.series == "g") r["d"] = o.d;
  if (!o.model.empty()) r["model"] = o.model;
  return r;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

void emit(std::ostream& out, const Options& o, const Json& doc, const std::string& csv) {
  if (o.format == "json") {
    out << dump(doc) << '\n';
  } else if (o.format == "csv") {
    out << csv;
  } else {
    const Json& res = doc["result"];
    for (const auto& [key, value] : res.items()) {
      if (key == "terms") continue;
      out << key << ": " << (value.is_string() ? value.get<std::string>() : dump(value, 0)) << '\n';
    }
    if (res.contains("terms")) {
      out << "terms:\n";
      for (const auto& t : res["terms"]) {
        out << "  (" << dump(t["const_coeff"], 0) << " + " << dump(t["log_coeff"], 0) << " ln beta) beta^"
            << dump(t["power"], 0) << '\n';
      }
    }
  }
}

std::string scalar_csv(const Json& result) {
  std::string head, row;
  for (const auto& [key, value] : result.items()) {
    if (value.is_array() || value.is_object()) continue;
    if (!head.empty()) {
      head += ',';
      row += ',';
    }
    head += key;
    row += value.is_string() ? value.get<std::string>() : dump(value, 0);
  }
  return head + '\n' + row + '\n';
}

int cmd_eval(const Options& o, std::ostream& out) {
  const SeriesSpec spec = make_spec(o);
  require_positive(o.beta, "beta");
  const EvalResult r = eval_series(spec, o.beta, o.tol);
  Json doc;
  doc["request"] = series_request("eval", o);
  doc["result"] = to_json(r);
  emit(out, o, doc, scalar_csv(doc["result"]));
  return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const SeriesSpec spec = make_spec(o);
  const Expansion e = expand_series(spec, o.order);
  Json doc;
  doc["request"] = series_request("expand", o);
  doc["request"]["order"] = o.order;
  Json res;
  if (o.beta > 0.0) res["value"] = evaluate(e, o.beta);
  const Json ej = to_json(e);
  for (const auto& [k, v] : ej.items()) res[k] = v;
  doc["result"] = res;
  emit(out, o, doc, terms_csv(e));
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const SeriesSpec spec = make_spec(o);
  require_positive(o.beta, "beta");
  const Expansion e = expand_series(spec, o.order);
  const double tol = o.tol;
  const RatioCheck rc =
      ratio_check(e, [&](double b) { return eval_series(spec, b, tol).value; }, o.beta, 2.0 * o.beta);
  const double direct = eval_series(spec, o.beta, tol).value;
  Json doc;
  doc["request"] = series_request("compare", o);
  doc["request"]["order"] = o.order;
  Json res;
  res["direct"] = direct;
  res["expansion"] = evaluate(e, o.beta);
  res["abs_diff"] = rc.err_small;
  res["abs_diff_2beta"] = rc.err_large;
  res["ratio"] = rc.ratio;
  res["expected_ratio"] = rc.expected;
  res["remainder_power"] = e.remainder_power;
  res["case_tag"] = e.case_tag;
  res["ratio_test"] = rc.passed ? "pass" : "fail";
  doc["result"] = res;
  emit(out, o, doc, scalar_csv(res));
  return rc.passed ? kExitOk : kExitTolerance;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.series != "h0" && o.series != "h") throw ConfigError("oracle supports series h0 and h");
  require_positive(o.beta, "beta");
  ContourConfig cfg;
  cfg.c = o.c;
  cfg.y_max = o.y_max;
  double contour = 0.0;
  double direct = 0.0;
  if (o.series == "h0") {
    contour = contour_h0(o.s, o.beta, cfg);
    direct = sum_h0(o.s, o.beta, o.tol).value;
  } else {
    contour = contour_h(o.s, o.beta, o.B, cfg);
    direct = sum_h(o.s, o.beta, o.B, o.tol).value;
  }
  const double diff = std::abs(contour - direct);
  Json doc;
  doc["request"] = series_request("oracle", o);
  Json res;
  res["contour"] = contour;
  res["direct"] = direct;
  res["abs_diff"] = diff;
  res["tolerance"] = o.oracle_tol;
  res["agree"] = diff <= o.oracle_tol;
  doc["result"] = res;
  emit(out, o, doc, scalar_csv(res));
  return diff <= o.oracle_tol ? kExitOk : kExitTolerance;
}

int cmd_casimir(const Options& o, std::ostream& out) {
  if (o.model.empty()) throw ConfigError("casimir needs --model");
  const PistonConfig cfg{o.D, parse_model(o.model), o.beta, o.L};
  const CasimirEnergy ce = casimir_energy(cfg, o.order);
  Json doc;
  doc["request"] = {{"command", "casimir"}, {"D", o.D}, {"model", o.model}, {"beta", o.beta}, {"L", o.L},
                    {"order", o.order}};
  Json res;
  res["pole_coeff"] = ce.pole_coeff;
  res["finite_part"] = ce.finite_part;
  res["force"] = casimir_force(cfg, o.order);
  doc["result"] = res;
  emit(out, o, doc, scalar_csv(res));
  return kExitOk;
}

int cmd_mass(const Options& o, std::ostream& out) {
  require_positive(o.m, "m");
  const EvalResult r = mass_sum(o.m, o.L, o.D, o.tol);
  const Expansion e = mass_expansion(o.L, o.D, o.order);
  Json doc;
  doc["request"] = {{"command", "mass"}, {"m", o.m}, {"L", o.L}, {"D", o.D}, {"order", o.order}};
  Json res;
  res["value"] = r.value;
  res["error_estimate"] = r.error_estimate;
  res["expansion"] = evaluate(e, o.m);
  const Json ej = to_json(e);
  for (const auto& [k, v] : ej.items()) res[k] = v;
  doc["result"] = res;
  emit(out, o, doc, o.format == "csv" ? scalar_csv(res) + terms_csv(e) : std::string());
  return kExitOk;
}

int cmd_models(const Options& o, std::ostream& out) {
  Json doc;
  doc["request"] = {{"command", "models"}};
  Json res;
  if (o.model.empty()) {
    res["builtin"] = Json::array({"circle", "torus:<d>", "hurwitz:<a>", "table:<path>"});
  } else {
    const ModelPtr m = parse_model(o.model);
    doc["request"]["model"] = o.model;
    res["name"] = m->name();
    res["dim"] = m->dim();
    Json coeffs = Json::array();
    for (int k = 0; k <= 4; ++k) {
      try {
        coeffs.push_back(m->heat_coeff(0.5 * k));
      } catch (const DomainError&) {
        break;
      }
    }
    res["heat_coeffs"] = coeffs;
    Json poles = Json::array();
    for (const auto& p : m->zeta_poles()) {
      poles.push_back({{"location", p.location}, {"residue", p.residue}, {"finite_part", p.finite_part}});
    }
    res["zeta_poles"] = poles;
    res["valid"] = true;
  }
  doc["result"] = res;
  emit(out, o, doc, scalar_csv(res));
  return kExitOk;
}

}  // namespace

double default_tolerance() {
  const char* env = std::getenv("BESSELSUM_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError("BESSELSUM_TOL must be a positive number");
  }
  return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bessel series: direct sums, small-beta expansions and applications", "besselsum"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "direct summation");
  add_series_options(eval, o, true);
  eval->add_option("--tol", o.tol, "summation tolerance");
  add_format(eval, o);

  auto* expand = app.add_subcommand("expand", "small-beta expansion");
  add_series_options(expand, o, false);
  expand->add_option("--order", o.order, "largest beta power kept");
  add_format(expand, o);

  auto* compare = app.add_subcommand("compare", "expansion against direct sum with order-scaling check");
  add_series_options(compare, o, true);
  compare->add_option("--order", o.order, "largest beta power kept");
  compare->add_option("--tol", o.tol, "summation tolerance");
  add_format(compare, o);

  auto* oracle = app.add_subcommand("oracle", "Mellin contour integral against direct sum");
  add_series_options(oracle, o, true);
  oracle->add_option("--c", o.c, "contour abscissa (0: automatic)");
  oracle->add_option("--y-max", o.y_max, "contour height (0: automatic)");
  oracle->add_option("--agree-tol", o.oracle_tol, "agreement tolerance");
  oracle->add_option("--tol", o.tol, "summation tolerance");
  add_format(oracle, o);

  auto* casimir = app.add_subcommand("casimir", "piston Casimir energy and force");
  casimir->add_option("--D", o.D, "dimension of the Euclidean factor")->required();
  casimir->add_option("--model", o.model, "manifold N")->required();
  casimir->add_option("--beta", o.beta, "first chamber length")->required();
  casimir->add_option("--L", o.L, "piston length")->required();
  casimir->add_option("--order", o.order, "largest beta power kept");
  add_format(casimir, o);

  auto* mass = app.add_subcommand("mass", "compactified mass series S(m)");
  mass->add_option("--m", o.m, "mass")->required();
  mass->add_option("--L", o.L, "compactification length");
  mass->add_option("--D", o.D, "Euclidean dimension")->required();
  mass->add_option("--order", o.order, "largest m power kept");
  mass->add_option("--tol", o.tol, "summation tolerance");
  add_format(mass, o);

  auto* models = app.add_subcommand("models", "list built-in models or validate one");
  models->add_option("--model", o.model, "model spec to validate");
  add_format(models, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream buf_out, buf_err;
    const int code = app.exit(e, buf_out, buf_err);
    out << buf_out.str();
    err << buf_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.tol <= 0.0) o.tol = default_tolerance();
    if (eval->parsed()) return cmd_eval(o, out);
    if (expand->parsed()) return cmd_expand(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (casimir->parsed()) return cmd_casimir(o, out);
    if (mass->parsed()) return cmd_mass(o, out);
    return cmd_models(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace besselsum
