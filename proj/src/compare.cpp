#include "besselsum/compare.hpp"

#include <algorithm>
#include <cmath>

#include "besselsum/asymptotics.hpp"
#include "besselsum/errors.hpp"

namespace besselsum {

namespace {

double term_magnitude(const Expansion& e, double beta) {
  double m = 0.0;
  for (const auto& t : e.terms) {
    m += std::abs(t.const_coeff + t.log_coeff * std::log(beta)) * std::pow(beta, t.power);
  }
  return m;
}

}  // namespace

void validate(const SeriesSpec& spec) {
  const std::string& f = spec.family;
  if (f != "h" && f != "h0" && f != "g" && f != "f" && f != "f0") {
    throw ConfigError("unknown series family '" + f + "'");
  }
  if ((f == "f" || f == "f0") && !spec.model) throw ConfigError("series " + f + " needs a model");
  if (f == "g" && spec.d < 1) throw ConfigError("series g needs d >= 1");
}

EvalResult eval_series(const SeriesSpec& spec, double beta, double tol) {
  validate(spec);
  const std::string& f = spec.family;
  if (f == "h") return sum_h(spec.s, beta, spec.B, tol);
  if (f == "h0") return sum_h0(spec.s, beta, tol);
  if (f == "g") return sum_g(spec.d, spec.s, beta, tol);
  if (f == "f") return sum_f(*spec.model, spec.s, beta, spec.B, tol);
  return sum_f(*spec.model, spec.s, beta, 0.0, tol);
}

Expansion expand_series(const SeriesSpec& spec, double order) {
  validate(spec);
  const std::string& f = spec.family;
  if (f == "h") return expand_h_any(spec.s, spec.B, order);
  if (f == "h0") return expand_h0(spec.s, order);
  if (f == "g") return expand_g(spec.d, spec.s, order);
  if (f == "f") return expand_f_any(*spec.model, spec.s, spec.B, order);
  return expand_f0(*spec.model, spec.s, order);
}

RatioCheck ratio_check(const Expansion& e, const std::function<double(double)>& direct,
                       double beta_small, double beta_large) {
  RatioCheck r;
  r.beta_small = beta_small;
  r.beta_large = beta_large;
  const double d_small = direct(beta_small);
  const double d_large = direct(beta_large);
  r.err_small = std::abs(evaluate(e, beta_small) - d_small);
  r.err_large = std::abs(evaluate(e, beta_large) - d_large);
  r.noise = 1e-11 * std::max({1.0, std::abs(d_small), std::abs(d_large), term_magnitude(e, beta_small),
                              term_magnitude(e, beta_large)});
  r.ratio = r.err_small / r.err_large;
  if (std::isinf(e.remainder_power)) {
    r.expected = 0.0;
    r.passed = r.err_small <= r.noise && r.err_large <= r.noise;
    return r;
  }
  r.expected = std::pow(beta_small / beta_large, e.remainder_power);
  if (r.err_large <= 10.0 * r.noise) {
    r.passed = r.err_small <= 10.0 * r.noise;
  } else {
    r.passed = r.ratio >= 0.25 * r.expected && r.ratio <= 4.0 * r.expected;
  }
  return r;
}

}  // namespace besselsum
