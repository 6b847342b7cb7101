#include "besselsum/applications.hpp"

#include <cmath>

#include "besselsum/asymptotics.hpp"
#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum {

namespace {

using specfun::kPi;

double half_pi_power(int d) { return std::pow(kPi, 0.5 * (d + 1)); }

// Gamma((D - l + 1)/2) (2^{l-D} - 1) zeta_R(D - l + 1) at s = -1/2, with the
// 0 * inf products replaced by their limits: l = D gives sqrt(pi) (-ln 2),
// l = D + 1 + 2k (k >= 1) gives 2 (-1)^k zeta'(-2k) / k! (2^{2k+1} - 1).
double energy_factor(int l, int D) {
  const int j = l - D;
  const double two_pow = std::pow(2.0, j) - 1.0;
  if (j == 0) return std::sqrt(kPi) * (-specfun::kLn2);
  if (j >= 3 && (j - 1) % 2 == 0) {
    const int k = (j - 1) / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sign * specfun::riemann_zeta_deriv(-2.0 * k) / std::tgamma(k + 1.0) * two_pow;
  }
  return specfun::gamma(0.5 * (D - l + 1)) * two_pow * specfun::riemann_zeta(D - l + 1.0);
}

void require_piston(const PistonConfig& cfg) {
  if (!cfg.N) throw ConfigError("piston: missing N model");
  if (cfg.D < 1) throw ConfigError("piston: D must be positive");
  if (!(cfg.beta > 0.0) || !(cfg.beta < cfg.L)) throw ConfigError("piston: need 0 < beta < L");
}

}  // namespace

int ProductGeometry::total_dim() const { return d + 1 + (N ? N->dim() : 0); }

EvalResult product_zeta(const ProductGeometry& geom, double s, double tol) {
  if (!geom.N) throw ConfigError("product_zeta: missing N model");
  if (geom.d < 0) throw ConfigError("product_zeta: d must be nonnegative");
  if (!(geom.beta > 0.0)) throw DomainError("product_zeta: beta must be positive");
  const double sp = s - 0.5 * (geom.d + 1);
  const double pref = geom.beta / (std::pow(2.0, geom.d) * half_pi_power(geom.d));
  const double rg = specfun::rgamma(s);
  const double first = pref * specfun::gamma(sp) * rg * geom.N->zeta(sp);
  const EvalResult bessel = sum_f(*geom.N, sp, geom.beta, geom.B, 1e-2 * tol);
  EvalResult r;
  r.value = first + 4.0 * pref * rg * bessel.value;
  r.error_estimate = 4.0 * pref * std::abs(rg) * bessel.error_estimate;
  r.terms_used = bessel.terms_used;
  r.method = "direct:product_zeta";
  return r;
}

std::pair<double, double> poisson_check(double t, double beta, double B) {
  if (!(t > 0.0) || !(beta > 0.0)) throw DomainError("poisson_check: t and beta must be positive");
  const double c = t * kPi * kPi / (beta * beta);
  const double b = B - std::floor(B);
  double lhs = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double a = std::exp(-c * (k + b) * (k + b));
    const double bm = std::exp(-c * (k + 1 - b) * (k + 1 - b));
    lhs += a + bm;
    if (a + bm < 1e-18 * lhs) break;
  }
  double dual = 0.0;
  for (int m = 1; m < 100000; ++m) {
    const double e = std::exp(-beta * beta * m * m / t);
    dual += specfun::cos_pi(2.0 * m * B) * e;
    if (e < 1e-18) break;
  }
  const double rhs = beta / std::sqrt(kPi * t) * (1.0 + 2.0 * dual);
  return {lhs, rhs};
}

Expansion product_zeta_expansion(const ProductGeometry& geom, double s, double order) {
  if (!geom.N) throw ConfigError("product_zeta_expansion: missing N model");
  const double sp = s - 0.5 * (geom.d + 1);
  const double pref = 1.0 / (std::pow(2.0, geom.d) * half_pi_power(geom.d));
  const double rg = specfun::rgamma(s);
  const Expansion fe = expand_f_any(*geom.N, sp, geom.B, order - 1.0);

  std::vector<ExpansionTerm> terms;
  for (const auto& t : fe.terms) {
    terms.push_back({t.power + 1.0, 4.0 * pref * rg * t.const_coeff, 4.0 * pref * rg * t.log_coeff});
  }
  // The zeta_N term cancels the -Gamma(s')zeta_N(s')/4 term of f.
  terms.push_back({1.0, pref * specfun::gamma(sp) * rg * geom.N->zeta(sp), 0.0});

  Expansion e;
  e.family = "product";
  e.s = s;
  e.x = reduce_B(geom.B);
  e.d = geom.d;
  e.model = geom.N->name();
  e.case_tag = fe.case_tag;
  e.terms = merge_terms(terms, 1e-10, 64.0 * 2.220446049250313e-16);
  e.max_power = order;
  e.remainder_power = fe.remainder_power + 1.0;
  return e;
}

EvalResult piston_zeta(const PistonConfig& cfg, double s, double tol) {
  require_piston(cfg);
  const ProductGeometry geom{cfg.D - 1, cfg.N, cfg.beta, 0.5};
  EvalResult r = product_zeta(geom, s, tol);
  const double scale = -std::pow(2.0, cfg.D - 3);
  r.value *= scale;
  r.error_estimate *= std::abs(scale);
  r.method = "direct:piston_zeta";
  return r;
}

CasimirEnergy casimir_energy(const PistonConfig& cfg, double order) {
  require_piston(cfg);
  const int D = cfg.D;
  const int Q = cfg.N->dim();
  CasimirEnergy e;
  e.pole_coeff = cfg.beta * cfg.N->heat_coeff(0.5 * (Q + D + 1)) / (16.0 * half_pi_power(D));
  const double pref = 1.0 / (8.0 * half_pi_power(D));
  for (int l = -Q; l - D <= order + 1e-9; ++l) {
    if (l == D + 1) continue;
    const double a = cfg.N->heat_coeff(0.5 * (Q + l));
    if (a == 0.0) continue;
    e.finite_part += pref * energy_factor(l, D) * std::pow(cfg.beta, l - D) * a;
  }
  return e;
}

double casimir_energy_direct(const PistonConfig& cfg, double tol) {
  // Finite part at s = -1/2 from the symmetric average, Richardson in delta.
  auto avg = [&](double delta) {
    return 0.25 * (piston_zeta(cfg, -0.5 + delta, tol).value + piston_zeta(cfg, -0.5 - delta, tol).value);
  };
  constexpr double delta = 1e-3;
  return (4.0 * avg(0.5 * delta) - avg(delta)) / 3.0;
}

double casimir_force(const PistonConfig& cfg, double order) {
  require_piston(cfg);
  const int D = cfg.D;
  const int Q = cfg.N->dim();
  const double pref = 1.0 / (8.0 * half_pi_power(D));
  const double other = cfg.L - cfg.beta;
  double force = 0.0;
  for (int l = -Q; l - D - 1 <= order + 1e-9; ++l) {
    if (l == D + 1 || l == D) continue;  // l = D is beta-independent
    const double a = cfg.N->heat_coeff(0.5 * (Q + l));
    if (a == 0.0) continue;
    const double bracket = std::pow(other, l - D - 1) - std::pow(cfg.beta, l - D - 1);
    force += pref * (l - D) * energy_factor(l, D) * a * bracket;
  }
  return force;
}

EvalResult mass_sum(double m, double L, int D, double tol) {
  if (!(m > 0.0) || !(L > 0.0)) throw DomainError("mass_sum: m and L must be positive");
  if (D < 2) throw DomainError("mass_sum: D must be at least 2");
  const double nu = 0.5 * D - 1.0;
  const double ratio = std::exp(-L * m);
  EvalResult r;
  double sum = 0.0;
  long n = 1;
  for (;; ++n) {
    const double z = n * L * m;
    const double term = std::pow(m / (n * L), nu) * specfun::bessel_k(nu, z);
    sum += term;
    const double tail = term * ratio / (1.0 - ratio);
    if (tail < tol * std::abs(sum)) {
      r.error_estimate = tail;
      break;
    }
    if (n > 50000000) throw NumericalError("mass_sum: no convergence");
  }
  r.value = sum;
  r.terms_used = n;
  r.method = "direct:mass";
  return r;
}

Expansion mass_expansion(double L, int D, double order) {
  if (!(L > 0.0)) throw DomainError("mass_expansion: L must be positive");
  if (D < 2) throw DomainError("mass_expansion: D must be at least 2");
  const double nu = 0.5 * D - 1.0;
  const Expansion h = expand_h0(-nu, order - 2.0 * nu);
  const double lh = std::log(0.5 * L);
  Expansion e;
  e.family = "mass";
  e.s = -nu;
  e.d = D;
  e.case_tag = h.case_tag;
  for (const auto& t : h.terms) {
    const double k = std::pow(2.0 / (L * L), nu) * std::pow(0.5 * L, t.power + 2.0 * nu);
    double c = t.const_coeff + t.log_coeff * lh;
    if (std::abs(c) <= 64.0 * 2.220446049250313e-16 * (std::abs(t.const_coeff) + std::abs(t.log_coeff * lh))) {
      c = 0.0;
    }
    e.terms.push_back({t.power + 2.0 * nu, k * c, k * t.log_coeff});
  }
  e.max_power = order;
  e.remainder_power = h.remainder_power + 2.0 * nu;
  return e;
}

}  // namespace besselsum
