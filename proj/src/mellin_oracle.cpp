#include "besselsum/mellin_oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <string>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum {

using cplx = std::complex<double>;
using specfun::kPi;

namespace {

cplx gamma_pair_times_power(double s, double beta, cplx t) {
  return std::exp(specfun::log_gamma_complex(t) + specfun::log_gamma_complex(t + s) -
                  2.0 * t * std::log(beta));
}

ContourConfig resolve(double s, double beta, const ContourConfig& cfg) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  ContourConfig out = cfg;
  const double c_min = std::max(0.5, -s);
  if (out.c == 0.0) out.c = c_min + 0.5;
  if (!(out.c > c_min)) {
    throw ConfigError("contour abscissa c = " + std::to_string(out.c) +
                      " must exceed max(1/2, -s) = " + std::to_string(c_min));
  }
  if (!(out.quad_tol > 0.0)) throw ConfigError("quad_tol must be positive");
  if (out.y_max == 0.0) out.y_max = default_y_max(s, beta, out.c, std::min(out.quad_tol, 1e-14));
  if (!(out.y_max > 0.0)) throw ConfigError("y_max must be positive");
  return out;
}

// (1/2 pi) int_0^{y_max} Re F(c + i y) dy in panels of width 2.
double integrate_line(const std::function<cplx(cplx)>& F, const ContourConfig& cfg) {
  auto re = [&](double y) { return F(cplx(cfg.c, y)).real(); };
  double total = 0.0;
  for (double a = 0.0; a < cfg.y_max; a += 2.0) {
    const double b = std::min(a + 2.0, cfg.y_max);
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(re, a, b, 12,
                                                                           cfg.quad_tol);
  }
  return total / (2.0 * kPi);
}

}  // namespace

double default_y_max(double s, double beta, double c, double tol) {
  // |Gamma(c+iy) Gamma(c+s+iy)| ~ 2 pi |y|^{2c+s-1} e^{-pi |y|}; zeta factor <= zeta(2c).
  const double bound = specfun::riemann_zeta(2.0 * c) * std::pow(beta, -2.0 * c);
  double y = 4.0;
  while (y < 1000.0) {
    const double env = 2.0 * kPi * std::pow(y, 2.0 * c + s - 1.0) * std::exp(-kPi * y) * bound;
    if (env < tol) break;
    y += 1.0;
  }
  return y;
}

cplx mellin_integrand_h0(double s, double beta, cplx t) {
  return gamma_pair_times_power(s, beta, t) * specfun::riemann_zeta(2.0 * t);
}

cplx mellin_integrand_h(double s, double beta, double x, cplx t) {
  return gamma_pair_times_power(s, beta, t) * 0.5 * specfun::polylog_pair(2.0 * t, x);
}

double contour_h0(double s, double beta, const ContourConfig& cfg) {
  const ContourConfig c = resolve(s, beta, cfg);
  return integrate_line([&](cplx t) { return mellin_integrand_h0(s, beta, t); }, c);
}

double contour_h(double s, double beta, double x, const ContourConfig& cfg) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("contour_h: x must lie in (0, 1)");
  const ContourConfig c = resolve(s, beta, cfg);
  return integrate_line([&](cplx t) { return mellin_integrand_h(s, beta, x, t); }, c);
}

}  // namespace besselsum
