#include <cmath>
#include <limits>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum::specfun {

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
//
// The integrand is already double-exponentially decaying, so the plain
// trapezoidal rule converges geometrically with rate exp(-pi^2 / h). All
// terms are accumulated relative to the largest exponent to stay finite for
// tiny x and large |nu|; the factor exp(-x) is split off for large x.
double bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
  const double anu = std::abs(nu);
  constexpr double h = 0.125;

  auto log_term = [&](double t) {
    // -x (cosh t - 1) + log cosh(nu t), written without overflow
    const double cosh_m1 = 2.0 * std::sinh(0.5 * t) * std::sinh(0.5 * t);
    return -x * cosh_m1 + anu * t + std::log1p(std::exp(-2.0 * anu * t)) - kLn2;
  };

  // Peak of the integrand: x sinh t = |nu|.
  const double t_peak = std::asinh(anu / x);
  const double g_max = log_term(t_peak);

  double sum = 0.5 * std::exp(log_term(0.0) - g_max);
  for (int k = 1;; ++k) {
    const double t = k * h;
    const double term = std::exp(log_term(t) - g_max);
    sum += term;
    if (t > t_peak && term < 1e-18 * sum) break;
    if (k > 100000) throw NumericalError("bessel_k: quadrature did not terminate");
  }
  const double log_value = std::log(h * sum) + g_max - x;
  if (log_value < -745.0) return 0.0;
  return std::exp(log_value);
}

}  // namespace besselsum::specfun
