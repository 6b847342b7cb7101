#include <cmath>
#include <complex>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum::specfun {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * kPi;

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(what) + ": x must lie in (0, 1)");
}

bool is_integer(double v) { return v == std::floor(v); }

int nearest_odd_positive(double nu) {
  const double r = std::round(nu);
  if (r >= 1.0 && std::fmod(r, 2.0) == 1.0) return static_cast<int>(r);
  return 0;
}

// Li_nu(e^{i theta}) for 0 < theta <= pi, from the expansion of Li_nu(e^mu)
// about mu = 0 (radius 2 pi).
cplx polylog_mu_series(double nu, double theta) {
  const cplx mu(0.0, theta);
  cplx sum(0.0, 0.0);
  cplx mu_pow(1.0, 0.0);
  double fact = 1.0;
  const bool integer_order = is_integer(nu) && nu >= 1.0;
  const int n = integer_order ? static_cast<int>(nu) : 0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      mu_pow *= mu;
      fact *= k;
    }
    if (integer_order && k == n - 1) {
      const cplx log_minus_mu(std::log(theta), -0.5 * kPi);
      sum += mu_pow / fact * (harmonic(n - 1) - log_minus_mu);
      continue;
    }
    const cplx term = riemann_zeta(nu - k) * mu_pow / fact;
    sum += term;
    if (k > 8 && k > nu + 2 && std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  if (!integer_order) {
    // Gamma(1 - nu) (-mu)^{nu - 1}, with -mu = theta e^{-i pi / 2}
    const double mag = gamma(1.0 - nu) * std::pow(theta, nu - 1.0);
    sum += mag * cplx(cos_pi(0.5 * (nu - 1.0)), -sin_pi(0.5 * (nu - 1.0)));
  }
  return sum;
}

cplx polylog_direct(double nu, double x) {
  cplx sum(0.0, 0.0);
  for (int m = 1; m < 100000; ++m) {
    const double w = std::pow(static_cast<double>(m), -nu);
    sum += w * cplx(cos_pi(2.0 * m * x), sin_pi(2.0 * m * x));
    if (w < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// G(nu) = Gamma(1 - nu) sin(pi nu / 2), finite at the positive even integers.
double g_factor(double nu) {
  if (nu > 0.0 && is_integer(nu) && std::fmod(nu, 2.0) == 0.0) {
    const int m = static_cast<int>(nu) / 2;
    const double v = kPi / (2.0 * std::tgamma(nu));
    return (m % 2 == 0) ? v : -v;
  }
  return gamma(1.0 - nu) * sin_pi(0.5 * nu);
}

double g_factor_deriv(double nu) {
  if (nu > 0.0 && is_integer(nu) && std::fmod(nu, 2.0) == 0.0) {
    return -g_factor(nu) * digamma(nu);
  }
  return gamma(1.0 - nu) * (-digamma(1.0 - nu) * sin_pi(0.5 * nu) + 0.5 * kPi * cos_pi(0.5 * nu));
}

// Stieltjes constants gamma_0..gamma_10.
constexpr double kStieltjes[] = {
    0.5772156649015328606,  -0.0728158454836767249, -0.0096903631928723185,
    0.0020538344203033459,  0.0023253700654673000,  0.0007933238173010627,
    -0.0002387693454301996, -0.0005272895670577510, -0.0003521233538030395,
    -0.0000343947744180880, 0.0002053328149090648};

// zeta(1 + delta) - 1/delta, |delta| <= 1/4
double zeta_one_regular(double delta) {
  double sum = 0.0;
  double p = 1.0;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) p *= -delta / k;
    sum += kStieltjes[k] * p;
  }
  return sum;
}

// log(1 + y) / y
double log1p_over(double y) { return y == 0.0 ? 1.0 : std::log1p(y) / y; }
// expm1(y) / y
double expm1_over(double y) { return y == 0.0 ? 1.0 : std::expm1(y) / y; }

// ln Gamma(1 - delta) / delta = gamma + sum_{k>=2} zeta(k) delta^{k-1} / k
double lgamma_one_minus_over(double delta) {
  double sum = kEulerGamma;
  double p = 1.0;
  for (int k = 2; k < 80; ++k) {
    p *= delta;
    const double term = riemann_zeta(k) * p / k;
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

// The two terms of the series that are singular at an odd order n,
//   G(n + delta) theta^{n - 1 + delta} + (-1)^{(n-1)/2} zeta(1 + delta) theta^{n-1} / (n-1)!,
// combined without cancellation.
double odd_singular_pair(int n, double delta, double theta) {
  const double lt = std::log(theta);
  const double sq = sin_pi(0.25 * delta);
  const double log_cos_over = delta == 0.0 ? 0.0 : log1p_over(-2.0 * sq * sq) * (-2.0 * sq * sq) / delta;
  double u_over = lgamma_one_minus_over(delta) + log_cos_over + lt;
  for (int k = 1; k < n; ++k) u_over -= log1p_over(delta / k) / k;
  const double q0 = 1.0 / std::tgamma(static_cast<double>(n));
  const double sign = (((n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(theta, n - 1) * q0 *
         (zeta_one_regular(delta) - u_over * expm1_over(u_over * delta));
}

int odd_neighbour(double nu) {
  const int odd = nearest_odd_positive(nu);
  return (odd > 0 && odd < 12 && std::abs(nu - odd) <= 0.25) ? odd : 0;
}

// Real series part of C for -1/2 < nu < 12 and theta = 2 pi x <= pi.
double pair_series(double nu, double theta) {
  const int odd = odd_neighbour(nu);
  double sum = 0.0;
  if (odd > 0) {
    sum += odd_singular_pair(odd, nu - odd, theta);
  } else {
    sum += g_factor(nu) * std::pow(theta, nu - 1.0);
  }
  double t_pow = 1.0;
  double fact = 1.0;
  for (int j = 0; j < 100; ++j) {
    if (j > 0) {
      t_pow *= theta * theta;
      fact *= (2.0 * j - 1.0) * (2.0 * j);
    }
    if (odd > 0 && 2 * j == odd - 1) continue;
    const double term = ((j % 2 == 0) ? 1.0 : -1.0) * riemann_zeta(nu - 2.0 * j) * t_pow / fact;
    sum += term;
    if (j > 4 && 2.0 * j > nu + 2.0 && std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return 2.0 * sum;
}

double pair_series_deriv(double nu, double theta) {
  double sum = std::pow(theta, nu - 1.0) * (g_factor_deriv(nu) + g_factor(nu) * std::log(theta));
  double t_pow = 1.0;
  double fact = 1.0;
  for (int j = 0; j < 100; ++j) {
    if (j > 0) {
      t_pow *= theta * theta;
      fact *= (2.0 * j - 1.0) * (2.0 * j);
    }
    const double term = ((j % 2 == 0) ? 1.0 : -1.0) * riemann_zeta_deriv(nu - 2.0 * j) * t_pow / fact;
    sum += term;
    if (j > 4 && 2.0 * j > nu + 2.0 && std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return 2.0 * sum;
}

// C via Hurwitz zeta values of order 1 - nu.
double pair_hurwitz(double nu, double x) {
  const double z = hurwitz_zeta(1.0 - nu, x) + hurwitz_zeta(1.0 - nu, 1.0 - x);
  return 2.0 * gamma(1.0 - nu) * std::pow(kTwoPi, nu - 1.0) * sin_pi(0.5 * nu) * z;
}

double pair_hurwitz_deriv(double nu, double x) {
  const double z = hurwitz_zeta(1.0 - nu, x) + hurwitz_zeta(1.0 - nu, 1.0 - x);
  const double dz = -(hurwitz_zeta_deriv(1.0 - nu, x) + hurwitz_zeta_deriv(1.0 - nu, 1.0 - x));
  const double g = gamma(1.0 - nu);
  const double p = std::pow(kTwoPi, nu - 1.0);
  const double s = sin_pi(0.5 * nu);
  const double c = cos_pi(0.5 * nu);
  const double dfront = g * (-digamma(1.0 - nu) * s + 0.5 * kPi * c + std::log(kTwoPi) * s);
  return 2.0 * p * (dfront * z + g * s * dz);
}

double pair_raw(double nu, double x) {
  if (nu <= -0.5) return pair_hurwitz(nu, x);
  if (nu < 12.0) return pair_series(nu, kTwoPi * x);
  return 2.0 * polylog_direct(nu, x).real();
}

}  // namespace

cplx polylog_unit(double nu, double x) {
  require_open_unit(x, "polylog_unit");
  if (x > 0.5) return std::conj(polylog_unit(nu, 1.0 - x));
  if (nu >= 12.0) return polylog_direct(nu, x);
  return polylog_mu_series(nu, kTwoPi * x);
}

double polylog_pair(double nu, double x) {
  require_open_unit(x, "polylog_pair");
  if (x > 0.5) x = 1.0 - x;
  if (nu == 0.0) return -1.0;
  if (nu < 0.0 && is_integer(nu) && std::fmod(nu, 2.0) == 0.0) return 0.0;
  if (x == 0.5) {
    if (nu == 1.0) return -2.0 * kLn2;
    return 2.0 * (std::pow(2.0, 1.0 - nu) - 1.0) * riemann_zeta(nu);
  }
  return pair_raw(nu, x);
}

double polylog_pair_deriv(double nu, double x) {
  require_open_unit(x, "polylog_pair_deriv");
  if (x > 0.5) x = 1.0 - x;
  if (x == 0.5) {
    if (nu == 1.0) return -2.0 * kEulerGamma * kLn2 + kLn2 * kLn2;
    const double a = std::pow(2.0, 1.0 - nu);
    return 2.0 * (-kLn2 * a * riemann_zeta(nu) + (a - 1.0) * riemann_zeta_deriv(nu));
  }
  if (odd_neighbour(nu) > 0 || nu >= 12.0) {
    constexpr double h = 2e-3;
    auto central = [&](double step) {
      return (polylog_pair(nu + step, x) - polylog_pair(nu - step, x)) / (2.0 * step);
    };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
  }
  if (nu <= -0.5) return pair_hurwitz_deriv(nu, x);
  return pair_series_deriv(nu, kTwoPi * x);
}

cplx polylog_pair(cplx nu, double x) {
  require_open_unit(x, "polylog_pair");
  if (nu.imag() == 0.0) return cplx(polylog_pair(nu.real(), x), 0.0);
  const cplx one_minus = 1.0 - nu;
  const cplx z = hurwitz_zeta(one_minus, x) + hurwitz_zeta(one_minus, 1.0 - x);
  const cplx front = std::exp(log_gamma_complex(one_minus) + (nu - 1.0) * std::log(kTwoPi));
  return 2.0 * front * std::sin(0.5 * kPi * nu) * z;
}

}  // namespace besselsum::specfun
