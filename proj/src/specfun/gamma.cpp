#include <array>
#include <cmath>
#include <string>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum::specfun {

namespace {

using cplx = std::complex<double>;

constexpr double kLnSqrt2Pi = 0.918938533204672741780329736405617640;

// Even Bernoulli numbers B_2 .. B_30 as exact rationals.
constexpr std::array<std::pair<double, double>, 15> kEvenBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

void require_not_pole(double x, const char* what) {
  if (is_nonpositive_integer(x)) {
    throw PoleError(std::string(what) + ": pole at nonpositive integer " +
                    std::to_string(x));
  }
}

// log sin(pi z) for Im z >= 0, stable for large imaginary parts.
cplx log_sin_pi_upper(cplx z) {
  const cplx i(0.0, 1.0);
  const cplx e2 = std::exp(2.0 * i * kPi * z);
  return std::log(cplx(0.0, 0.5)) - i * kPi * z + std::log(1.0 - e2);
}

cplx stirling_log_gamma(cplx z) {
  cplx sum = (z - 0.5) * std::log(z) - z + kLnSqrt2Pi;
  const cplx zinv = 1.0 / z;
  const cplx zinv2 = zinv * zinv;
  cplx zpow = zinv;
  for (int k = 1; k <= 10; ++k) {
    const double b2k = kEvenBernoulli[k - 1].first / kEvenBernoulli[k - 1].second;
    sum += b2k / (2.0 * k * (2.0 * k - 1.0)) * zpow;
    zpow *= zinv2;
  }
  return sum;
}

}  // namespace

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double sin_pi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double gamma(double x) {
  require_not_pole(x, "gamma");
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return 0.0;
  return 1.0 / std::tgamma(x);
}

double rgamma_deriv(double x) {
  if (is_nonpositive_integer(x)) {
    const int p = static_cast<int>(-x);
    const double fact = std::tgamma(p + 1.0);
    return (p % 2 == 0) ? fact : -fact;
  }
  return -digamma(x) * rgamma(x);
}

cplx log_gamma_complex(cplx z) {
  if (z.imag() == 0.0) require_not_pole(z.real(), "gamma_complex");
  if (z.imag() < 0.0) return std::conj(log_gamma_complex(std::conj(z)));
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi_upper(z) - log_gamma_complex(1.0 - z);
  }
  cplx shift(0.0, 0.0);
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling_log_gamma(z) - shift;
}

cplx gamma_complex(cplx z) {
  if (z.imag() == 0.0) return cplx(gamma(z.real()), 0.0);
  return std::exp(log_gamma_complex(z));
}

double digamma(double x) {
  require_not_pole(x, "digamma");
  if (x < 0.0) return digamma(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double xinv2 = 1.0 / (x * x);
  double series = 0.0;
  double pow = xinv2;
  for (int k = 1; k <= 8; ++k) {
    const double b2k = kEvenBernoulli[k - 1].first / kEvenBernoulli[k - 1].second;
    series += b2k / (2.0 * k) * pow;
    pow *= xinv2;
  }
  return acc + std::log(x) - 0.5 / x - series;
}

double harmonic(int n) {
  if (n < 0) throw DomainError("harmonic: negative index");
  double h = 0.0;
  for (int k = n; k >= 1; --k) h += 1.0 / k;
  return h;
}

double odd_harmonic(int n) {
  if (n < 0) throw DomainError("odd_harmonic: negative index");
  double h = 0.0;
  for (int k = n; k >= 1; --k) h += 1.0 / (2.0 * k - 1.0);
  return h;
}

double bernoulli_number(int n) {
  if (n < 0) throw DomainError("bernoulli_number: negative index");
  if (n == 0) return 1.0;
  if (n == 1) return -0.5;
  if (n % 2 == 1) return 0.0;
  const int k = n / 2;
  if (k <= static_cast<int>(kEvenBernoulli.size())) {
    return kEvenBernoulli[k - 1].first / kEvenBernoulli[k - 1].second;
  }
  // B_2k = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
  double zeta2k = 0.0;
  for (int m = 1; m < 20; ++m) zeta2k += std::pow(static_cast<double>(m), -n);
  const double mag =
      2.0 * std::exp(std::lgamma(n + 1.0) - n * std::log(2.0 * kPi)) * zeta2k;
  return (k % 2 == 1) ? mag : -mag;
}

double bernoulli_poly(int n, double x) {
  if (n < 0) throw DomainError("bernoulli_poly: negative degree");
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double bk = bernoulli_number(k);
    if (bk != 0.0) sum += binom * bk * std::pow(x, n - k);
    binom = binom * (n - k) / (k + 1.0);
  }
  return sum;
}

}  // namespace besselsum::specfun
