#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum::specfun {

namespace {

using cplx = std::complex<double>;

double magnitude(double v) { return std::abs(v); }
double magnitude(const cplx& v) { return std::abs(v); }

template <typename T>
T real_pow(double base, const T& minus_exponent) {
  // base^{-s}
  return std::exp(-minus_exponent * std::log(base));
}

// B_{2j} / (2j)!, j = 1..40
const std::array<double, 41>& em_coefficients() {
  static const std::array<double, 41> table = [] {
    std::array<double, 41> t{};
    for (int j = 1; j <= 40; ++j) t[j] = bernoulli_number(2 * j) / std::tgamma(2.0 * j + 1.0);
    return t;
  }();
  return table;
}

int em_cutoff(double abs_s) { return 10 + static_cast<int>(std::ceil((abs_s + 40.0) / 3.0)); }

// Complex arguments with Re s < 0: fewer explicit terms limit the
// cancellation among (k + a)^{-s}; 2 pi w still exceeds |s| comfortably.
int em_cutoff(const cplx& s) {
  if (s.real() >= 0.0) return em_cutoff(std::abs(s));
  return 8 + static_cast<int>(std::ceil(std::abs(s) / kPi));
}
int em_cutoff_for(double s) { return em_cutoff(std::abs(s)); }
int em_cutoff_for(const cplx& s) { return em_cutoff(s); }

// Euler-Maclaurin for zeta(s, a) with the first N terms summed explicitly.
template <typename T>
T hurwitz_em(const T& s, double a) {
  const int n_direct = em_cutoff_for(s);
  T sum(0.0);
  for (int k = n_direct - 1; k >= 0; --k) sum += real_pow(k + a, s);
  const double w = n_direct + a;
  const T w_pow = real_pow(w, s);  // w^{-s}
  sum += w_pow * w / (s - 1.0) + 0.5 * w_pow;
  T poch = s;                        // (s)_{2j-1}
  T w_term = w_pow / w;              // w^{-s-2j+1}
  for (int j = 1; j <= 40; ++j) {
    const T term = em_coefficients()[j] * poch * w_term;
    sum += term;
    if (magnitude(term) < 1e-18 * magnitude(sum)) break;
    poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    w_term /= w * w;
  }
  return sum;
}

// d/ds of the Euler-Maclaurin representation, term by term.
double hurwitz_em_deriv(double s, double a) {
  const int n_direct = em_cutoff(std::abs(s));
  double sum = 0.0;
  for (int k = n_direct - 1; k >= 0; --k) sum -= std::log(k + a) * std::pow(k + a, -s);
  const double w = n_direct + a;
  const double lw = std::log(w);
  const double w_pow = std::pow(w, -s);
  sum += w_pow * w * (-lw / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
  sum += -0.5 * lw * w_pow;
  double poch = s;
  double dpoch = 1.0;
  double w_term = w_pow / w;
  for (int j = 1; j <= 40; ++j) {
    const double c = em_coefficients()[j];
    const double term = c * (dpoch - lw * poch) * w_term;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && j > 2) break;
    const double f1 = s + (2.0 * j - 1.0);
    const double f2 = s + 2.0 * j;
    dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch *= f1 * f2;
    w_term /= w * w;
  }
  return sum;
}

bool is_negative_even_integer(double s) {
  return s < 0.0 && s == std::floor(s) && std::fmod(s, 2.0) == 0.0;
}

}  // namespace

double riemann_zeta(double s) {
  if (s == 1.0) throw PoleError("riemann_zeta: pole at s = 1");
  if (s == 0.0) return -0.5;
  if (is_negative_even_integer(s)) return 0.0;
  // Euler-Maclaurin is valid for s > -1 and avoids forming 1 - s near the pole.
  if (s > -1.0) {
    if (s > 60.0) return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);
    return hurwitz_em(s, 1.0);
  }
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
  const double log_chi = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + std::lgamma(1.0 - s);
  return std::exp(log_chi) * sin_pi(0.5 * s) * riemann_zeta(1.0 - s);
}

double riemann_zeta_fp_at_1() { return kEulerGamma; }

double riemann_zeta_deriv(double s) {
  if (s == 1.0) throw PoleError("riemann_zeta_deriv: pole at s = 1");
  if (s > -1.0) {
    if (s > 60.0) {
      return -std::log(2.0) * std::pow(2.0, -s) - std::log(3.0) * std::pow(3.0, -s);
    }
    return hurwitz_em_deriv(s, 1.0);
  }
  // Differentiated functional equation, arranged so that the zeros of
  // sin(pi s / 2) at negative even s cause no 0 * inf.
  const double chi = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + std::lgamma(1.0 - s));
  const double z1 = riemann_zeta(1.0 - s);
  const double dz1 = riemann_zeta_deriv(1.0 - s);
  const double sin_part = sin_pi(0.5 * s);
  const double cos_part = cos_pi(0.5 * s);
  return chi * (sin_part * (z1 * (std::log(2.0 * kPi) - digamma(1.0 - s)) - dz1) +
                0.5 * kPi * cos_part * z1);
}

double hurwitz_zeta(double s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (s == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (a == 1.0) return riemann_zeta(s);
  if (s < 0.0) {
    if (s == std::floor(s)) {
      const int n = static_cast<int>(-s);
      return -bernoulli_poly(n + 1, a) / (n + 1.0);
    }
    // Hurwitz's formula through the periodic zeta function:
    // zeta(s, a) = 2 Gamma(1-s) (2 pi)^{s-1} Re[e^{-i pi (1-s)/2} Li_{1-s}(e^{2 pi i a})]
    const double nu = 1.0 - s;
    const std::complex<double> li = polylog_unit(nu, a);
    const std::complex<double> phase(cos_pi(0.5 * nu), -sin_pi(0.5 * nu));
    const double scale = std::exp(std::lgamma(nu) + (s - 1.0) * std::log(2.0 * kPi)) *
                         (std::tgamma(nu) < 0.0 ? -1.0 : 1.0);
    return 2.0 * scale * (phase * li).real();
  }
  return hurwitz_em(s, a);
}

double hurwitz_zeta_deriv(double s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta_deriv: a must lie in (0, 1]");
  if (s == 1.0) throw PoleError("hurwitz_zeta_deriv: pole at s = 1");
  if (a == 1.0) return riemann_zeta_deriv(s);
  if (s < 0.0) {
    // No convenient closed form; Richardson-extrapolated central differences.
    auto central = [&](double h) {
      return (hurwitz_zeta(s + h, a) - hurwitz_zeta(s - h, a)) / (2.0 * h);
    };
    const double h = (s > -1e-2) ? std::min(1e-3, 0.5 * std::abs(s)) : 1e-3;
    if (h == 0.0) return hurwitz_em_deriv(s, a);
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
  }
  return hurwitz_em_deriv(s, a);
}

std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (s == std::complex<double>(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
  return hurwitz_em(s, a);
}

std::complex<double> riemann_zeta(std::complex<double> s) { return hurwitz_zeta(s, 1.0); }

}  // namespace besselsum::specfun
