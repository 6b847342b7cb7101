#pragma once

// Classical special functions used by the Bessel-series evaluators and the
// small-beta expansions. Everything here works in double precision and is
// restricted to real orders/arguments unless the name says otherwise.

#include <complex>
#include <vector>

namespace besselsum::specfun {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kCatalan = 0.915965594177219015054603514932384110;

/// A simple pole of a real meromorphic function together with the regular
/// part left after removing the singular term.
struct PolePoint {
  double location = 0.0;
  double residue = 0.0;
  double finite_part = 0.0;
};

/// True when x is (numerically exactly) a nonpositive integer.
bool is_nonpositive_integer(double x);

/// sin(pi x) and cos(pi x) with exact argument reduction.
double sin_pi(double x);
double cos_pi(double x);

double gamma(double x);
/// 1/Gamma(x); exactly zero at the nonpositive integers.
double rgamma(double x);
/// d/dx [1/Gamma(x)]; equals (-1)^p p! at x = -p.
double rgamma_deriv(double x);

std::complex<double> log_gamma_complex(std::complex<double> z);
std::complex<double> gamma_complex(std::complex<double> z);

double digamma(double x);
double harmonic(int n);
double odd_harmonic(int n);

double bernoulli_number(int n);
double bernoulli_poly(int n, double x);

/// Modified Bessel function of the second kind, K_nu(x), x > 0.
double bessel_k(double nu, double x);

double riemann_zeta(double s);
/// Constant term of zeta(s) at its pole s = 1 (Euler's constant).
double riemann_zeta_fp_at_1();
double riemann_zeta_deriv(double s);

double hurwitz_zeta(double s, double a);
/// Partial derivative of the Hurwitz zeta function with respect to s.
double hurwitz_zeta_deriv(double s, double a);
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);
std::complex<double> riemann_zeta(std::complex<double> s);

/// Li_nu(exp(2 pi i x)) for real order nu and 0 < x < 1.
std::complex<double> polylog_unit(double nu, double x);

/// C(nu, x) = Li_nu(e^{2 pi i x}) + Li_nu(e^{-2 pi i x}), analytically
/// continued in nu; real for real nu. Requires 0 < x < 1.
double polylog_pair(double nu, double x);
/// dC/dnu.
double polylog_pair_deriv(double nu, double x);
/// C(nu, x) for complex order (Hurwitz representation).
std::complex<double> polylog_pair(std::complex<double> nu, double x);

/// Epstein zeta function of the sum of d squares,
/// Z(u) = sum' |n|^{-2u} over Z^d without the origin.
///
/// Values come from the completed function pi^{-u} Gamma(u) Z(u), written
/// as two incomplete theta integrals over [1, inf) plus the two rational
/// pole terms. The theta values at the fixed quadrature nodes are computed
/// once per context.
class EpsteinContext {
 public:
  explicit EpsteinContext(int d);

  int dim() const { return d_; }
  double zeta(double u) const;
  double zeta_deriv(double u) const;
  PolePoint residue_and_finite_part() const;

 private:
  // I(v) = int_1^inf t^{v-1} (theta_d(t) - 1) dt and its v-derivative.
  double incomplete(double v) const;
  double incomplete_deriv(double v) const;
  double regular_part(double u) const;
  double regular_part_deriv(double u) const;

  int d_;
  std::vector<double> nodes_;    // t - 1 at each node
  std::vector<double> weights_;  // weight times (theta_d(t) - 1)
};

double epstein_zeta(const EpsteinContext& ctx, double u);
PolePoint epstein_res_fp(const EpsteinContext& ctx);
double epstein_zeta_deriv(const EpsteinContext& ctx, double u);

}  // namespace besselsum::specfun
