#pragma once

// Numerical evaluation of the Mellin-Barnes representations of h0 and h
// along the vertical line Re t = c:
//   h0(s, beta)    = 1/(4 pi i) int Gamma(t) Gamma(t+s) beta^{-2t} zeta_R(2t) dt
//   h(s, beta, x)  = 1/(4 pi i) int Gamma(t) Gamma(t+s) beta^{-2t} C(2t, x)/2 dt

#include <complex>

namespace besselsum {

struct ContourConfig {
  double c = 0.0;        // 0 selects max(1/2, -s) + 1/2
  double y_max = 0.0;    // 0 selects the height from the Stirling envelope
  double quad_tol = 1e-12;
};

/// The integrand (without the 1/(4 pi i) factor) at a point t.
std::complex<double> mellin_integrand_h0(double s, double beta, std::complex<double> t);
std::complex<double> mellin_integrand_h(double s, double beta, double x, std::complex<double> t);

double contour_h0(double s, double beta, const ContourConfig& cfg = {});
/// Accurate to about 1e-12 for c <= 2. Larger c moves the Hurwitz zeta
/// inside C(2t, x) further left, where it cancels; about 5e-9 at c = 3.
double contour_h(double s, double beta, double x, const ContourConfig& cfg = {});

/// Height beyond which the integrand magnitude is below tol.
double default_y_max(double s, double beta, double c, double tol);

}  // namespace besselsum
