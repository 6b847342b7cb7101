#pragma once

// Spectral zeta functions on I x R^d x N, the fermionic piston and the
// compactified lambda phi^4 mass series.

#include <utility>

#include "besselsum/direct_eval.hpp"
#include "besselsum/expansion.hpp"
#include "besselsum/manifolds.hpp"

namespace besselsum {

/// I x R^d x N with gamma^2 = pi^2 (m + B)^2 / beta^2 on the interval.
struct ProductGeometry {
  int d = 0;
  ModelPtr N;
  double beta = 1.0;
  double B = 0.0;
  /// Total dimension d + 1 + dim N.
  int total_dim() const;
};

/// Fermionic piston M^D x N; the first chamber has length beta, the whole
/// piston length L.
struct PistonConfig {
  int D = 1;
  ModelPtr N;
  double beta = 0.5;
  double L = 1.0;
};

struct CasimirEnergy {
  double pole_coeff = 0.0;   // coefficient of 1/epsilon
  double finite_part = 0.0;  // the epsilon-independent series
};

/// Analytically continued product zeta function: zeta_N term plus a
/// double Bessel sum.
EvalResult product_zeta(const ProductGeometry& geom, double s, double tol = kDefaultTol);

/// Both sides of the Poisson resummation identity for the interval modes.
std::pair<double, double> poisson_check(double t, double beta, double B);

/// Small-beta expansion of product_zeta.
Expansion product_zeta_expansion(const ProductGeometry& geom, double s, double order);

/// zeta(s, beta) = -2^{D-3} product_zeta with d = D - 1, B = 1/2.
EvalResult piston_zeta(const PistonConfig& cfg, double s, double tol = kDefaultTol);

/// Small-beta expansion of the first-chamber energy (1/2) zeta(eps - 1/2, beta).
CasimirEnergy casimir_energy(const PistonConfig& cfg, double order = 8.0);
/// Finite part of (1/2) piston_zeta at s = -1/2 from direct sums.
double casimir_energy_direct(const PistonConfig& cfg, double tol = kDefaultTol);
/// Force on the piston, -d/dbeta of the two-chamber energy, from the
/// small-size expansion of both chambers.
double casimir_force(const PistonConfig& cfg, double order = 8.0);

/// S(m) = sum_n (m / (n L))^{D/2-1} K_{D/2-1}(n L m).
EvalResult mass_sum(double m, double L, int D, double tol = kDefaultTol);
/// Small-m expansion of S(m); powers and logarithms refer to m.
Expansion mass_expansion(double L, int D, double order);

}  // namespace besselsum
