#pragma once

// Small-beta expansions of h, h0, g, f and f0 from the residues of their
// Mellin-Barnes integrands
//   (1/(4 pi i)) int Gamma(t) Gamma(t+s) beta^{-2t} Z(t+s) X(t) dt,
// with Z in {1, zeta_M, zeta_E} and X in {1, C(2t,x)/2, zeta_R(2t)}.
// Poles are collected to the left of the contour; coincident poles (at most
// double) produce ln(beta) terms.

#include <string>

#include "besselsum/expansion.hpp"
#include "besselsum/manifolds.hpp"

namespace besselsum {

/// Residue at t0 of phi_p(t) phi_q(t) r(t) where phi_p ~ res_p/(t-t0) + fp_p,
/// phi_q ~ res_q/(t-t0) + fp_q and r is analytic with r(t0), r'(t0) given.
double double_pole_residue(double res_p, double fp_p, double res_q, double fp_q, double r_val,
                           double r_deriv);

/// Branch label for a family ("h", "h0", "g", "f", "f0"); dim is d for g and
/// the model dimension D for f/f0 (ignored otherwise).
std::string dispatch_case(const std::string& family, double s, int dim = 1);

Expansion expand_h(double s, double x, double order);
Expansion expand_h0(double s, double order);
Expansion expand_g(int d, double s, double order);
Expansion expand_f(const ManifoldModel& model, double s, double x, double order);
Expansion expand_f0(const ManifoldModel& model, double s, double order);

/// f for arbitrary real B (routes integer B to f0).
Expansion expand_f_any(const ManifoldModel& model, double s, double B, double order);
/// h for arbitrary real B (routes integer B to h0).
Expansion expand_h_any(double s, double B, double order);

/// Fractional part of B in [0, 1).
double reduce_B(double B);

}  // namespace besselsum
