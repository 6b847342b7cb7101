#pragma once

// Spectral models entering the double series
//   f(s, beta, B) = sum_n sum_m (m beta / alpha_n)^s cos(2 pi m B) K_{-s}(2 alpha_n m beta).
//
// Conventions: zeta_M(s) = sum_n alpha_n^{-2s}, and the heat trace
//   sum_n exp(-t alpha_n^2) ~ sum_j A_j t^{j - D/2},   j = 0, 1/2, 1, ...

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "besselsum/specfun.hpp"

namespace besselsum {

/// A group of equal eigenvalues alpha with its multiplicity.
struct EigenGroup {
  double alpha = 0.0;
  double multiplicity = 0.0;
};

class ManifoldModel {
 public:
  virtual ~ManifoldModel() = default;

  virtual std::string name() const = 0;
  /// Manifold dimension D.
  virtual int dim() const = 0;
  /// Heat-kernel coefficient A_j; j must be a nonnegative multiple of 1/2.
  virtual double heat_coeff(double j) const = 0;
  /// All poles of zeta_M with residues and finite parts. A finite part that
  /// the model cannot supply is NaN.
  virtual std::vector<specfun::PolePoint> zeta_poles() const = 0;
  virtual double zeta(double s) const = 0;
  virtual double zeta_deriv(double s) const = 0;
  virtual double heat_trace(double t) const = 0;
  /// Eigenvalue groups with alpha <= alpha_max, increasing.
  virtual std::vector<EigenGroup> spectrum(double alpha_max) const = 0;
  /// True when spectrum() is exhaustive beyond alpha_max (finite tables).
  virtual bool finite_spectrum() const { return false; }
  /// Largest tabulated eigenvalue for finite spectra.
  virtual double alpha_limit() const;
};

using ModelPtr = std::shared_ptr<const ManifoldModel>;

/// alpha_n = n, n >= 1.
ModelPtr circle_model();
/// alpha over Z^d without the origin.
ModelPtr torus_model(int d);
/// alpha_n = n - 1 + a, n >= 1, 0 < a <= 1 (shifted circle).
ModelPtr hurwitz_model(double a);
/// Model read from a text file; see README for the format.
ModelPtr table_model(const std::string& path);
ModelPtr table_model_from_string(const std::string& text);

/// "circle", "torus:<d>", "hurwitz:<a>" or "table:<path>".
ModelPtr parse_model(const std::string& spec);

double heat_trace(const ManifoldModel& model, double t);

/// Number of representations of k as a sum of d squares, k = 0..k_max.
std::vector<double> lattice_counts(int d, long k_max);

}  // namespace besselsum
