#pragma once

// Direct summation of the Bessel series
//   h(s, beta, B) = sum_m (m beta)^s cos(2 pi m B) K_{-s}(2 m beta)
//   g_d(s, beta)  = sum' over Z^d of (beta/|n|)^s K_{-s}(2 |n| beta)
//   f(s, beta, B) = sum_n sum_m (m beta / alpha_n)^s cos(2 pi m B) K_{-s}(2 alpha_n m beta)
// with a tail bound from the exp(-2 beta m) decay of the Bessel factor.

#include <string>

#include "besselsum/manifolds.hpp"

namespace besselsum {

inline constexpr double kDefaultTol = 1e-12;

struct SeriesParams {
  double s = 0.0;
  double beta = 1.0;
  double B = 0.0;
  int d = 1;
  ModelPtr model;
};

struct EvalResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long terms_used = 0;
  std::string method;
};

EvalResult sum_h(double s, double beta, double B, double tol = kDefaultTol);
EvalResult sum_h(const SeriesParams& p, double tol = kDefaultTol);
EvalResult sum_h0(double s, double beta, double tol = kDefaultTol);
EvalResult sum_g(int d, double s, double beta, double tol = kDefaultTol);
EvalResult sum_f(const ManifoldModel& model, double s, double beta, double B,
                 double tol = kDefaultTol);

}  // namespace besselsum
