#pragma once

// Uniform access to the five series families and the order-scaling check
// err(beta_small) / err(beta_large) ~ (beta_small / beta_large)^remainder_power.

#include <functional>
#include <string>

#include "besselsum/direct_eval.hpp"
#include "besselsum/expansion.hpp"
#include "besselsum/manifolds.hpp"

namespace besselsum {

struct SeriesSpec {
  std::string family;  // h, h0, g, f, f0
  double s = 0.0;
  double B = 0.0;      // h and f
  int d = 1;           // g
  ModelPtr model;      // f and f0
};

/// Throws ConfigError for an unknown family or missing model.
void validate(const SeriesSpec& spec);
EvalResult eval_series(const SeriesSpec& spec, double beta, double tol = kDefaultTol);
Expansion expand_series(const SeriesSpec& spec, double order);

struct RatioCheck {
  double beta_small = 0.0;
  double beta_large = 0.0;
  double err_small = 0.0;
  double err_large = 0.0;
  double ratio = 0.0;
  double expected = 0.0;
  /// Roundoff floor: 1e-11 times the largest of 1, |direct| and sum |term|.
  double noise = 0.0;
  bool passed = false;
};

/// For terminating expansions (remainder_power infinite) both errors must
/// stay below the noise floor; otherwise the ratio must lie within a factor
/// 4 of the expected value, unless both errors are already at the floor.
RatioCheck ratio_check(const Expansion& e, const std::function<double(double)>& direct,
                       double beta_small, double beta_large);

}  // namespace besselsum
