#pragma once

// Symbolic small-beta expansions: finite sums of (c + L ln beta) beta^p.

#include <limits>
#include <string>
#include <vector>

namespace besselsum {

struct ExpansionTerm {
  double power = 0.0;
  double const_coeff = 0.0;
  double log_coeff = 0.0;
};

struct Expansion {
  std::string family;  // h, h0, g, f, f0, product, mass
  double s = 0.0;
  double x = 0.0;
  int d = 0;
  std::string model;
  std::string case_tag;
  std::vector<ExpansionTerm> terms;  // ascending power
  double max_power = 0.0;
  double remainder_power = std::numeric_limits<double>::infinity();
};

double evaluate(const Expansion& e, double beta);
double evaluate_terms(const std::vector<ExpansionTerm>& terms, double beta);

/// Sorts by power, combines terms whose powers agree to power_tol and drops
/// terms whose coefficients vanish relative to cancel_tol times the largest
/// contribution that entered them.
std::vector<ExpansionTerm> merge_terms(const std::vector<ExpansionTerm>& terms,
                                       double power_tol = 1e-10, double cancel_tol = 0.0);

/// Coefficients of the term with the given power, zero if absent.
ExpansionTerm find_term(const Expansion& e, double power, double power_tol = 1e-9);

}  // namespace besselsum
