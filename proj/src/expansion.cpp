#include "besselsum/expansion.hpp"

#include <algorithm>
#include <cmath>

namespace besselsum {

double evaluate_terms(const std::vector<ExpansionTerm>& terms, double beta) {
  const double lb = std::log(beta);
  double sum = 0.0;
  for (const ExpansionTerm& t : terms) {
    sum += (t.const_coeff + t.log_coeff * lb) * std::exp(t.power * lb);
  }
  return sum;
}

double evaluate(const Expansion& e, double beta) { return evaluate_terms(e.terms, beta); }

std::vector<ExpansionTerm> merge_terms(const std::vector<ExpansionTerm>& terms, double power_tol,
                                       double cancel_tol) {
  std::vector<ExpansionTerm> sorted = terms;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ExpansionTerm& a, const ExpansionTerm& b) { return a.power < b.power; });
  std::vector<ExpansionTerm> out;
  double scale_c = 0.0;
  double scale_l = 0.0;
  auto flush = [&] {
    if (out.empty()) return;
    ExpansionTerm& last = out.back();
    if (std::abs(last.const_coeff) <= cancel_tol * scale_c) last.const_coeff = 0.0;
    if (std::abs(last.log_coeff) <= cancel_tol * scale_l) last.log_coeff = 0.0;
    if (last.const_coeff == 0.0 && last.log_coeff == 0.0) out.pop_back();
  };
  for (const ExpansionTerm& t : sorted) {
    if (!out.empty() && std::abs(t.power - out.back().power) <= power_tol) {
      out.back().const_coeff += t.const_coeff;
      out.back().log_coeff += t.log_coeff;
      scale_c = std::max(scale_c, std::abs(t.const_coeff));
      scale_l = std::max(scale_l, std::abs(t.log_coeff));
      continue;
    }
    flush();
    out.push_back(t);
    scale_c = std::abs(t.const_coeff);
    scale_l = std::abs(t.log_coeff);
  }
  flush();
  return out;
}

ExpansionTerm find_term(const Expansion& e, double power, double power_tol) {
  for (const ExpansionTerm& t : e.terms) {
    if (std::abs(t.power - power) <= power_tol) return t;
  }
  return ExpansionTerm{power, 0.0, 0.0};
}

}  // namespace besselsum
