#include "besselsum/direct_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum {

namespace {

void check_args(double beta, double tol) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

// (x)^s K_s(2x), the magnitude envelope of a single term.
double envelope(double s, double x) {
  const double k = specfun::bessel_k(s, 2.0 * x);
  if (k == 0.0) return 0.0;
  return std::exp(s * std::log(x)) * k;
}

// Sum over groups of equal alpha of mult * alpha^{-2s} h(s, alpha beta, B).
// The Weyl-type density estimates the eigenvalue count beyond the cutoff.
EvalResult sum_over_spectrum(const ManifoldModel& model, double s, double beta, double B,
                             double tol, const char* method) {
  const int D = model.dim();
  double sum = 0.0;
  double inner_err = 0.0;
  long terms = 0;
  double done_up_to = 0.0;
  double alpha_max = std::max(8.0, 4.0 / beta);
  const double ln_density_coeff = [&] {
    if (model.finite_spectrum()) return 0.0;
    return std::log(2.0 * model.heat_coeff(0.0) / std::tgamma(0.5 * D));
  }();

  // Tail of the alpha-sum beyond a, integrated against the eigenvalue density.
  auto tail_bound = [&](double a) {
    const double env = std::exp(-2.0 * s * std::log(a)) * envelope(s, a * beta) /
                       (-std::expm1(-2.0 * a * beta));
    const double density = std::exp(ln_density_coeff + (D - 1) * std::log(a));
    return density * env / (2.0 * beta);
  };

  for (int round = 0; round < 64; ++round) {
    const std::vector<EigenGroup> groups = model.spectrum(alpha_max);
    for (const EigenGroup& g : groups) {
      if (g.alpha <= done_up_to) continue;
      const EvalResult inner = sum_h(s, g.alpha * beta, B, 1e-2 * tol);
      const double w = g.multiplicity * std::exp(-2.0 * s * std::log(g.alpha));
      sum += w * inner.value;
      inner_err += std::abs(w) * inner.error_estimate;
      terms += inner.terms_used;
    }
    done_up_to = alpha_max;
    if (model.finite_spectrum()) {
      const double a_n = model.alpha_limit();
      const double n = static_cast<double>(groups.size());
      // Weyl's law N ~ c alpha^D gives dN/dalpha ~ D N / alpha.
      const double env = std::exp(-2.0 * s * std::log(a_n)) * envelope(s, a_n * beta) /
                         (-std::expm1(-2.0 * a_n * beta));
      const double tail = D * n / a_n * env / (2.0 * beta);
      return EvalResult{sum, inner_err + tail, terms, method};
    }
    const double tail = tail_bound(alpha_max);
    if (tail < tol * std::max(1.0, std::abs(sum))) {
      return EvalResult{sum, inner_err + tail, terms, method};
    }
    alpha_max *= 1.5;
  }
  throw NumericalError("direct summation: eigenvalue cutoff did not converge");
}

}  // namespace

EvalResult sum_h(double s, double beta, double B, double tol) {
  check_args(beta, tol);
  const double rho_floor = std::exp(-2.0 * beta);
  double sum = 0.0;
  double prev_env = std::numeric_limits<double>::infinity();
  double ratio = 0.0;
  int below = 0;
  for (long m = 1; m < 100000000L; ++m) {
    const double env = envelope(s, m * beta);
    if (env > prev_env * (1.0 + 1e-10)) {
      throw NumericalError("sum_h: term magnitudes are not decreasing");
    }
    sum += env * specfun::cos_pi(2.0 * m * B);
    if (prev_env > 0.0 && std::isfinite(prev_env)) ratio = env / prev_env;
    const double rho = std::min(std::max(ratio, rho_floor), 1.0 - 1e-15);
    const bool small = env <= tol * std::max(1.0, std::abs(sum)) * (1.0 - rho);
    below = small ? below + 1 : 0;
    prev_env = env;
    if (below >= 3) return EvalResult{sum, env * rho / (1.0 - rho), m, "direct:h"};
  }
  throw NumericalError("sum_h: term budget exhausted");
}

EvalResult sum_h(const SeriesParams& p, double tol) { return sum_h(p.s, p.beta, p.B, tol); }

EvalResult sum_h0(double s, double beta, double tol) { return sum_h(s, beta, 0.0, tol); }

EvalResult sum_g(int d, double s, double beta, double tol) {
  check_args(beta, tol);
  if (d < 1) throw DomainError("sum_g: dimension must be positive");
  const double sphere = 2.0 * std::pow(specfun::kPi, 0.5 * d) / std::tgamma(0.5 * d);
  double radius = std::max(8.0, 10.0 / beta);
  for (int round = 0; round < 32; ++round) {
    const long k_max = static_cast<long>(radius * radius);
    const std::vector<double> r = lattice_counts(d, k_max);
    double sum = 0.0;
    long terms = 0;
    for (long k = k_max; k >= 1; --k) {
      if (r[k] == 0.0) continue;
      const double n = std::sqrt(static_cast<double>(k));
      sum += r[k] * std::exp(-2.0 * s * std::log(n)) * envelope(s, n * beta);
      ++terms;
    }
    // Remaining shells, integrated against the lattice-point density. The
    // integrand behaves like r^a exp(-2 beta r); the factor 2 covers the
    // shell-count fluctuations about the continuum density.
    const double a = std::max(0.0, d - 1.5 - s);
    const double rate = 2.0 * beta - a / radius;
    if (rate <= beta) {
      radius *= 1.5;
      continue;
    }
    const double tail = 2.0 * sphere * std::exp((d - 1 - 2.0 * s) * std::log(radius)) *
                        envelope(s, radius * beta) / rate;
    if (tail < tol * std::max(1.0, std::abs(sum))) return EvalResult{sum, tail, terms, "direct:g"};
    radius *= 1.5;
  }
  throw NumericalError("sum_g: shell cutoff did not converge");
}

EvalResult sum_f(const ManifoldModel& model, double s, double beta, double B, double tol) {
  check_args(beta, tol);
  return sum_over_spectrum(model, s, beta, B, tol, "direct:f");
}

}  // namespace besselsum
