#include <cmath>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum::specfun {

namespace {

// theta_d(t) - 1 for theta_d(t) = sum over Z^d of exp(-pi t |n|^2), t >= 1.
double theta_minus_one(int d, double t) {
  double s = 0.0;
  for (int n = 1; n < 64; ++n) {
    const double term = std::exp(-kPi * t * n * n);
    s += term;
    if (term < 1e-18 * s) break;
  }
  return std::expm1(d * std::log1p(2.0 * s));
}

}  // namespace

EpsteinContext::EpsteinContext(int d) : d_(d) {
  if (d < 1) throw DomainError("EpsteinContext: dimension must be positive");
  // exp-sinh nodes for int_0^inf dy, y = t - 1.
  constexpr double h = 1.0 / 32.0;
  constexpr double x_max = 4.0;
  const int k_max = static_cast<int>(x_max / h);
  for (int k = -k_max; k <= k_max; ++k) {
    const double x = k * h;
    const double y = std::exp(0.5 * kPi * std::sinh(x));
    const double dy = y * 0.5 * kPi * std::cosh(x) * h;
    const double f = theta_minus_one(d, 1.0 + y);
    if (f == 0.0) continue;
    nodes_.push_back(y);
    weights_.push_back(dy * f);
  }
}

double EpsteinContext::incomplete(double v) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    sum += weights_[i] * std::exp((v - 1.0) * std::log1p(nodes_[i]));
  }
  return sum;
}

double EpsteinContext::incomplete_deriv(double v) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double lt = std::log1p(nodes_[i]);
    sum += weights_[i] * lt * std::exp((v - 1.0) * lt);
  }
  return sum;
}

// I(u) + I(d/2 - u) + 1/(u - d/2)
double EpsteinContext::regular_part(double u) const {
  const double half_d = 0.5 * d_;
  return incomplete(u) + incomplete(half_d - u) + 1.0 / (u - half_d);
}

double EpsteinContext::regular_part_deriv(double u) const {
  const double half_d = 0.5 * d_;
  const double w = u - half_d;
  return incomplete_deriv(u) - incomplete_deriv(half_d - u) - 1.0 / (w * w);
}

double EpsteinContext::zeta(double u) const {
  if (u == 0.5 * d_) throw PoleError("epstein_zeta: pole at u = d/2");
  if (u == 0.0) return -1.0;
  if (is_nonpositive_integer(u)) return 0.0;
  return std::pow(kPi, u) * (rgamma(u) * regular_part(u) - rgamma(u + 1.0));
}

double EpsteinContext::zeta_deriv(double u) const {
  if (u == 0.5 * d_) throw PoleError("epstein_zeta_deriv: pole at u = d/2");
  const double r0 = regular_part(u);
  const double bracket = rgamma(u) * r0 - rgamma(u + 1.0);
  const double dbracket =
      rgamma_deriv(u) * r0 + rgamma(u) * regular_part_deriv(u) - rgamma_deriv(u + 1.0);
  return std::pow(kPi, u) * (std::log(kPi) * bracket + dbracket);
}

PolePoint EpsteinContext::residue_and_finite_part() const {
  const double u = 0.5 * d_;
  const double p = std::pow(kPi, u) * rgamma(u);
  const double dp = std::pow(kPi, u) * (std::log(kPi) * rgamma(u) + rgamma_deriv(u));
  const double r = incomplete(u) + incomplete(0.0) - 1.0 / u;
  return PolePoint{u, p, p * r + dp};
}

double epstein_zeta(const EpsteinContext& ctx, double u) { return ctx.zeta(u); }
PolePoint epstein_res_fp(const EpsteinContext& ctx) { return ctx.residue_and_finite_part(); }
double epstein_zeta_deriv(const EpsteinContext& ctx, double u) { return ctx.zeta_deriv(u); }

}  // namespace besselsum::specfun
