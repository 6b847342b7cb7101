#include "besselsum/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "besselsum/asymptotics.hpp"
#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum::closed_forms {

namespace {

using specfun::digamma;
using specfun::harmonic;
using specfun::kEulerGamma;
using specfun::kLn2;
using specfun::kPi;
using specfun::odd_harmonic;

const double kSqrtPi = std::sqrt(kPi);

double Gam(double x) { return specfun::gamma(x); }
double fact(int n) { return std::tgamma(n + 1.0); }
double sgn(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }
bool theta(int n) { return n >= 0; }  // step function, Theta(0) = 1

class Builder {
 public:
  explicit Builder(double order) : order_(order) {}
  bool within(double p) const { return p <= order_ + 1e-9; }
  void add(double p, double c, double log_c = 0.0) {
    if (within(p)) raw_.push_back({p, c, log_c});
  }
  Expansion finish(std::string family, double s, std::string tag) const {
    Expansion e;
    e.family = std::move(family);
    e.s = s;
    e.case_tag = std::move(tag);
    e.terms = merge_terms(raw_);
    e.max_power = order_;
    e.remainder_power = std::numeric_limits<double>::quiet_NaN();
    return e;
  }

 private:
  double order_;
  std::vector<ExpansionTerm> raw_;
};

// Model quantities: A_j, zeta_M, its derivative and finite part.
struct Model {
  const ManifoldModel& m;
  double A(double j) const { return j < 0.0 ? 0.0 : m.heat_coeff(j); }
  double zeta(double u) const { return m.zeta(u); }
  double zeta_d(double u) const { return m.zeta_deriv(u); }
  double fp(double u) const {
    for (const auto& p : m.zeta_poles()) {
      if (std::abs(p.location - u) < 1e-9) return p.finite_part;
    }
    return m.zeta(u);
  }
};

int as_int(double v) { return static_cast<int>(std::lround(v)); }

// ---------------------------------------------------------------- f, B != 0

Expansion f_generic_impl(const Model& M, double s, double x, double order) {
  Builder b(order);
  const int D = M.m.dim();
  auto C = [x](double nu) { return specfun::polylog_pair(nu, x); };
  for (int l = -D; b.within(2 * s + l); ++l) {
    const double a = M.A(0.5 * (D + l));
    if (a != 0.0) b.add(2 * s + l, 0.25 * Gam(-s - 0.5 * l) * a * C(-2 * s - l));
  }
  b.add(0.0, -0.25 * Gam(s) * M.zeta(s));
  return b.finish("f", s, "generic");
}

Expansion f_special(const Model& M, double s, double x, double order, const std::string& tag) {
  Builder b(order);
  const int D = M.m.dim();
  auto C = [x](double nu) { return specfun::polylog_pair(nu, x); };
  auto Cd = [x](double nu) { return specfun::polylog_pair_deriv(nu, x); };
  const double g = kEulerGamma;

  if (tag == "pos_int_evenD" || tag == "pos_int_oddD") {
    const int n = as_int(s);
    const int d = D / 2;
    const double sh = (D % 2 == 0) ? 0.0 : 0.5;  // A index shift for odd D
    if (theta(d - n)) {
      const double a = M.A(d - n + sh);
      b.add(0.0, 0.25 * (-fact(n - 1) * M.fp(n) + a * (g - digamma(n))), 0.25 * 2.0 * a);
    }
    if (theta(d - n - 1)) {
      for (int j = 0; j <= d - n - 1; ++j) {
        b.add(2 * n - 2 * d + 2 * j, 0.25 * Gam(-n + d - j) * M.A(j + sh) * C(-2 * n + 2 * d - 2 * j));
      }
    }
    const int m0 = (D % 2 == 0) ? -d : -d - 1;
    for (int m = m0; b.within(2 * n + 1 + 2 * m); ++m) {
      const double a = M.A(d + m + 0.5 + sh);
      if (a != 0.0) b.add(2 * n + 1 + 2 * m, 0.25 * Gam(-n - 0.5 * (2 * m + 1)) * a * C(-2 * n - 2 * m - 1));
    }
    for (int j = std::max(d - n, 0); j <= d - 1; ++j) {
      const int k = n - d + j;
      b.add(2 * n - 2 * d + 2 * j, 0.5 * sgn(k) / fact(k) * M.A(j + sh) * Cd(-2 * n + 2 * d - 2 * j));
    }
    for (int m = n; b.within(2 * m); ++m) {
      b.add(2 * m, 0.5 * sgn(m) / fact(m) * M.A(d + m - n + sh) * Cd(-2 * m));
    }
    if (theta(n - d - 1)) b.add(0.0, -0.25 * fact(n - 1) * M.zeta(n));
  } else if (tag == "neg_int") {
    const int n = as_int(-s);
    const double a = M.A(0.5 * D + n);
    b.add(0.0, 0.25 * a * (g - digamma(1 + n)) - 0.25 * sgn(n) / fact(n) * M.zeta_d(-n),
          0.25 * 2.0 * a);
    for (int k = 0; k <= D - 1; ++k) {
      b.add(-2 * n - D + k, 0.25 * Gam(n + 0.5 * (D - k)) * M.A(0.5 * k) * C(2 * n + D - k));
    }
    for (int m = 0; b.within(-2 * n + 1 + 2 * m); ++m) {
      const double a2 = M.A(0.5 * (D + 2 * m + 1));
      if (a2 != 0.0) b.add(-2 * n + 1 + 2 * m, 0.25 * Gam(n - 0.5 * (2 * m + 1)) * a2 * C(2 * n - 2 * m - 1));
    }
    for (int m = 0; b.within(2 * m); ++m) {
      b.add(2 * m, 0.5 * sgn(m) / fact(m) * M.A(0.5 * D + m + n) * Cd(-2 * m));
    }
    for (int m = 1; m <= n; ++m) {
      b.add(-2 * m, 0.25 * fact(m - 1) * M.A(0.5 * D + n - m) * C(2 * m));
    }
  } else if (tag == "pos_half_evenD") {
    const int n = as_int(s - 0.5);
    const int d = D / 2;
    if (theta(d - n - 1)) {
      const double a = M.A(d - n - 0.5);
      b.add(0.0, 0.25 * (-Gam(n + 0.5) * M.fp(n + 0.5) + a * (g - digamma(n + 0.5))), 0.25 * 2.0 * a);
    }
    if (theta(d - n - 2)) {
      for (int j = 0; j <= d - n - 2; ++j) {
        b.add(2 * n - 2 * d + 2 + 2 * j,
              0.25 * Gam(-n + d - j - 1) * M.A(j + 0.5) * C(-2 * n + 2 * d - 2 * j - 2));
      }
    }
    for (int m = -d; b.within(2 * n + 1 + 2 * m); ++m) {
      const double a = M.A(d + m);
      if (a != 0.0) b.add(2 * n + 1 + 2 * m, 0.25 * Gam(-n - 0.5 * (2 * m + 1)) * a * C(-2 * n - 2 * m - 1));
    }
    for (int j = std::max(d - n - 1, 0); j <= d - 1; ++j) {
      const int k = n - d + j + 1;
      b.add(2 * n - 2 * d + 2 + 2 * j, 0.5 * sgn(k) / fact(k) * M.A(j + 0.5) * Cd(-2 * n + 2 * d - 2 * j - 2));
    }
    for (int m = n + 1; b.within(2 * m); ++m) {
      b.add(2 * m, 0.5 * sgn(m) / fact(m) * M.A(d + m - n - 0.5) * Cd(-2 * m));
    }
    if (theta(n - d)) b.add(0.0, -0.25 * Gam(n + 0.5) * M.zeta(n + 0.5));
  } else if (tag == "pos_half_oddD") {
    const int n = as_int(s - 0.5);
    const int d = D / 2;
    if (theta(d - n)) {
      const double a = M.A(d - n);
      b.add(0.0, 0.25 * (-Gam(n + 0.5) * M.fp(n + 0.5) + a * (g - digamma(n + 0.5))), 0.25 * 2.0 * a);
    }
    if (theta(d - n - 1)) {
      for (int j = 0; j <= d - n - 1; ++j) {
        b.add(2 * n - 2 * d + 2 * j, 0.25 * Gam(-n + d - j) * M.A(j) * C(-2 * n + 2 * d - 2 * j));
      }
    }
    for (int m = -d; b.within(2 * n + 1 + 2 * m); ++m) {
      const double a = M.A(d + m + 0.5);
      if (a != 0.0) b.add(2 * n + 1 + 2 * m, 0.25 * Gam(-n - 0.5 * (2 * m + 1)) * a * C(-2 * n - 2 * m - 1));
    }
    for (int j = std::max(d - n, 0); j <= d; ++j) {
      const int k = n - d + j;
      b.add(2 * n - 2 * d + 2 * j, 0.5 * sgn(k) / fact(k) * M.A(j) * Cd(-2 * n + 2 * d - 2 * j));
    }
    for (int m = n + 1; b.within(2 * m); ++m) {
      b.add(2 * m, 0.5 * sgn(m) / fact(m) * M.A(d + m - n) * Cd(-2 * m));
    }
    if (theta(n - d - 1)) b.add(0.0, -0.25 * Gam(n + 0.5) * M.zeta(n + 0.5));
  } else if (tag == "neg_half") {
    const int n = as_int(-s - 0.5);
    const double a = M.A(0.5 * (D + 2 * n + 1));
    const double sh = -(2 * n + 1) / 2.0;
    b.add(0.0, -0.25 * a * (digamma(sh) - g) - 0.25 * Gam(sh) * M.fp(sh), -0.25 * a * (-2.0));
    for (int k = 0; k <= D - 1; ++k) {
      b.add(-2 * n - D - 1 + k, 0.25 * Gam(n + 0.5 * (D - k + 1)) * M.A(0.5 * k) * C(2 * n + D - k + 1));
    }
    for (int m = 0; b.within(-2 * n - 1 + 2 * m); ++m) {
      const double a2 = M.A(0.5 * D + m);
      if (a2 != 0.0) b.add(-2 * n - 1 + 2 * m, 0.25 * Gam(n - m + 0.5) * a2 * C(2 * n - 2 * m + 1));
    }
    for (int m = 0; b.within(2 * m); ++m) {
      b.add(2 * m, 0.5 * sgn(m) / fact(m) * M.A(0.5 * (D + 1) + m + n) * Cd(-2 * m));
    }
    for (int m = 1; m <= n; ++m) {
      b.add(-2 * m, 0.25 * fact(m - 1) * M.A(0.5 * (D + 1) + n - m) * C(2 * m));
    }
  } else {
    throw ConfigError("closed_forms: unknown f branch " + tag);
  }
  return b.finish("f", s, tag);
}

// ---------------------------------------------------------------- f0, B = 0

Expansion f0_generic_impl(const Model& M, double s, double order) {
  Builder b(order);
  const int D = M.m.dim();
  for (int l = -D; b.within(2 * s + l); ++l) {
    const double a = M.A(0.5 * (D + l));
    if (a != 0.0) b.add(2 * s + l, 0.5 * Gam(-s - 0.5 * l) * a * specfun::riemann_zeta(-2 * s - l));
  }
  b.add(0.0, -0.25 * Gam(s) * M.zeta(s));
  b.add(-1.0, 0.25 * kSqrtPi * Gam(s + 0.5) * M.zeta(s + 0.5));
  return b.finish("f0", s, "generic");
}

Expansion f0_special(const Model& M, double s, double order, const std::string& tag) {
  Builder b(order);
  const int D = M.m.dim();
  auto Z = [](double u) { return specfun::riemann_zeta(u); };
  auto Zd = [](double u) { return specfun::riemann_zeta_deriv(u); };
  const double g = kEulerGamma;
  const double ln4 = 2.0 * kLn2;

  if (tag == "pos_int_evenD") {
    const int n = as_int(s);
    const int d = D / 2;
    if (theta(d - n)) {
      const double a = M.A(d - n);
      b.add(0.0, 0.25 * (-fact(n - 1) * M.fp(n) + a * (g - digamma(n))), 0.5 * a);
    }
    if (theta(d - n - 1)) {
      for (int j = 0; j <= d - n - 1; ++j) {
        b.add(2 * n - 2 * d + 2 * j, 0.5 * Gam(-n + d - j) * M.A(j) * Z(-2 * n + 2 * d - 2 * j));
      }
      b.add(-1.0, 0.25 * kSqrtPi * Gam(n + 0.5) * M.fp(n + 0.5));
      const double a = M.A(d - n - 0.5);
      b.add(-1.0, -0.5 * kSqrtPi * a * (ln4 - odd_harmonic(n)), -0.5 * kSqrtPi * a);
    }
    for (int m = -d; b.within(2 * n + 1 + 2 * m); ++m) {
      if (m == -n - 1) continue;
      const double a = M.A(d + m + 0.5);
      if (a != 0.0) b.add(2 * n + 1 + 2 * m, 0.5 * Gam(-n - 0.5 * (2 * m + 1)) * a * Z(-2 * n - 2 * m - 1));
    }
    for (int j = std::max(d - n, 0); j <= d - 1; ++j) {
      const int k = n - d + j;
      b.add(2 * n - 2 * d + 2 * j, sgn(k) / fact(k) * M.A(j) * Zd(-2 * n + 2 * d - 2 * j));
    }
    for (int m = n; b.within(2 * m); ++m) {
      b.add(2 * m, sgn(m) / fact(m) * M.A(d + m - n) * Zd(-2 * m));
    }
    if (theta(n - d - 1)) b.add(0.0, -0.25 * fact(n - 1) * M.zeta(n));
    if (theta(n - d)) b.add(-1.0, 0.25 * kSqrtPi * Gam(n + 0.5) * M.zeta(n + 0.5));
  } else if (tag == "pos_int_oddD") {
    const int n = as_int(s);
    const int d = D / 2;
    if (theta(d - n)) {
      const double a = M.A(d - n + 0.5);
      b.add(0.0, 0.25 * (-fact(n - 1) * M.fp(n) + a * (g - digamma(n))), 0.25 * 2.0 * a);
      b.add(-1.0, 0.25 * kSqrtPi * Gam(n + 0.5) * M.fp(n + 0.5));
      const double a2 = M.A(d - n);
      b.add(-1.0, -0.25 * 2.0 * kSqrtPi * a2 * (ln4 - odd_harmonic(n)), -0.25 * 2.0 * kSqrtPi * a2);
    }
    if (theta(d - n - 1)) {
      for (int p = 0; p <= d - n - 1; ++p) {
        b.add(2 * n - 2 * d + 2 * p, 0.5 * Gam(-n + d - p) * M.A(p + 0.5) * Z(-2 * n + 2 * d - 2 * p));
      }
    }
    for (int m = -d - 1; b.within(2 * n + 1 + 2 * m); ++m) {
      if (m == -n - 1) continue;
      const double a = M.A(d + m + 1);
      if (a != 0.0) b.add(2 * n + 1 + 2 * m, 0.5 * Gam(-n - 0.5 * (2 * m + 1)) * a * Z(-2 * n - 2 * m - 1));
    }
    for (int p = std::max(d - n, 0); p <= d - 1; ++p) {
      const int k = n - d + p;
      b.add(2 * n - 2 * d + 2 * p, sgn(k) / fact(k) * M.A(p + 0.5) * Zd(-2 * n + 2 * d - 2 * p));
    }
    for (int m = n; b.within(2 * m); ++m) {
      b.add(2 * m, sgn(m) / fact(m) * M.A(d + m - n + 0.5) * Zd(-2 * m));
    }
    if (theta(n - d - 1)) {
      b.add(0.0, -0.25 * fact(n - 1) * M.zeta(n));
      b.add(-1.0, 0.25 * kSqrtPi * Gam(n + 0.5) * M.zeta(n + 0.5));
    }
  } else if (tag == "neg_int") {
    const int n = as_int(-s);
    const double a = M.A(0.5 * D + n);
    b.add(0.0, 0.25 * a * (g - digamma(1 + n)) - 0.25 * sgn(n) / fact(n) * M.zeta_d(-n), 0.5 * a);
    for (int k = 0; k <= D - 2; ++k) {
      b.add(-2 * n - D + k, 0.5 * Gam(n + 0.5 * (D - k)) * M.A(0.5 * k) * Z(2 * n + D - k));
    }
    // Printed with a stray beta^k; read as the k = D - 1 member of the sum.
    if (theta(n - 1)) b.add(-2 * n - 1, 0.5 * Gam(n + 0.5) * M.A(0.5 * (D - 1)) * Z(2 * n + 1));
    for (int m = 0; b.within(-2 * n + 1 + 2 * m); ++m) {
      if (m == n - 1) continue;
      const double a2 = M.A(0.5 * (D + 2 * m + 1));
      if (a2 != 0.0) b.add(-2 * n + 1 + 2 * m, 0.5 * Gam(n - 0.5 * (2 * m + 1)) * a2 * Z(2 * n - 2 * m - 1));
    }
    for (int m = 0; b.within(2 * m); ++m) {
      b.add(2 * m, sgn(m) / fact(m) * M.A(0.5 * D + m + n) * Zd(-2 * m));
    }
    for (int m = 1; m <= n; ++m) {
      b.add(-2 * m, 0.5 * fact(m - 1) * M.A(0.5 * D + n - m) * Z(2 * m));
    }
    b.add(-1.0, 0.25 * kSqrtPi * Gam(0.5 - n) * M.fp(0.5 - n));
    const double a3 = M.A(0.5 * (D + 2 * n - 1));
    b.add(-1.0, -0.5 * kSqrtPi * a3 * (ln4 - odd_harmonic(n)), -0.5 * kSqrtPi * a3);
  } else if (tag == "pos_half_evenD") {
    const int n = as_int(s - 0.5);
    const int d = D / 2;
    if (theta(d - n - 1)) {
      const double a = M.A(d - n - 0.5);
      b.add(0.0, 0.25 * (-Gam(n + 0.5) * M.fp(n + 0.5) + a * (g - digamma(n + 0.5))), 0.25 * 2.0 * a);
      b.add(-1.0, 0.25 * kSqrtPi * fact(n) * M.fp(n + 1));
      // ln 2 beta - 2 H_n, as printed
      const double a2 = M.A(d - n - 1);
      b.add(-1.0, -0.25 * 2.0 * kSqrtPi * a2 * (kLn2 - 2.0 * harmonic(n)), -0.25 * 2.0 * kSqrtPi * a2);
    }
    if (theta(d - n - 2)) {
      for (int j = 0; j <= d - n - 2; ++j) {
        b.add(2 * n - 2 * d + 2 + 2 * j,
              0.5 * Gam(-n + d - j - 1) * M.A(j + 0.5) * Z(-2 * n + 2 * d - 2 * j - 2));
      }
    }
    for (int m = -d; b.within(2 * n + 1 + 2 * m); ++m) {
      if (m == -n - 1) continue;
      const double a = M.A(d + m);
      if (a != 0.0) b.add(2 * n + 1 + 2 * m, 0.5 * Gam(-n - 0.5 * (2 * m + 1)) * a * Z(-2 * n - 2 * m - 1));
    }
    for (int j = std::max(d - n - 1, 0); j <= d - 1; ++j) {
      const int k = n - d + j + 1;
      b.add(2 * n - 2 * d + 2 + 2 * j, sgn(k) / fact(k) * M.A(j + 0.5) * Zd(-2 * n + 2 * d - 2 * j - 2));
    }
    for (int m = n + 1; b.within(2 * m); ++m) {
      b.add(2 * m, sgn(m) / fact(m) * M.A(d + m - n - 0.5) * Zd(-2 * m));
    }
    if (theta(n - d)) {
      b.add(0.0, -0.25 * Gam(n + 0.5) * M.zeta(n + 0.5));
      b.add(-1.0, 0.25 * kSqrtPi * fact(n) * M.zeta(n + 1));
    }
  } else if (tag == "pos_half_oddD") {
    const int n = as_int(s - 0.5);
    const int d = D / 2;
    if (theta(d - n)) {
      const double a = M.A(d - n);
      b.add(0.0, 0.25 * (-Gam(n + 0.5) * M.fp(n + 0.5) + a * (g - digamma(n + 0.5))), 0.25 * 2.0 * a);
    }
    if (theta(d - n - 1)) {
      for (int j = 0; j <= d - n - 1; ++j) {
        b.add(2 * n - 2 * d + 2 * j, 0.5 * Gam(-n + d - j) * M.A(j) * Z(-2 * n + 2 * d - 2 * j));
      }
      b.add(-1.0, 0.25 * kSqrtPi * fact(n) * M.fp(n + 1));
      const double a2 = M.A(d - n - 0.5);
      b.add(-1.0, -0.5 * kSqrtPi * a2 * (kLn2 - 2.0 * harmonic(n)), -0.5 * kSqrtPi * a2);
    }
    for (int m = -d; b.within(2 * n + 1 + 2 * m); ++m) {
      if (m == -n - 1) continue;
      const double a = M.A(d + m + 0.5);
      if (a != 0.0) b.add(2 * n + 1 + 2 * m, 0.5 * Gam(-n - 0.5 * (2 * m + 1)) * a * Z(-2 * n - 2 * m - 1));
    }
    for (int j = std::max(d - n, 0); j <= d; ++j) {
      const int k = n - d + j;
      b.add(2 * n - 2 * d + 2 * j, sgn(k) / fact(k) * M.A(j) * Zd(-2 * n + 2 * d - 2 * j));
    }
    for (int m = n + 1; b.within(2 * m); ++m) {
      b.add(2 * m, sgn(m) / fact(m) * M.A(d + m - n) * Zd(-2 * m));
    }
    if (theta(n - d - 1)) b.add(0.0, -0.25 * Gam(n + 0.5) * M.zeta(n + 0.5));
    if (theta(n - d)) b.add(-1.0, 0.25 * kSqrtPi * fact(n) * M.zeta(n + 1));
  } else if (tag == "neg_half") {
    const int n = as_int(-s - 0.5);
    const double sh = -(2 * n + 1) / 2.0;
    const double a = M.A(0.5 * (D + 2 * n + 1));
    b.add(0.0, -0.25 * a * (digamma(sh) - g) - 0.25 * Gam(sh) * M.fp(sh), 0.5 * a);
    for (int k = 0; k <= D - 1; ++k) {
      b.add(-2 * n - D - 1 + k, 0.5 * Gam(n + 0.5 * (D - k + 1)) * M.A(0.5 * k) * Z(2 * n + D - k + 1));
    }
    for (int m = 0; b.within(-2 * n - 1 + 2 * m); ++m) {
      if (m == n) continue;
      const double a2 = M.A(0.5 * D + m);
      if (a2 != 0.0) b.add(-2 * n - 1 + 2 * m, 0.5 * Gam(n - m + 0.5) * a2 * Z(2 * n - 2 * m + 1));
    }
    for (int m = 0; b.within(2 * m); ++m) {
      b.add(2 * m, sgn(m) / fact(m) * M.A(0.5 * (D + 1) + m + n) * Zd(-2 * m));
    }
    for (int m = 1; m <= n; ++m) {
      b.add(-2 * m, 0.5 * fact(m - 1) * M.A(0.5 * (D + 1) + n - m) * Z(2 * m));
    }
    b.add(-1.0, 0.25 * kSqrtPi * sgn(n) / fact(n) * M.zeta_d(-n));
    const double a3 = M.A(0.5 * D + n);
    b.add(-1.0, 0.25 * kSqrtPi * a3 * (-2.0 * kLn2 + harmonic(n)), 0.25 * kSqrtPi * a3 * (-2.0));
  } else {
    throw ConfigError("closed_forms: unknown f0 branch " + tag);
  }
  return b.finish("f0", s, tag);
}

}  // namespace

// ---------------------------------------------------------------- h

Expansion h_generic(double s, double x, double order) {
  Builder b(order);
  for (int n = 0; b.within(2 * s + 2 * n); ++n) {
    b.add(2 * s + 2 * n, 0.25 * sgn(n) / fact(n) * Gam(-s - n) * specfun::polylog_pair(-2 * s - 2 * n, x));
  }
  b.add(0.0, -0.25 * Gam(s));
  Expansion e = b.finish("h", s, "generic");
  e.x = x;
  return e;
}

Expansion h(double s, double x, double order) {
  const std::string tag = dispatch_case("h", s);
  if (tag == "generic") return h_generic(s, x, order);
  Builder b(order);
  auto Cd = [x](double nu) { return specfun::polylog_pair_deriv(nu, x); };
  if (tag == "pos_int") {
    const int n = as_int(s);
    for (int j = n; b.within(2 * j); ++j) {
      b.add(2 * j, 0.5 * sgn(n) / (fact(j) * fact(j - n)) * Cd(-2 * j));
    }
    b.add(0.0, -0.25 * fact(n - 1));
  } else {
    const int n = as_int(-s);
    const double c = 0.5 * sgn(n) / fact(n);
    b.add(0.0, c * (kEulerGamma - 2.0 * harmonic(n)), c);
    for (int j = 0; b.within(2 * j); ++j) {
      b.add(2 * j, 0.5 * sgn(n) / (fact(j) * fact(j + n)) * Cd(-2 * j));
    }
    for (int j = 1; j <= n; ++j) {
      b.add(-2 * j, 0.25 * sgn(n - j) * fact(j - 1) / fact(n - j) * specfun::polylog_pair(2 * j, x));
    }
  }
  Expansion e = b.finish("h", s, tag);
  e.x = x;
  return e;
}

// ---------------------------------------------------------------- h0

Expansion h0_generic(double s, double order) {
  Builder b(order);
  for (int n = 0; b.within(2 * s + 2 * n); ++n) {
    b.add(2 * s + 2 * n, 0.5 * sgn(n) / fact(n) * Gam(-s - n) * specfun::riemann_zeta(-2 * s - 2 * n));
  }
  b.add(0.0, -0.25 * Gam(s));
  b.add(-1.0, 0.25 * kSqrtPi * Gam(s + 0.5));
  return b.finish("h0", s, "generic");
}

Expansion h0(double s, double order) {
  const std::string tag = dispatch_case("h0", s);
  if (tag == "generic") return h0_generic(s, order);
  Builder b(order);
  auto Z = [](double u) { return specfun::riemann_zeta(u); };
  auto Zd = [](double u) { return specfun::riemann_zeta_deriv(u); };
  if (tag == "pos_int") {
    const int n = as_int(s);
    for (int j = n; b.within(2 * j); ++j) b.add(2 * j, sgn(n) / (fact(j) * fact(j - n)) * Zd(-2 * j));
    b.add(0.0, -0.25 * Gam(n));
    b.add(-1.0, 0.25 * kSqrtPi * Gam(n + 0.5));
  } else if (tag == "neg_int") {
    const int m = as_int(-s);
    const double c = 0.5 * sgn(m) / fact(m);
    b.add(0.0, c * (kEulerGamma - 2.0 * harmonic(m)), c);
    for (int j = 0; b.within(2 * j); ++j) b.add(2 * j, sgn(m) / (fact(j) * fact(j + m)) * Zd(-2 * j));
    b.add(-1.0, 0.25 * kSqrtPi * Gam(0.5 - m));
    for (int j = 1; j <= m; ++j) {
      b.add(-2 * j, 0.5 * sgn(m - j) * fact(j - 1) / fact(m - j) * Z(2 * j));
    }
  } else {  // neg_half
    const int n = as_int(-s - 0.5);
    for (int m = 0; b.within(-2 * n - 1 + 2 * m); ++m) {
      if (m == n) continue;
      b.add(-2 * n - 1 + 2 * m, 0.5 * sgn(m) / fact(m) * Gam(-m + n + 0.5) * Z(-2 * m + 2 * n + 1));
    }
    b.add(0.0, -0.25 * Gam(0.5 - n));
    const double c = -0.25 * kSqrtPi * sgn(n) / fact(n);
    b.add(-1.0, c * (2.0 * kLn2 - harmonic(n)), c * 2.0);
  }
  return b.finish("h0", s, tag);
}

// ---------------------------------------------------------------- g

Expansion g_generic(int d, double s, double order) {
  const specfun::EpsteinContext ctx(d);
  Builder b(order);
  for (int n = 0; b.within(2 * n); ++n) {
    b.add(2 * n, 0.5 * sgn(n) / fact(n) * Gam(s - n) * ctx.zeta(s - n));
  }
  b.add(2 * s, -0.5 * Gam(-s));
  b.add(2 * s - d, 0.5 * std::pow(kPi, 0.5 * d) * Gam(0.5 * d - s));
  Expansion e = b.finish("g", s, "generic");
  e.d = d;
  return e;
}

Expansion g(int d, double s, double order) {
  const std::string tag = dispatch_case("g", s, d);
  if (tag == "generic") return g_generic(d, s, order);
  const specfun::EpsteinContext ctx(d);
  Builder b(order);
  const specfun::PolePoint pole = ctx.residue_and_finite_part();
  const int l = d / 2;
  const double g0 = kEulerGamma;
  if (tag == "pos_int_evenD" || tag == "pos_int_oddD") {
    const int n = as_int(s);
    const bool even = (d % 2 == 0);
    for (int j = 0; j <= n - 1; ++j) {
      if (even && j == n - l) continue;
      b.add(2 * j, 0.5 * sgn(j) / fact(j) * Gam(n - j) * ctx.zeta(n - j));
    }
    for (int j = n; b.within(2 * j); ++j) {
      b.add(2 * j, 0.5 * sgn(n) / (fact(j) * fact(j - n)) * ctx.zeta_deriv(n - j));
    }
    // printed without the factor 1/2 carried by the neighbouring sums
    const double c = sgn(n) / fact(n);
    b.add(2 * n, c * (g0 - 2.0 * harmonic(n)), c);
    if (even) {
      if (theta(l - n - 1)) b.add(2 * n - 2 * l, 0.5 * std::pow(kPi, l) * Gam(l - n));
      if (theta(n - l)) {
        const double c2 = sgn(n - l) * std::pow(kPi, l) / (2.0 * fact(n - l));
        b.add(2 * n - 2 * l,
              c2 * (std::pow(kPi, -l) * fact(l - 1) * pole.finite_part + digamma(n - l + 1) + digamma(l)),
              c2 * (-2.0));
      }
    } else {
      b.add(2 * n - 2 * l - 1, 0.5 * std::pow(kPi, l + 0.5) * Gam(l - n + 0.5));
    }
  } else if (tag == "neg_int_evenD" || tag == "neg_int_oddD") {
    const int n = as_int(-s);
    b.add(-2 * n, -0.5 * fact(n - 1));
    if (d % 2 == 0) {
      b.add(-2 * l - 2 * n, 0.5 * std::pow(kPi, l) * Gam(n + l));
    } else {
      b.add(-2 * l - 2 * n - 1, 0.5 * std::pow(kPi, l + 0.5) * Gam(n + l + 0.5));
    }
    for (int j = 0; b.within(2 * j); ++j) {
      b.add(2 * j, 0.5 * sgn(n) / (fact(j) * fact(n + j)) * ctx.zeta_deriv(-j - n));
    }
  } else if (tag == "pos_half_oddD") {
    const int n = as_int(s - 0.5);
    for (int j = 0; b.within(2 * j); ++j) {
      if (j == n - l) continue;
      b.add(2 * j, 0.5 * sgn(j) / fact(j) * Gam(n - j + 0.5) * ctx.zeta(n - j + 0.5));
    }
    b.add(2 * n + 1, -0.5 * Gam(-n - 0.5));
    if (theta(n - l)) {
      const double c = sgn(n - l) * std::pow(kPi, l + 0.5) / (2.0 * fact(n - l));
      b.add(2 * n - 2 * l,
            c * (std::pow(kPi, -l - 0.5) * Gam(l + 0.5) * pole.finite_part + digamma(n - l + 1) +
                 digamma(l + 0.5)),
            c * (-2.0));
    }
    if (theta(l - n - 1)) b.add(2 * n - 2 * l, 0.5 * std::pow(kPi, l + 0.5) * Gam(l - n));
  } else {
    throw ConfigError("closed_forms: unknown g branch " + tag);
  }
  Expansion e = b.finish("g", s, tag);
  e.d = d;
  return e;
}

// ---------------------------------------------------------------- f, f0

Expansion f_generic(const ManifoldModel& model, double s, double x, double order) {
  Expansion e = f_generic_impl(Model{model}, s, x, order);
  e.x = x;
  e.model = model.name();
  e.d = model.dim();
  return e;
}

Expansion f(const ManifoldModel& model, double s, double x, double order) {
  const std::string tag = dispatch_case("f", s, model.dim());
  if (tag == "generic") return f_generic(model, s, x, order);
  Expansion e = f_special(Model{model}, s, x, order, tag);
  e.x = x;
  e.model = model.name();
  e.d = model.dim();
  return e;
}

Expansion f0_generic(const ManifoldModel& model, double s, double order) {
  Expansion e = f0_generic_impl(Model{model}, s, order);
  e.model = model.name();
  e.d = model.dim();
  return e;
}

Expansion f0(const ManifoldModel& model, double s, double order) {
  const std::string tag = dispatch_case("f0", s, model.dim());
  if (tag == "generic") return f0_generic(model, s, order);
  Expansion e = f0_special(Model{model}, s, order, tag);
  e.model = model.name();
  e.d = model.dim();
  return e;
}

}  // namespace besselsum::closed_forms
