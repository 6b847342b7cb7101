// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "besselsum/applications.hpp"
#include "besselsum/asymptotics.hpp"
#include "besselsum/closed_forms.hpp"
#include "besselsum/compare.hpp"
#include "besselsum/direct_eval.hpp"
#include "besselsum/manifolds.hpp"
#include "besselsum/mellin_oracle.hpp"
#include "besselsum/specfun.hpp"

using namespace besselsum;
namespace cf = besselsum::closed_forms;
namespace sf = besselsum::specfun;
using sf::kPi;

namespace {

// Worst observed residual relative to its allowance, plus the first failure.
class Criterion {
 public:
  explicit Criterion(int id) : id_(id), start_(std::chrono::steady_clock::now()) {}

  // Records |residual| <= allowed.
  void check(bool ok, const std::string& what, double residual = 0.0, double allowed = 0.0) {
    ++checks_;
    if (allowed > 0.0) worst_ = std::max(worst_, std::abs(residual) / allowed);
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) {
        char buf[160];
        std::snprintf(buf, sizeof buf, " (residual %.3g, allowed %.3g)", residual, allowed);
        first_failure_ = what + (allowed > 0.0 ? buf : "");
      }
    }
  }
  void within(double a, double b, double tol, const std::string& what) {
    const double r = std::abs(a - b);
    check(r <= tol, what, r, tol);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report() const {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::printf("criterion %2d: %s  checks=%d failed=%d worst=%.3g time=%.1fs", id_,
                failed_ == 0 ? "PASS" : "FAIL", checks_, failed_, worst_, secs);
    if (!first_failure_.empty()) std::printf("  first failure: %s", first_failure_.c_str());
    std::printf("\n");
    for (const auto& n : notes_) std::printf("              %s\n", n.c_str());
    std::fflush(stdout);
    return failed_ == 0;
  }

 private:
  int id_;
  std::chrono::steady_clock::time_point start_;
  int checks_ = 0;
  int failed_ = 0;
  double worst_ = 0.0;
  std::string first_failure_;
  std::vector<std::string> notes_;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double scale(double v) { return std::max(1.0, std::abs(v)); }

bool criterion1() {
  Criterion c(1);
  for (double b : {0.3, 0.5, 1.0}) {
    const double plus = (std::sqrt(kPi) / 2.0) / std::expm1(2.0 * b);
    const double minus = -(std::sqrt(kPi) / (2.0 * b)) * std::log1p(-std::exp(-2.0 * b));
    c.within(sum_h0(0.5, b).value, plus, 1e-10, fmt("h0(1/2, %g)", b));
    c.within(sum_h0(-0.5, b).value, minus, 1e-10, fmt("h0(-1/2, %g)", b));
  }
  return c.report();
}

bool criterion2() {
  Criterion c(2);
  const double order = 3.5;
  std::set<std::string> tags;
  auto run = [&](const SeriesSpec& spec) {
    const Expansion e = expand_series(spec, order);
    tags.insert(spec.family + ":" + e.case_tag);
    const RatioCheck r =
        ratio_check(e, [&](double b) { return eval_series(spec, b).value; }, 0.1, 0.2);
    const std::string what = spec.family + " s=" + fmt("%g", spec.s) + " d=" +
                             std::to_string(spec.d) +
                             (spec.model ? " " + spec.model->name() : std::string()) + " " +
                             e.case_tag + fmt(" ratio=%.4g expected=%.4g", r.ratio, r.expected);
    c.check(r.passed, what);
  };
  for (double s : {1.0 / 3.0, 1.0, 2.0, 0.0, -1.0}) run({"h", s, 0.3, 1, nullptr});
  for (double s : {1.0 / 3.0, 1.5, 1.0, 2.0, 0.0, -1.0, -0.5, -1.5}) run({"h0", s, 0.0, 1, nullptr});
  for (int d : {1, 2, 3}) {
    for (double s : {0.7, 0.0, 1.0, 2.0, -1.0, 0.5, 1.5, -0.5}) run({"g", s, 0.0, d, nullptr});
  }
  for (const auto& m : {circle_model(), torus_model(2), hurwitz_model(0.3)}) {
    for (double s : {1.0 / 3.0, 1.0, 2.0, 0.0, -1.0, 0.5, 1.5, -0.5, -1.5}) {
      run({"f", s, 0.3, 1, m});
      run({"f0", s, 0.0, 1, m});
    }
  }
  std::string all;
  for (const auto& t : tags) all += (all.empty() ? "" : " ") + t;
  c.note("branches: " + all);
  return c.report();
}

// Generic formula at s +- eps, symmetric average, one Richardson step.
double eps_limit(const std::function<Expansion(double)>& gen, double s, double beta) {
  auto v = [&](double e) {
    return 0.5 * (evaluate(gen(s + e), beta) + evaluate(gen(s - e), beta));
  };
  return (4.0 * v(5e-4) - v(1e-3)) / 3.0;
}

bool criterion3() {
  Criterion c(3);
  const double beta = 0.15, x = 0.3;
  auto cmp = [&](double special, double lim, const std::string& what) {
    const double tol = 1e-4 * scale(lim);
    c.check(std::abs(special - lim) <= tol, what, special - lim, tol);
  };
  for (double s : {1.0, 2.0, 0.0, -1.0, -2.0}) {
    const double order = std::floor(2.0 * s) + 4.5;
    cmp(evaluate(expand_h(s, x, order), beta),
        eps_limit([&](double t) { return cf::h_generic(t, x, order); }, s, beta), fmt("h s=%g", s));
  }
  for (double s : {1.0, 2.0, 0.0, -1.0, -2.0, -0.5, -1.5}) {
    cmp(evaluate(expand_h0(s, 4.5), beta),
        eps_limit([&](double t) { return cf::h0_generic(t, 4.5); }, s, beta), fmt("h0 s=%g", s));
  }
  for (int d : {1, 2, 3}) {
    for (double s : {0.0, 1.0, 2.0, -1.0, -2.0, 0.5, 1.5}) {
      if (dispatch_case("g", s, d) == "generic") continue;
      cmp(evaluate(expand_g(d, s, 4.5), beta),
          eps_limit([&](double t) { return cf::g_generic(d, t, 4.5); }, s, beta),
          fmt("g d=%g s=%g", d, s));
    }
  }
  for (const auto& m : {circle_model(), torus_model(2), hurwitz_model(0.3), torus_model(3)}) {
    for (double s : {1.0, 2.0, 0.0, -1.0, 0.5, 1.5, -0.5, -1.5}) {
      cmp(evaluate(expand_f(*m, s, x, 3.5), beta),
          eps_limit([&](double t) { return cf::f_generic(*m, t, x, 3.5); }, s, beta),
          m->name() + fmt(" f s=%g", s));
      cmp(evaluate(expand_f0(*m, s, 3.5), beta),
          eps_limit([&](double t) { return cf::f0_generic(*m, t, 3.5); }, s, beta),
          m->name() + fmt(" f0 s=%g", s));
    }
  }
  // The double-pole branches as printed (constant gamma + ln beta - 2 H_n)
  // are outside the check; report how far they land from the limit.
  const double lim = eps_limit([&](double t) { return cf::h0_generic(t, 4.5); }, -1.0, beta);
  c.note(fmt("info: printed h0 branch at s=-1 differs from the limit by %.3g (residue branch: %.3g)",
             evaluate(cf::h0(-1.0, 4.5), beta) - lim, evaluate(expand_h0(-1.0, 4.5), beta) - lim));
  return c.report();
}

bool criterion4() {
  Criterion c(4);
  for (double s : {0.7, 2.0, -1.0, -1.5}) {
    const double order = 6.0;
    const Expansion g = expand_g(1, s, order);
    const Expansion h = expand_h0(s, order);
    std::vector<double> powers;
    for (const auto& t : g.terms) powers.push_back(t.power);
    for (const auto& t : h.terms) powers.push_back(t.power);
    double worst = 0.0;
    for (double p : powers) {
      const auto a = find_term(g, p), b = find_term(h, p);
      worst = std::max({worst, std::abs(a.const_coeff - 2.0 * b.const_coeff) / scale(a.const_coeff),
                        std::abs(a.log_coeff - 2.0 * b.log_coeff) / scale(a.log_coeff)});
    }
    c.check(worst <= 1e-12, fmt("expand_g(1, %g) vs 2 expand_h0(%g) termwise", s, s), worst, 1e-12);
    for (double b : {0.3, 1.0}) {
      const double lhs = sum_g(1, s, b).value, rhs = 2.0 * sum_h0(s, b).value;
      const double tol = 1e-12 * scale(lhs);
      c.check(std::abs(lhs - rhs) <= tol, fmt("sum_g(1, %g, %g) vs 2 sum_h0", s, b), lhs - rhs, tol);
    }
  }
  // What does hold: g_1(s, b) = 2 b^{2s} h0(-s, b).
  double worst = 0.0;
  for (double s : {0.7, 2.0, -1.0, -1.5}) {
    const double order = 4.0 + 2.0 * s;
    const Expansion g = expand_g(1, s, order);
    const Expansion h = expand_h0(-s, order - 2.0 * s);
    for (const auto& t : g.terms) {
      const auto r = find_term(h, t.power - 2.0 * s);
      worst = std::max({worst, std::abs(t.const_coeff - 2.0 * r.const_coeff) / scale(t.const_coeff),
                        std::abs(t.log_coeff - 2.0 * r.log_coeff) / scale(t.log_coeff)});
    }
    for (double b : {0.3, 1.0}) {
      const double lhs = sum_g(1, s, b).value;
      const double rhs = 2.0 * std::pow(b, 2.0 * s) * sum_h0(-s, b).value;
      worst = std::max(worst, std::abs(lhs - rhs) / scale(lhs));
    }
  }
  c.note(fmt("info: g_1(s,b) = 2 b^{2s} h0(-s,b) holds termwise and for the sums, worst %.3g", worst));
  return c.report();
}

bool criterion5() {
  Criterion c(5);
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> t_dist(0.05, 5.0), b_dist(0.2, 3.0), B_dist(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double t = t_dist(rng), b = b_dist(rng), B = B_dist(rng);
    const auto [lhs, rhs] = poisson_check(t, b, B);
    const double tol = 1e-12 * scale(lhs);
    c.check(std::abs(lhs - rhs) <= tol, fmt("t=%g beta=%g B=%g", t, b, B), lhs - rhs, tol);
  }
  return c.report();
}

double residue_at(const ManifoldModel& m, double at) {
  for (const auto& p : m.zeta_poles()) {
    if (std::abs(p.location - at) < 1e-12) return p.residue;
  }
  return 0.0;
}

bool criterion6() {
  Criterion c(6);
  for (const auto& m : {circle_model(), torus_model(1), torus_model(2), torus_model(3)}) {
    const int D = m->dim();
    const std::string n = m->name();
    for (int k = 0; k < D; ++k) {
      const double p = 0.5 * (D - k);
      if (sf::is_nonpositive_integer(p)) continue;
      c.within(m->heat_coeff(0.5 * k), std::tgamma(p) * residue_at(*m, p), 1e-10,
               n + fmt(" A_%g from the residue at %g", 0.5 * k, p));
    }
    for (int l = 0; l <= 2; ++l) {
      const double expected = (l % 2 ? -1.0 : 1.0) * std::tgamma(l + 1.0) * m->heat_coeff(0.5 * D + l);
      c.within(m->zeta(-static_cast<double>(l)), expected, 1e-10, n + fmt(" zeta(-%g)", l));
    }
    for (int l = 0; l <= 2; ++l) {
      const double p = -(2.0 * l + 1.0) / 2.0;
      c.within(m->heat_coeff(0.5 * (D + 2 * l + 1)), std::tgamma(p) * residue_at(*m, p), 1e-10,
               n + fmt(" A_%g", 0.5 * (D + 2 * l + 1)));
    }
  }
  return c.report();
}

bool criterion7() {
  Criterion c(7);
  for (int d : {1, 2, 3}) {
    sf::EpsteinContext ctx(d);
    c.check(sf::epstein_zeta(ctx, 0.0) == -1.0, fmt("zeta_E(0) = -1 exactly, d=%g", d));
    for (double u : {0.3, -0.7, 1.7}) {
      if (u == 0.5 * d) continue;
      const double rhs = std::pow(kPi, 2.0 * u - 0.5 * d) * std::tgamma(0.5 * d - u) *
                         sf::epstein_zeta(ctx, 0.5 * d - u) / std::tgamma(u);
      c.within(sf::epstein_zeta(ctx, u), rhs, 1e-10, fmt("reflection d=%g u=%g", d, u));
    }
  }
  // Brute force over the disc |n|^2 <= K; the tail by partial summation,
  //   sum_{k > K} r(k) k^{-2} = 2 pi / K - N(K) / K^2 + O(K^{-5/3}).
  const long K = 10000000;
  const std::vector<double> r = lattice_counts(2, K);
  double brute = 0.0, count = 0.0;
  for (long k = K; k >= 1; --k) {
    if (r[k] == 0.0) continue;
    brute += r[k] / (static_cast<double>(k) * k);
    count += r[k];
  }
  brute += 2.0 * kPi / K - count / (static_cast<double>(K) * K);
  sf::EpsteinContext e2(2);
  const double value = sf::epstein_zeta(e2, 2.0);
  const double closed = 4.0 * sf::riemann_zeta(2.0) * sf::kCatalan;
  c.within(value, closed, 1e-10, "zeta_E(2) vs 4 zeta(2) Catalan");
  c.within(value, brute, 1e-10, "zeta_E(2) vs brute force");
  return c.report();
}

bool criterion8() {
  Criterion c(8);
  const double x = 0.3;
  for (double s : {1.0 / 3.0, 0.9, -0.4}) {
    for (double b : {0.5, 1.0}) {
      c.within(contour_h0(s, b), sum_h0(s, b).value, 1e-7, fmt("contour_h0 s=%g beta=%g", s, b));
      c.within(contour_h(s, b, x), sum_h(s, b, x).value, 1e-7,
               fmt("contour_h s=%g beta=%g x=%g", s, b, x));
    }
  }
  ContourConfig c1, c2;
  c1.c = 1.0;
  c2.c = 2.0;
  for (double s : {1.0 / 3.0, 0.9, -0.4}) {
    c.within(contour_h0(s, 0.8, c1), contour_h0(s, 0.8, c2), 1e-8, fmt("contour_h0 c=1 vs 2, s=%g", s));
    c.within(contour_h(s, 0.8, x, c1), contour_h(s, 0.8, x, c2), 1e-8,
             fmt("contour_h c=1 vs 2, s=%g", s));
  }
  return c.report();
}

// 2 sum_m cos(2 pi m x) m^{-nu} for x = p / q: explicit up to m = q K, then
// Euler-Maclaurin in k for each residue class m = k q + r.
double cosine_sum(double nu, double x, int q) {
  const long K = 1000000 / q;
  double head = 0.0;
  for (long m = q * K; m >= 1; --m) head += sf::cos_pi(2.0 * m * x) * std::pow(m, -nu);
  double tail = 0.0;
  for (int r = 1; r <= q; ++r) {
    const double a = static_cast<double>(q) * K + r;
    const double cls = std::pow(a, 1.0 - nu) / (q * (nu - 1.0)) + 0.5 * std::pow(a, -nu) +
                       nu * q * std::pow(a, -nu - 1.0) / 12.0 -
                       nu * (nu + 1.0) * (nu + 2.0) * q * q * q * std::pow(a, -nu - 3.0) / 720.0;
    tail += sf::cos_pi(2.0 * r * x) * cls;
  }
  return 2.0 * (head + tail);
}

bool criterion9() {
  Criterion c(9);
  // C(n, x) = -(2 pi i)^n B_n(x) / n!
  for (int n : {2, 3, 4}) {
    double worst = 0.0;
    for (double x : {0.2, 0.5, 0.8}) {
      const std::complex<double> rhs =
          -std::pow(std::complex<double>(0.0, 2.0 * kPi), n) * sf::bernoulli_poly(n, x) / std::tgamma(n + 1.0);
      const double v = sf::polylog_pair(static_cast<double>(n), x);
      const double res = std::abs(v - rhs);
      worst = std::max(worst, res);
      c.check(res <= 1e-10 * scale(v), fmt("Bernoulli reduction n=%g x=%g", n, x), res, 1e-10 * scale(v));
    }
    c.note(fmt("Bernoulli reduction n=%g: worst residual %.3g", n, worst));
  }
  c.note(fmt("info: C(3, 1/2) = %.15g, -1.5 zeta(3) = %.15g", sf::polylog_pair(3.0, 0.5),
             -1.5 * sf::riemann_zeta(3.0)));
  // x = 1/2: C(s, 1/2) = 2 (2^{1-s} - 1) zeta(s)
  for (double s : {-2.5, -1.0, 0.5, 2.0, 3.0, 4.5}) {
    const double v = sf::polylog_pair(s, 0.5);
    const double closed = 2.0 * (std::pow(2.0, 1.0 - s) - 1.0) * sf::riemann_zeta(s);
    c.check(std::abs(v - closed) <= 1e-12 * scale(v), fmt("x = 1/2, s=%g", s), v - closed, 1e-12 * scale(v));
  }
  for (double nu : {1.5, 2.5, 4.0}) {
    for (auto [x, q] : {std::pair{0.1, 10}, std::pair{0.3, 10}, std::pair{0.49, 100}}) {
      const double v = sf::polylog_pair(nu, x);
      const double direct = cosine_sum(nu, x, q);
      c.check(std::abs(v - direct) <= 1e-10 * scale(v), fmt("direct sum nu=%g x=%g", nu, x), v - direct,
              1e-10 * scale(v));
    }
  }
  return c.report();
}

bool criterion10() {
  Criterion c(10);
  for (int D : {2, 3, 4, 5}) {
    for (double beta : {0.2, 0.8}) {
      const double L = 1.0;
      const double lhs = mass_sum(2.0 * beta / L, L, D, 1e-15).value;
      const double rhs = std::pow(2.0 / (L * L), 0.5 * D - 1.0) * std::pow(beta, D - 2) *
                         sum_h0(1.0 - 0.5 * D, beta, 1e-15).value;
      c.within(lhs, rhs, 1e-12 * std::abs(rhs), fmt("mass identity D=%g beta=%g", D, beta));
    }
  }
  const auto t1 = torus_model(1);
  for (double b : {0.3, 0.45}) {
    const double f = casimir_force({1, t1, b, 1.0});
    c.within(f, -casimir_force({1, t1, 1.0 - b, 1.0}), 1e-12 * scale(f), fmt("force antisymmetry beta=%g", b));
  }
  // Piston force against the finite difference of the directly summed
  // energy. The second chamber, of length L - beta, carries a remainder of
  // order exp(-pi^2 / (L - beta)) that the expansion omits.
  const double L = 2.0, beta = 0.3;
  auto total = [&](double b) {
    return casimir_energy_direct({1, t1, b, L}) + casimir_energy_direct({1, t1, L - b, L});
  };
  auto central = [&](double h) { return -(total(beta + h) - total(beta - h)) / (2.0 * h); };
  const double fd = (4.0 * central(5e-4) - central(1e-3)) / 3.0;
  c.within(casimir_force({1, t1, beta, L}, 10.0), fd, std::exp(-kPi * kPi / (L - beta)),
           "piston force vs finite difference");
  // D = 3: S(m) ~ c ln m with c = -sqrt(pi) 2 / (2^{3/2} L)
  const double s1 = mass_sum(0.01, 1.0, 3).value, s2 = mass_sum(0.005, 1.0, 3).value;
  const double fit = (s1 - s2) / std::log(2.0);
  const double expected = -std::sqrt(kPi) * 2.0 / std::pow(2.0, 1.5);
  c.within(fit / expected, 1.0, 0.01, "D = 3 log coefficient fit");
  c.within(find_term(mass_expansion(1.0, 3, 3.0), 0.0).log_coeff, expected, 1e-12,
           "D = 3 expansion log coefficient");
  c.note(fmt("D = 3 fit %.8g, coefficient %.8g", fit, expected));
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      if (!criteria[i]()) ++failed;
    } catch (const std::exception& e) {
      std::printf("criterion %2zu: FAIL  exception: %s\n", i + 1, e.what());
      ++failed;
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
