#include <doctest.h>

#include <cmath>
#include <random>

#include "besselsum/direct_eval.hpp"
#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

using namespace besselsum;
using specfun::bessel_k;
using specfun::kPi;

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// circle model at s = 1/2: sum_n sqrt(pi)/(2n) Re[q_n / (1 - q_n)], q_n = exp(-2 n beta + 2 pi i B)
double circle_f_half(double beta, double B) {
  double sum = 0.0;
  for (int n = 1; n < 100000; ++n) {
    const double r = std::exp(-2.0 * n * beta);
    const double c = std::cos(2.0 * kPi * B);
    const double term = std::sqrt(kPi) / (2.0 * n) * (r * c - r * r) / (1.0 - 2.0 * r * c + r * r);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

double g_brute(int d, double s, double beta, int R) {
  double sum = 0.0;
  std::vector<int> n(d, -R);
  while (true) {
    long r2 = 0;
    for (int v : n) r2 += static_cast<long>(v) * v;
    if (r2 > 0) {
      const double r = std::sqrt(static_cast<double>(r2));
      sum += std::pow(beta / r, s) * bessel_k(s, 2.0 * r * beta);
    }
    int i = 0;
    while (i < d && n[i] == R) n[i++] = -R;
    if (i == d) break;
    ++n[i];
  }
  return sum;
}

}  // namespace

TEST_CASE("h0 closed forms at s = +-1/2") {
  const double b = 0.5;
  const auto r1 = sum_h0(0.5, b);
  CHECK(close(r1.value, (std::sqrt(kPi) / 2.0) / (std::exp(1.0) - 1.0), 1e-12));
  CHECK(r1.error_estimate >= 0.0);
  CHECK(r1.terms_used > 0);
  const auto r2 = sum_h0(-0.5, b);
  CHECK(close(r2.value, -(std::sqrt(kPi) / (2.0 * b)) * std::log(1.0 - std::exp(-2.0 * b)), 1e-12));
}

TEST_CASE("h with B = 1/2 alternates") {
  const double e1 = std::exp(-1.0);
  const double exact = -(std::sqrt(kPi) / 2.0) * e1 / (1.0 + e1);
  CHECK(close(sum_h(0.5, 0.5, 0.5).value, exact, 1e-12));
  SeriesParams p;
  p.s = 0.5;
  p.beta = 0.5;
  p.B = 0.5;
  CHECK(sum_h(p).value == sum_h(0.5, 0.5, 0.5).value);
}

TEST_CASE("h matches a termwise loop") {
  const double s = 0.4, b = 0.3, B = 0.2;
  double loop = 0.0;
  for (int m = 1; m < 400; ++m) {
    loop += std::pow(m * b, s) * std::cos(2.0 * kPi * m * B) * bessel_k(-s, 2.0 * m * b);
  }
  CHECK(close(sum_h(s, b, B).value, loop, 1e-12));
}

TEST_CASE("g for d = 1 reduces to h0 with reflected order") {
  // g_1(s, b) = 2 b^{2s} h0(-s, b)
  for (double s : {0.7, -0.3, 1.5}) {
    const double b = 0.4;
    CHECK(close(sum_g(1, s, b).value, 2.0 * std::pow(b, 2.0 * s) * sum_h0(-s, b).value, 1e-12));
  }
}

TEST_CASE("g against brute-force lattice sums") {
  CHECK(close(sum_g(2, 0.7, 0.8).value, g_brute(2, 0.7, 0.8, 60), 1e-12));
  CHECK(close(sum_g(3, -0.4, 0.9).value, g_brute(3, -0.4, 0.9, 22), 1e-12));
  CHECK(close(sum_g(2, 1.3, 0.35).value, g_brute(2, 1.3, 0.35, 80), 1e-12));
}

TEST_CASE("f for the circle model") {
  const auto c = circle_model();
  for (double B : {0.0, 0.3}) {
    const double b = 0.6;
    CHECK(close(sum_f(*c, 0.5, b, B).value, circle_f_half(b, B), 1e-12));
  }
  double brute = 0.0;
  const double s = 1.0 / 3.0, b = 1.0;
  for (int n = 1; n <= 200; ++n) {
    for (int m = 1; m <= 200; ++m) brute += std::pow(m * b / n, s) * bessel_k(-s, 2.0 * n * m * b);
  }
  CHECK(close(sum_f(*c, s, b, 0.0).value, brute, 1e-12));
  CHECK(close(sum_f(*c, 0.8, 0.5, 0.3).value, sum_f(*c, 0.8, 0.5, 0.7).value, 1e-13));
}

TEST_CASE("f for a torus equals the lattice-grouped double sum") {
  // torus(1): alpha = |n| over Z without 0, so f = 2 f_circle
  const auto t1 = torus_model(1);
  const auto c = circle_model();
  CHECK(close(sum_f(*t1, 0.6, 0.4, 0.2).value, 2.0 * sum_f(*c, 0.6, 0.4, 0.2).value, 1e-12));
}

TEST_CASE("stopping rule is sound") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> s_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> b_dist(0.2, 1.5);
  std::uniform_real_distribution<double> B_dist(0.0, 1.0);
  const auto c = circle_model();
  for (int i = 0; i < 20; ++i) {
    const double s = s_dist(rng), b = b_dist(rng), B = B_dist(rng);
    const double tol = 1e-8;
    const auto coarse_h = sum_h(s, b, B, tol);
    const auto fine_h = sum_h(s, b, B, tol * 1e-4);
    CHECK(std::abs(coarse_h.value - fine_h.value) <= coarse_h.error_estimate + 1e-15);
    const auto coarse_g = sum_g(2, s, b, tol);
    const auto fine_g = sum_g(2, s, b, tol * 1e-4);
    CHECK(std::abs(coarse_g.value - fine_g.value) <= coarse_g.error_estimate + 1e-15);
    const auto coarse_f = sum_f(*c, s, b, B, tol);
    const auto fine_f = sum_f(*c, s, b, B, tol * 1e-4);
    CHECK(std::abs(coarse_f.value - fine_f.value) <= coarse_f.error_estimate + 1e-15);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(sum_h(0.5, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(sum_h0(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(sum_h0(0.5, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(sum_g(0, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(sum_f(*circle_model(), 0.5, 0.0, 0.0), DomainError);
}
