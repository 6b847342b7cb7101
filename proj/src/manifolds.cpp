#include "besselsum/manifolds.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "besselsum/errors.hpp"

namespace besselsum {

using specfun::kPi;
using specfun::PolePoint;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Twice the index, validated to be a nonnegative integer.
int half_index(double j) {
  const double twice = 2.0 * j;
  if (!(twice >= 0.0) || twice != std::floor(twice)) {
    throw DomainError("heat_coeff: index must be a nonnegative multiple of 1/2");
  }
  return static_cast<int>(twice);
}

// sum over Z of exp(-t n^2) minus one
double theta_minus_one(double t) {
  if (t < kPi) {
    double s = 0.0;
    for (int n = 1; n < 64; ++n) {
      const double term = std::exp(-kPi * kPi * n * n / t);
      s += term;
      if (term < 1e-18 * (1.0 + s)) break;
    }
    return std::sqrt(kPi / t) * (1.0 + 2.0 * s) - 1.0;
  }
  double s = 0.0;
  for (int n = 1; n < 64; ++n) {
    const double term = std::exp(-t * n * n);
    s += term;
    if (term < 1e-18 * s) break;
  }
  return 2.0 * s;
}

class CircleModel final : public ManifoldModel {
 public:
  std::string name() const override { return "circle"; }
  int dim() const override { return 1; }
  double heat_coeff(double j) const override {
    const int k = half_index(j);
    if (k == 0) return 0.5 * std::sqrt(kPi);
    if (k == 1) return -0.5;
    return 0.0;
  }
  std::vector<PolePoint> zeta_poles() const override {
    return {PolePoint{0.5, 0.5, specfun::kEulerGamma}};
  }
  double zeta(double s) const override { return specfun::riemann_zeta(2.0 * s); }
  double zeta_deriv(double s) const override { return 2.0 * specfun::riemann_zeta_deriv(2.0 * s); }
  double heat_trace(double t) const override {
    if (!(t > 0.0)) throw DomainError("heat_trace: t must be positive");
    return 0.5 * theta_minus_one(t);
  }
  std::vector<EigenGroup> spectrum(double alpha_max) const override {
    std::vector<EigenGroup> out;
    for (long n = 1; n <= static_cast<long>(alpha_max); ++n) out.push_back({double(n), 1.0});
    return out;
  }
};

class HurwitzModel final : public ManifoldModel {
 public:
  explicit HurwitzModel(double a) : a_(a) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz model: shift must lie in (0, 1]");
  }
  std::string name() const override {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), a_);
    return "hurwitz:" + std::string(buf, res.ptr);
  }
  int dim() const override { return 1; }
  double heat_coeff(double j) const override {
    const int k = half_index(j);
    if (k == 0) return 0.5 * std::sqrt(kPi);
    if (k % 2 == 0) return 0.0;
    const int l = (k - 1) / 2;
    const double v = specfun::bernoulli_poly(2 * l + 1, a_) / ((2.0 * l + 1.0) * std::tgamma(l + 1.0));
    return (l % 2 == 0) ? -v : v;
  }
  std::vector<PolePoint> zeta_poles() const override {
    return {PolePoint{0.5, 0.5, -specfun::digamma(a_)}};
  }
  double zeta(double s) const override { return specfun::hurwitz_zeta(2.0 * s, a_); }
  double zeta_deriv(double s) const override {
    return 2.0 * specfun::hurwitz_zeta_deriv(2.0 * s, a_);
  }
  double heat_trace(double t) const override {
    if (!(t > 0.0)) throw DomainError("heat_trace: t must be positive");
    double s = 0.0;
    for (long n = 0;; ++n) {
      const double x = n + a_;
      const double term = std::exp(-t * x * x);
      s += term;
      if (x * x * t > 45.0) break;
    }
    return s;
  }
  std::vector<EigenGroup> spectrum(double alpha_max) const override {
    std::vector<EigenGroup> out;
    for (long n = 0; n + a_ <= alpha_max; ++n) out.push_back({n + a_, 1.0});
    return out;
  }

 private:
  double a_;
};

class TorusModel final : public ManifoldModel {
 public:
  explicit TorusModel(int d) : ctx_(d) {}
  std::string name() const override { return "torus:" + std::to_string(ctx_.dim()); }
  int dim() const override { return ctx_.dim(); }
  double heat_coeff(double j) const override {
    const int k = half_index(j);
    if (k == 0) return std::pow(kPi, 0.5 * dim());
    if (k == dim()) return -1.0;
    return 0.0;
  }
  std::vector<PolePoint> zeta_poles() const override { return {ctx_.residue_and_finite_part()}; }
  double zeta(double s) const override { return ctx_.zeta(s); }
  double zeta_deriv(double s) const override { return ctx_.zeta_deriv(s); }
  double heat_trace(double t) const override {
    if (!(t > 0.0)) throw DomainError("heat_trace: t must be positive");
    return std::expm1(dim() * std::log1p(theta_minus_one(t)));
  }
  std::vector<EigenGroup> spectrum(double alpha_max) const override {
    const long k_max = static_cast<long>(alpha_max * alpha_max);
    const std::vector<double> r = lattice_counts(dim(), k_max);
    std::vector<EigenGroup> out;
    for (long k = 1; k <= k_max; ++k) {
      if (r[k] > 0.0) out.push_back({std::sqrt(static_cast<double>(k)), r[k]});
    }
    return out;
  }

 private:
  specfun::EpsteinContext ctx_;
};

class TableModel final : public ManifoldModel {
 public:
  TableModel(int D, std::vector<double> alpha, std::map<int, double> coeffs)
      : D_(D), alpha_(std::move(alpha)), coeffs_(std::move(coeffs)) {}

  std::string name() const override { return "table"; }
  int dim() const override { return D_; }
  double heat_coeff(double j) const override {
    const auto it = coeffs_.find(half_index(j));
    if (it == coeffs_.end()) {
      throw DomainError("table model: no heat coefficient A_" + std::to_string(j));
    }
    return it->second;
  }
  std::vector<PolePoint> zeta_poles() const override {
    std::vector<PolePoint> out;
    for (const auto& [k, a] : coeffs_) {
      const double p = 0.5 * (D_ - k);
      if (a == 0.0 || specfun::is_nonpositive_integer(p)) continue;
      out.push_back(PolePoint{p, a * specfun::rgamma(p), kNaN});
    }
    return out;
  }
  double zeta(double s) const override {
    check_window(s);
    double sum = 0.0;
    for (auto it = alpha_.rbegin(); it != alpha_.rend(); ++it) sum += std::pow(*it, -2.0 * s);
    const double w = 2.0 * s - D_;
    return sum + weyl_density() * std::pow(alpha_.back(), -w) / w;
  }
  double zeta_deriv(double s) const override {
    check_window(s);
    double sum = 0.0;
    for (auto it = alpha_.rbegin(); it != alpha_.rend(); ++it) {
      sum -= 2.0 * std::log(*it) * std::pow(*it, -2.0 * s);
    }
    const double w = 2.0 * s - D_;
    const double la = std::log(alpha_.back());
    return sum + weyl_density() * std::pow(alpha_.back(), -w) * (-2.0 * la / w - 2.0 / (w * w));
  }
  double heat_trace(double t) const override {
    if (!(t > 0.0)) throw DomainError("heat_trace: t must be positive");
    double sum = 0.0;
    for (auto it = alpha_.rbegin(); it != alpha_.rend(); ++it) sum += std::exp(-t * *it * *it);
    const double x = t * alpha_.back() * alpha_.back();
    const auto a0 = coeffs_.find(0);
    if (a0 == coeffs_.end()) return sum;
    return sum + a0->second * std::pow(t, -0.5 * D_) * boost::math::gamma_q(0.5 * D_, x);
  }
  std::vector<EigenGroup> spectrum(double alpha_max) const override {
    std::vector<EigenGroup> out;
    for (double a : alpha_) {
      if (a > alpha_max) break;
      out.push_back({a, 1.0});
    }
    return out;
  }
  bool finite_spectrum() const override { return true; }
  double alpha_limit() const override { return alpha_.back(); }

 private:
  void check_window(double s) const {
    if (!(2.0 * s > D_)) {
      throw WindowError("table model: zeta_M(" + std::to_string(s) +
                        ") lies outside the convergence window 2s > D");
    }
  }
  // Weyl-law eigenvalue density: dN = 2 A_0 alpha^{D-1} / Gamma(D/2) dalpha.
  double weyl_density() const {
    const auto it = coeffs_.find(0);
    if (it == coeffs_.end()) return 0.0;
    return 2.0 * it->second / std::tgamma(0.5 * D_);
  }

  int D_;
  std::vector<double> alpha_;
  std::map<int, double> coeffs_;  // keyed by twice the index
};

double parse_number(const std::string& token, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + token + "'");
  }
  return v;
}

}  // namespace

double ManifoldModel::alpha_limit() const { return std::numeric_limits<double>::infinity(); }

ModelPtr circle_model() { return std::make_shared<CircleModel>(); }
ModelPtr torus_model(int d) { return std::make_shared<TorusModel>(d); }
ModelPtr hurwitz_model(double a) { return std::make_shared<HurwitzModel>(a); }

ModelPtr table_model_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int D = 0;
  std::vector<double> alpha;
  std::map<int, double> coeffs;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "D") {
      if (tok.size() != 2) throw ParseError(where + "expected 'D <int>'");
      const double v = parse_number(tok[1], line_no);
      if (v < 1.0 || v != std::floor(v)) throw ParseError(where + "D must be a positive integer");
      if (D != 0) throw ParseError(where + "D given twice");
      D = static_cast<int>(v);
    } else if (tok[0] == "alpha") {
      if (tok.size() != 2) throw ParseError(where + "expected 'alpha <float>'");
      const double v = parse_number(tok[1], line_no);
      if (!(v > 0.0)) throw ParseError(where + "eigenvalues must be positive");
      if (!alpha.empty() && !(v >= alpha.back())) {
        throw ParseError(where + "eigenvalues must be nondecreasing");
      }
      alpha.push_back(v);
    } else if (tok[0] == "A") {
      if (tok.size() != 3) throw ParseError(where + "expected 'A <index> <float>'");
      const double j = parse_number(tok[1], line_no);
      if (!(j >= 0.0) || 2.0 * j != std::floor(2.0 * j)) {
        throw ParseError(where + "index must be a nonnegative multiple of 1/2");
      }
      const int key = static_cast<int>(2.0 * j);
      if (coeffs.count(key) != 0) throw ParseError(where + "coefficient given twice");
      coeffs[key] = parse_number(tok[2], line_no);
    } else {
      throw ParseError(where + "unknown key '" + tok[0] + "'");
    }
  }
  if (D == 0) throw ParseError("table model: missing 'D' line");
  if (alpha.empty()) throw ParseError("table model: no eigenvalues");
  return std::make_shared<TableModel>(D, std::move(alpha), std::move(coeffs));
}

ModelPtr table_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model table '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return table_model_from_string(ss.str());
}

ModelPtr parse_model(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "circle" && arg.empty()) return circle_model();
  if (kind == "torus") {
    const double d = parse_number(arg, 0);
    if (d < 1.0 || d != std::floor(d) || d > 16.0) throw ConfigError("torus dimension must be in 1..16");
    return torus_model(static_cast<int>(d));
  }
  if (kind == "hurwitz") return hurwitz_model(parse_number(arg, 0));
  if (kind == "table" && !arg.empty()) return table_model(arg);
  throw ConfigError("unknown model '" + spec + "'");
}

double heat_trace(const ManifoldModel& model, double t) { return model.heat_trace(t); }

std::vector<double> lattice_counts(int d, long k_max) {
  if (d < 1) throw DomainError("lattice_counts: dimension must be positive");
  if (k_max < 0) return {};
  std::vector<double> one(k_max + 1, 0.0);
  one[0] = 1.0;
  for (long n = 1; n * n <= k_max; ++n) one[n * n] = 2.0;
  std::vector<double> r = one;
  for (int dim = 2; dim <= d; ++dim) {
    std::vector<double> next(k_max + 1, 0.0);
    for (long k = 0; k <= k_max; ++k) {
      if (r[k] == 0.0) continue;
      for (long n = 0; k + n * n <= k_max; ++n) next[k + n * n] += r[k] * one[n * n];
    }
    r = std::move(next);
  }
  return r;
}

}  // namespace besselsum
