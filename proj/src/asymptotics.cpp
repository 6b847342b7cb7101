#include "besselsum/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>

#include "besselsum/errors.hpp"
#include "besselsum/specfun.hpp"

namespace besselsum {

namespace {

constexpr double kMergeTol = 1e-10;
// How far beyond the requested order the remainder search looks.
constexpr double kRemainderWindow = 40.0;

bool is_int(double v) { return v == std::floor(v); }

// Snap arguments that are integers up to roundoff, so that exact zeros of
// the zeta factors are found.
double snap(double u) {
  const double r = std::round(u);
  return std::abs(u - r) < 1e-11 ? r : u;
}

struct Laurent {
  double residue = 0.0;
  double finite_part = 0.0;
};

// One meromorphic factor of the integrand.
struct Factor {
  virtual ~Factor() = default;
  // Pole locations t >= t_min.
  virtual std::vector<double> poles(double t_min) const = 0;
  virtual Laurent laurent(double t0) const = 0;
  virtual double value(double t) const = 0;
  virtual double deriv(double t) const = 0;
};

// Gamma(t + a)
struct GammaFactor final : Factor {
  explicit GammaFactor(double a) : a(a) {}
  double a;
  std::vector<double> poles(double t_min) const override {
    std::vector<double> out;
    for (int l = 0; -a - l >= t_min; ++l) out.push_back(-a - l);
    return out;
  }
  Laurent laurent(double t0) const override {
    const int l = static_cast<int>(std::lround(-(t0 + a)));
    const double r = ((l % 2 == 0) ? 1.0 : -1.0) / std::tgamma(l + 1.0);
    return {r, r * specfun::digamma(l + 1.0)};
  }
  double value(double t) const override { return specfun::gamma(snap(t + a)); }
  double deriv(double t) const override {
    const double u = snap(t + a);
    return specfun::gamma(u) * specfun::digamma(u);
  }
};

// zeta_M(t + s)
struct ModelZetaFactor final : Factor {
  ModelZetaFactor(const ManifoldModel& m, double s) : model(m), s(s), pole_data(m.zeta_poles()) {}
  const ManifoldModel& model;
  double s;
  std::vector<specfun::PolePoint> pole_data;
  std::vector<double> poles(double t_min) const override {
    std::vector<double> out;
    for (const auto& p : pole_data) {
      if (p.location - s >= t_min) out.push_back(p.location - s);
    }
    return out;
  }
  Laurent laurent(double t0) const override {
    for (const auto& p : pole_data) {
      if (std::abs(p.location - s - t0) <= kMergeTol) return {p.residue, p.finite_part};
    }
    throw NumericalError("zeta_M: no pole at requested location");
  }
  double value(double t) const override { return model.zeta(snap(t + s)); }
  double deriv(double t) const override { return model.zeta_deriv(snap(t + s)); }
};

// C(2t, x) / 2
struct PolylogFactor final : Factor {
  explicit PolylogFactor(double x) : x(x) {}
  double x;
  std::vector<double> poles(double) const override { return {}; }
  Laurent laurent(double) const override { throw NumericalError("polylog pair has no poles"); }
  double value(double t) const override { return 0.5 * specfun::polylog_pair(snap(2.0 * t), x); }
  double deriv(double t) const override { return specfun::polylog_pair_deriv(snap(2.0 * t), x); }
};

// zeta_R(2t)
struct RiemannFactor final : Factor {
  std::vector<double> poles(double t_min) const override {
    return 0.5 >= t_min ? std::vector<double>{0.5} : std::vector<double>{};
  }
  Laurent laurent(double) const override { return {0.5, specfun::kEulerGamma}; }
  double value(double t) const override { return specfun::riemann_zeta(snap(2.0 * t)); }
  double deriv(double t) const override { return 2.0 * specfun::riemann_zeta_deriv(snap(2.0 * t)); }
};

struct PoleGroup {
  double t0 = 0.0;
  std::vector<std::size_t> members;  // indices of factors singular at t0
};

std::vector<PoleGroup> collect_poles(const std::vector<std::unique_ptr<Factor>>& factors,
                                     double t_min) {
  std::vector<std::pair<double, std::size_t>> raw;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (double t : factors[i]->poles(t_min)) raw.emplace_back(t, i);
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<PoleGroup> groups;
  for (const auto& [t, i] : raw) {
    if (!groups.empty() && std::abs(groups.back().t0 - t) <= kMergeTol) {
      PoleGroup& g = groups.back();
      if (std::find(g.members.begin(), g.members.end(), i) == g.members.end()) g.members.push_back(i);
      // Prefer the exact integer representative.
      if (is_int(t)) g.t0 = t;
      continue;
    }
    groups.push_back(PoleGroup{snap(t), {i}});
  }
  return groups;
}

// Half the residue of the integrand at a pole group, as a beta-power term.
ExpansionTerm residue_term(const std::vector<std::unique_ptr<Factor>>& factors, const PoleGroup& g) {
  if (g.members.size() > 2) throw NumericalError("pole of order higher than two encountered");
  const double t0 = g.t0;
  auto singular = [&](std::size_t i) {
    return std::find(g.members.begin(), g.members.end(), i) != g.members.end();
  };
  std::vector<double> vals;
  std::vector<std::size_t> idx;
  double R = 1.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (singular(i)) continue;
    const double v = factors[i]->value(t0);
    vals.push_back(v);
    idx.push_back(i);
    R *= v;
  }
  ExpansionTerm term{-2.0 * t0, 0.0, 0.0};
  if (g.members.size() == 1) {
    term.const_coeff = 0.5 * factors[g.members[0]]->laurent(t0).residue * R;
    return term;
  }
  const Laurent p = factors[g.members[0]]->laurent(t0);
  const Laurent q = factors[g.members[1]]->laurent(t0);
  // R' by the product rule, computed only here.
  double dR = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    double prod = factors[idx[k]]->deriv(t0);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j != k) prod *= vals[j];
    }
    dR += prod;
  }
  if ((p.residue != 0.0 && std::isnan(q.finite_part)) || (q.residue != 0.0 && std::isnan(p.finite_part))) {
    throw WindowError("finite part of zeta_M at a double pole is not available for this model");
  }
  term.const_coeff = 0.5 * double_pole_residue(p.residue, p.finite_part, q.residue, q.finite_part, R, dR);
  term.log_coeff = 0.5 * (-2.0 * p.residue * q.residue * R);
  return term;
}

Expansion run_engine(const std::vector<std::unique_ptr<Factor>>& factors, double order, Expansion e) {
  if (!std::isfinite(order)) throw DomainError("expansion order must be finite");
  e.max_power = order;
  const double t_min = -0.5 * (order + kRemainderWindow);
  const std::vector<PoleGroup> groups = collect_poles(factors, t_min);
  std::vector<ExpansionTerm> terms;
  for (const PoleGroup& g : groups) {
    const double power = -2.0 * g.t0;
    const ExpansionTerm t = residue_term(factors, g);
    const bool nonzero = t.const_coeff != 0.0 || t.log_coeff != 0.0;
    if (power <= order) {
      if (nonzero) terms.push_back(t);
    } else if (nonzero) {
      e.remainder_power = power;
      break;
    }
  }
  e.terms = merge_terms(terms);
  return e;
}

Expansion header(const std::string& family, double s, double x, int d, const std::string& model,
                 int dim) {
  Expansion e;
  e.family = family;
  e.s = s;
  e.x = x;
  e.d = d;
  e.model = model;
  e.case_tag = dispatch_case(family, s, dim);
  return e;
}

void check_x(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("x must lie in (0, 1)");
}

void check_s(double s) {
  if (!std::isfinite(s)) throw DomainError("s must be finite");
}

}  // namespace

double double_pole_residue(double res_p, double fp_p, double res_q, double fp_q, double r_val,
                           double r_deriv) {
  return res_p * fp_q * r_val + res_q * fp_p * r_val + res_p * res_q * r_deriv;
}

std::string dispatch_case(const std::string& family, double s, int dim) {
  const bool integer = is_int(s);
  const bool half = !integer && is_int(s - 0.5);
  if (family == "h") {
    if (integer) return s > 0.0 ? "pos_int" : "neg_int";
    return "generic";
  }
  if (family == "h0") {
    if (integer) return s > 0.0 ? "pos_int" : "neg_int";
    if (half && s < 0.0) return "neg_half";
    return "generic";
  }
  if (family == "g") {
    if (dim < 1) throw DomainError("dispatch_case: lattice dimension must be positive");
    const bool even = dim % 2 == 0;
    if (integer) {
      if (even) return s >= 0.0 ? "pos_int_evenD" : "neg_int_evenD";
      return s >= 0.0 ? "pos_int_oddD" : "neg_int_oddD";
    }
    if (half && !even && s > 0.0) return "pos_half_oddD";
    return "generic";
  }
  if (family == "f" || family == "f0") {
    if (dim < 1) throw DomainError("dispatch_case: manifold dimension must be positive");
    const bool even = dim % 2 == 0;
    if (integer) {
      if (s > 0.0) return even ? "pos_int_evenD" : "pos_int_oddD";
      return "neg_int";
    }
    if (half) {
      if (s > 0.0) return even ? "pos_half_evenD" : "pos_half_oddD";
      return "neg_half";
    }
    return "generic";
  }
  throw DomainError("dispatch_case: unknown family '" + family + "'");
}

Expansion expand_h(double s, double x, double order) {
  check_s(s);
  check_x(x);
  std::vector<std::unique_ptr<Factor>> f;
  f.push_back(std::make_unique<GammaFactor>(0.0));
  f.push_back(std::make_unique<GammaFactor>(s));
  f.push_back(std::make_unique<PolylogFactor>(x));
  return run_engine(f, order, header("h", s, x, 0, "", 1));
}

Expansion expand_h0(double s, double order) {
  check_s(s);
  std::vector<std::unique_ptr<Factor>> f;
  f.push_back(std::make_unique<GammaFactor>(0.0));
  f.push_back(std::make_unique<GammaFactor>(s));
  f.push_back(std::make_unique<RiemannFactor>());
  return run_engine(f, order, header("h0", s, 0.0, 0, "", 1));
}

Expansion expand_g(int d, double s, double order) {
  check_s(s);
  if (d < 1) throw DomainError("expand_g: dimension must be positive");
  const ModelPtr torus = torus_model(d);
  std::vector<std::unique_ptr<Factor>> f;
  f.push_back(std::make_unique<GammaFactor>(0.0));
  f.push_back(std::make_unique<GammaFactor>(s));
  f.push_back(std::make_unique<ModelZetaFactor>(*torus, s));
  return run_engine(f, order, header("g", s, 0.0, d, "", d));
}

Expansion expand_f(const ManifoldModel& model, double s, double x, double order) {
  check_s(s);
  check_x(x);
  std::vector<std::unique_ptr<Factor>> f;
  f.push_back(std::make_unique<GammaFactor>(0.0));
  f.push_back(std::make_unique<GammaFactor>(s));
  f.push_back(std::make_unique<ModelZetaFactor>(model, s));
  f.push_back(std::make_unique<PolylogFactor>(x));
  return run_engine(f, order, header("f", s, x, 0, model.name(), model.dim()));
}

Expansion expand_f0(const ManifoldModel& model, double s, double order) {
  check_s(s);
  std::vector<std::unique_ptr<Factor>> f;
  f.push_back(std::make_unique<GammaFactor>(0.0));
  f.push_back(std::make_unique<GammaFactor>(s));
  f.push_back(std::make_unique<ModelZetaFactor>(model, s));
  f.push_back(std::make_unique<RiemannFactor>());
  return run_engine(f, order, header("f0", s, 0.0, 0, model.name(), model.dim()));
}

double reduce_B(double B) {
  if (!std::isfinite(B)) throw DomainError("B must be finite");
  double x = B - std::floor(B);
  if (x >= 1.0) x = 0.0;
  return x;
}

Expansion expand_f_any(const ManifoldModel& model, double s, double B, double order) {
  const double x = reduce_B(B);
  return x == 0.0 ? expand_f0(model, s, order) : expand_f(model, s, x, order);
}

Expansion expand_h_any(double s, double B, double order) {
  const double x = reduce_B(B);
  return x == 0.0 ? expand_h0(s, order) : expand_h(s, x, order);
}

}  // namespace besselsum
