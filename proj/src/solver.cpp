#include "repsel/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "repsel/root_find.hpp"

namespace repsel {

namespace {

constexpr double kBracketMargin = 1e-9;   // keeps the alpha bracket inside (beta, 1)
constexpr double kAlphaTol = 1e-12;       // x-tolerance of the alpha root find

double homogeneous(double pi, double x_low, double rho) {
  if (pi >= 1.0) return 0.0;
  return std::pow((1.0 - pi) / (1.0 - x_low), 1.0 + rho) * std::pow(x_low / pi, rho);
}

}  // namespace

double ValueFn::value(double pi) const {
  return p0 + p1 * pi + gamma * homogeneous(pi, x_low, rho);
}

double ValueFn::derivative(double pi) const {
  if (pi >= 1.0) return p1;  // homogeneous term and its slope vanish at 1
  const double h = homogeneous(pi, x_low, rho);
  return p1 + gamma * h * (-(1.0 + rho) / (1.0 - pi) - rho / pi);
}

double SolveReport::scale_b() const {
  const double kb = params.kappa * params.phi_b;
  return kb / (params.r + kb);
}

double SolveReport::w(double pi) const {
  if (pi <= beta) return 0.0;
  if (!alpha || pi <= *alpha) return scale_b() * vb.value(pi);
  const double ka = params.kappa * params.phi_a;
  const double kb = params.kappa * params.phi_b;
  return (ka * va.value(pi) + kb * vb.value(pi)) / (params.r + ka + kb);
}

double SolveReport::w_prime(double pi) const {
  if (pi <= beta) return 0.0;
  if (!alpha || pi <= *alpha) return scale_b() * vb.derivative(pi);
  const double ka = params.kappa * params.phi_a;
  const double kb = params.kappa * params.phi_b;
  return (ka * va.derivative(pi) + kb * vb.derivative(pi)) / (params.r + ka + kb);
}

double SolveReport::vb_value(double pi) const { return pi > beta ? vb.value(pi) : 0.0; }

double SolveReport::vb_prime(double pi) const { return pi > beta ? vb.derivative(pi) : 0.0; }

double SolveReport::va_value(double pi) const {
  if (alpha && pi > *alpha) return va.value(pi);
  return w(pi);
}

double SolveReport::va_prime(double pi) const {
  if (alpha && pi > *alpha) return va.derivative(pi);
  return w_prime(pi);
}

Belief solve_beta(const EconomyParams& p, const RegimeInfo& regime) {
  return p.c / (p.lambda_b * (1.0 + regime.w1));
}

ValueFn build_vb(const EconomyParams& p, const RegimeInfo& regime, double beta) {
  ValueFn v;
  v.p0 = -p.c / p.r;
  v.p1 = p.lambda_b / (p.r + p.lambda_b) * (1.0 + regime.w1 + p.c / p.r);
  v.gamma = p.c / p.r - v.p1 * beta;  // value matching v_b(beta) = 0
  v.x_low = beta;
  v.rho = p.r / p.lambda_b;
  return v;
}

namespace {

// rhs of the fixed-point relation pinning alpha in the low cost regime.
double alpha_map(const EconomyParams& p, const RegimeInfo& regime, const ValueFn& vb,
                 double a) {
  const double kb = p.kappa * p.phi_b;
  const double num = p.r * p.lambda_b * p.c +
                     kb * (p.lambda_b - p.lambda_a) * (p.c + p.r * vb.value(a));
  return num / (p.r * p.lambda_b * p.lambda_a * (1.0 + regime.w1));
}

}  // namespace

std::optional<Belief> solve_alpha(const EconomyParams& p, const RegimeInfo& regime,
                                  const ValueFn& vb) {
  if (regime.regime == Regime::HighCost) return std::nullopt;
  const double beta = vb.x_low;
  const double lo = beta + kBracketMargin;
  const double hi = 1.0 - kBracketMargin;
  auto g = [&](double a) { return a - alpha_map(p, regime, vb, a); };
  if (g(lo) >= 0.0) {
    // Fixed point at (or numerically below) beta + margin: the a- and
    // b-cutoffs coincide, e.g. in the lambda_a -> lambda_b limit.
    return lo;
  }
  if (g(hi) <= 0.0) {
    throw std::runtime_error("solve_alpha: no fixed point bracketed in (beta, 1)");
  }
  return find_root(g, lo, hi, kAlphaTol).x;
}

ValueFn build_va(const EconomyParams& p, const RegimeInfo& regime, double alpha,
                 const ValueFn& vb) {
  const double kb = p.kappa * p.phi_b;
  const double scale = kb / (p.r + kb);
  ValueFn v;
  v.p0 = -p.c / p.r;
  v.p1 = p.lambda_a / (p.r + p.lambda_a) * (1.0 + regime.w1 + p.c / p.r);
  v.x_low = alpha;
  v.rho = p.r / p.lambda_a;
  // Value matching at alpha; the homogeneous term is 1 there.
  v.gamma = scale * vb.value(alpha) - (v.p0 + v.p1 * alpha);
  return v;
}

SolveReport solve(const EconomyParams& params) {
  params.validate();
  SolveReport rep;
  rep.params = params;
  rep.regime = classify_regime(params);
  rep.beta = solve_beta(params, rep.regime);
  rep.vb = build_vb(params, rep.regime, rep.beta);

  const double w1 = rep.regime.w1;
  rep.diagnostics["beta_identity"] =
      std::abs(params.lambda_b * rep.beta * (1.0 + w1) - params.c);
  rep.diagnostics["vb_value_at_beta"] = std::abs(rep.vb.value(rep.beta));
  rep.diagnostics["vb_slope_at_beta"] = std::abs(rep.vb.derivative(rep.beta));

  const double scale = rep.scale_b();
  if (rep.regime.regime == Regime::LowCost) {
    rep.alpha = solve_alpha(params, rep.regime, rep.vb);
    const double a = *rep.alpha;
    rep.va = build_va(params, rep.regime, a, rep.vb);
    rep.diagnostics["alpha_fixed_point_residual"] =
        std::abs(a - (params.r * params.lambda_b * params.c +
                      params.kappa * params.phi_b * (params.lambda_b - params.lambda_a) *
                          (params.c + params.r * rep.vb.value(a))) /
                         (params.r * params.lambda_b * params.lambda_a * (1.0 + w1)));
    // Smooth pasting of v_a at alpha follows from the fixed point; assert it.
    rep.diagnostics["va_derivative_gap"] =
        std::abs(rep.va.derivative(a) - scale * rep.vb.derivative(a));
    // w is continuous across alpha by the blend identity; record the gap.
    const double ka = params.kappa * params.phi_a;
    const double kb = params.kappa * params.phi_b;
    const double w_above = (ka * rep.va.value(a) + kb * rep.vb.value(a)) / (params.r + ka + kb);
    rep.diagnostics["w_junction_alpha"] = std::abs(scale * rep.vb.value(a) - w_above);
  } else {
    rep.va = rep.vb;
    rep.va.p0 *= scale;
    rep.va.p1 *= scale;
    rep.va.gamma *= scale;
    rep.va_is_scaled_vb = true;
  }

  rep.matching = MatchingSet{rep.beta, rep.alpha};
  rep.diagnostics["w_junction_beta"] = std::abs(scale * rep.vb.value(rep.beta));
  rep.diagnostics["w1_closure"] = std::abs(rep.w(1.0) - w1);

  // The slope assertion at alpha is computed from O(1) coefficients scaled
  // by the homogeneous slope, which grows like 1/(1-alpha); its attainable
  // precision degrades accordingly near the knife edge where alpha -> 1.
  const double va_gap_bound =
      rep.alpha ? std::max(1e-8, 1e-14 / (1.0 - *rep.alpha)) : 1e-8;
  struct Limit {
    const char* name;
    double bound;
  };
  const Limit limits[] = {
      {"beta_identity", 1e-12},         {"vb_value_at_beta", 1e-12},
      {"vb_slope_at_beta", 1e-9},       {"alpha_fixed_point_residual", 1e-10},
      {"va_derivative_gap", va_gap_bound}, {"w_junction_beta", 1e-9},
      {"w_junction_alpha", 1e-9},       {"w1_closure", 1e-9},
  };
  for (const auto& lim : limits) {
    auto it = rep.diagnostics.find(lim.name);
    if (it != rep.diagnostics.end() && !(it->second <= lim.bound)) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), " = %.3e (bound %.1e)", it->second, lim.bound);
      throw std::runtime_error(std::string("solve: diagnostic failure in ") + lim.name + buf);
    }
  }
  return rep;
}

}  // namespace repsel
