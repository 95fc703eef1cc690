#include "repsel/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace repsel {

namespace {

constexpr double kAlgebraicTol = 1e-8;  // closed-form identities
constexpr double kFdTol = 1e-6;         // finite-difference comparisons
constexpr double kSlackTol = 1e-9;      // inequality slack
constexpr double kFdStep = 1e-6;
constexpr double kMembershipTol = 1e-9;

// Tracks the worst violation and where it occurred.
struct Worst {
  double value = -std::numeric_limits<double>::infinity();
  double arg = 0.0;
  void add(double v, double pi) {
    if (v > value) {
      value = v;
      arg = pi;
    }
  }
  CheckResult as_check(std::string name, double tol) const {
    const double v = std::isfinite(value) ? value : 0.0;
    return {std::move(name), v, arg, tol, v <= tol};
  }
};

double value_of(const SolveReport& rep, ProjectType q, double pi) {
  return q == ProjectType::B ? rep.vb_value(pi) : rep.va_value(pi);
}

double prime_of(const SolveReport& rep, ProjectType q, double pi) {
  return q == ProjectType::B ? rep.vb_prime(pi) : rep.va_prime(pi);
}

bool in_continuation(const SolveReport& rep, ProjectType q, double pi) {
  return rep.matching.contains(q, pi);
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

double generator_apply(const SolveReport& rep, ProjectType q, double pi) {
  const double lam = rep.params.rate(q);
  const double u = value_of(rep, q, pi);
  const double du = prime_of(rep, q, pi);
  return lam * pi * (1.0 + rep.regime.w1 - u) - lam * pi * (1.0 - pi) * du;
}

VerificationReport check_all(const SolveReport& rep, int grid_n) {
  if (grid_n < 1000) throw std::invalid_argument("check_all: grid_n must be >= 1000");

  std::vector<double> grid;
  grid.reserve(grid_n + 3);
  for (int i = 0; i <= grid_n; ++i) grid.push_back(static_cast<double>(i) / grid_n);
  grid.push_back(rep.beta);
  if (rep.alpha) grid.push_back(*rep.alpha);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const double r = rep.params.r;
  const ProjectType both[] = {ProjectType::A, ProjectType::B};

  Worst majorant, superharmonic, bellman_eq, variational, dominance;
  for (double pi : grid) {
    const double w = rep.w(pi);
    for (ProjectType q : both) {
      const double vq = value_of(rep, q, pi);
      majorant.add(w - vq, pi);
      const double residual = generator_apply(rep, q, pi) - r * vq - rep.params.c;
      superharmonic.add(residual, pi);
      if (in_continuation(rep, q, pi)) bellman_eq.add(std::abs(residual), pi);
      const double best = std::max(r * w, residual + r * vq);
      variational.add(std::abs(r * vq - best), pi);
    }
    dominance.add(rep.va_value(pi) - rep.vb_value(pi), pi);
  }

  // Value matching and smooth pasting: one-sided continuation-branch limits
  // against the stopping branch at each free boundary.
  Worst value_match, pasting;
  value_match.add(std::abs(rep.vb.value(rep.beta) - 0.0), rep.beta);
  pasting.add(std::abs(rep.vb.derivative(rep.beta) - 0.0), rep.beta);
  if (rep.alpha) {
    const double a = *rep.alpha;
    const double s = rep.scale_b();
    value_match.add(std::abs(rep.va.value(a) - s * rep.vb.value(a)), a);
    pasting.add(std::abs(rep.va.derivative(a) - s * rep.vb.derivative(a)), a);
  }

  // Central finite differences against the closed-form derivatives on
  // continuation interiors, away from the junctions and from pi = 1 where
  // the higher derivatives of the homogeneous term blow up.
  Worst fd_agree;
  {
    const double margin = 10.0 * kFdStep;
    const double hi_cut = 1.0 - 1e-3;
    auto fd_check = [&](auto&& f, auto&& fprime, double lo, double hi) {
      for (double pi : grid) {
        if (pi <= lo + margin || pi >= hi) continue;
        if (rep.alpha && std::abs(pi - *rep.alpha) <= margin) continue;
        const double fd = (f(pi + kFdStep) - f(pi - kFdStep)) / (2.0 * kFdStep);
        fd_agree.add(std::abs(fd - fprime(pi)), pi);
      }
    };
    fd_check([&](double x) { return rep.vb_value(x); },
             [&](double x) { return rep.vb_prime(x); }, rep.beta, hi_cut);
    fd_check([&](double x) { return rep.w(x); },
             [&](double x) { return rep.w_prime(x); }, rep.beta, hi_cut);
    if (rep.alpha) {
      fd_check([&](double x) { return rep.va_value(x); },
               [&](double x) { return rep.va_prime(x); }, *rep.alpha, hi_cut);
    }
  }

  // Convexity of v_b on (beta, 1]: undivided second differences over the
  // uniform part of the grid.
  Worst convexity;
  {
    const double h = 1.0 / grid_n;
    for (int i = 1; i < grid_n; ++i) {
      const double pi = static_cast<double>(i) / grid_n;
      if (pi - h <= rep.beta) continue;
      const double d2 = rep.vb_value(pi - h) - 2.0 * rep.vb_value(pi) + rep.vb_value(pi + h);
      convexity.add(-d2, pi);
    }
  }

  // Both sections must be increasing intervals: the membership indicator
  // never switches back off as pi grows.
  Worst intervals;
  for (ProjectType q : both) {
    bool seen = false;
    for (double pi : grid) {
      const bool member = value_of(rep, q, pi) > rep.w(pi) + kMembershipTol;
      if (seen && !member) intervals.add(1.0, pi);
      seen = seen || member;
    }
  }

  // Ratio bounds on the overlap of the sections.
  Worst ratio;
  if (rep.alpha) {
    const double ka = rep.params.kappa * rep.params.phi_a;
    const double kb = rep.params.kappa * rep.params.phi_b;
    const double lower = ka / (r + ka);
    const double upper = kb > 0.0 ? (r + kb) / kb : std::numeric_limits<double>::infinity();
    for (double pi : grid) {
      if (!(pi > *rep.alpha && pi < 1.0)) continue;
      const double q_ratio = rep.vb_value(pi) / rep.va_value(pi);
      ratio.add(lower - q_ratio, pi);
      if (std::isfinite(upper)) ratio.add(q_ratio - upper, pi);
    }
  }

  VerificationReport out;
  out.grid_n = grid_n;
  out.checks.push_back(majorant.as_check("majorant", kSlackTol));
  out.checks.push_back(superharmonic.as_check("superharmonic", kAlgebraicTol));
  out.checks.push_back(bellman_eq.as_check("bellman_equality_continuation", kAlgebraicTol));
  out.checks.push_back(variational.as_check("variational_consistency", kAlgebraicTol));
  out.checks.push_back(value_match.as_check("value_matching", kAlgebraicTol));
  out.checks.push_back(pasting.as_check("smooth_pasting", kFdTol));
  out.checks.push_back(fd_agree.as_check("fd_derivative_agreement", kFdTol));
  out.checks.push_back(dominance.as_check("vb_dominates_va", kSlackTol));
  out.checks.push_back(convexity.as_check("vb_convexity", kSlackTol));
  out.checks.push_back(intervals.as_check("increasing_intervals", 0.5));
  out.checks.push_back(ratio.as_check("ratio_bounds", kSlackTol));
  out.pass = std::all_of(out.checks.begin(), out.checks.end(),
                         [](const CheckResult& c) { return c.pass; });
  return out;
}

}  // namespace repsel
