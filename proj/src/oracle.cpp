#include "repsel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace repsel {

namespace {

constexpr double kTieTolerance = 1e-7;  // value units, for boundary extraction
constexpr double kMaxStepProb = 0.1;

int first_exceeding(const std::vector<double>& v, const std::vector<double>& w) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > w[i] + kTieTolerance) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

GridSolution value_iteration(const EconomyParams& p, int n_grid, double dt, double tol,
                             int max_iter) {
  p.validate();
  if (n_grid < 1000) throw std::invalid_argument("value_iteration: n_grid must be >= 1000");
  if (!(dt > 0.0) || !(tol > 0.0)) throw std::invalid_argument("value_iteration: dt and tol must be > 0");
  const double meet_a = p.kappa * p.phi_a * dt;
  const double meet_b = p.kappa * p.phi_b * dt;
  if (meet_a + meet_b > kMaxStepProb || p.lambda_b * dt > kMaxStepProb) {
    throw std::invalid_argument("value_iteration: dt too large, per-step probabilities exceed 0.1");
  }

  const int n = n_grid + 1;
  GridSolution g;
  g.params = p;
  g.n_grid = n_grid;
  g.dt = dt;
  g.tol = tol;
  g.tie_tolerance = kTieTolerance;
  g.pi.resize(n);
  for (int i = 0; i < n; ++i) g.pi[i] = static_cast<double>(i) / n_grid;

  // Belief transport under decay is time-invariant: precompute, per project
  // type, the interpolation target of each grid point after one step.
  struct Transport {
    std::vector<int> idx;
    std::vector<double> hi_weight;
  };
  auto make_transport = [&](double lambda) {
    Transport t;
    t.idx.resize(n);
    t.hi_weight.resize(n);
    for (int i = 0; i < n; ++i) {
      const double target = belief_decay(g.pi[i], lambda, dt);
      int j = static_cast<int>(std::floor(target * n_grid));
      if (j >= n_grid) j = n_grid - 1;
      t.idx[i] = j;
      t.hi_weight[i] = target * n_grid - j;
    }
    return t;
  };
  const Transport ta = make_transport(p.lambda_a);
  const Transport tb = make_transport(p.lambda_b);

  const double disc = std::exp(-p.r * dt);
  // Within-step payments (flow cost, success reward, meeting surplus) land
  // at the expected event time, mid-step; carried-over values get the full
  // per-step discount.
  const double mid = std::exp(-0.5 * p.r * dt);
  const double cost = p.c * dt * mid;

  std::vector<double> W(n, 0.0), Va(n, 0.0), Vb(n, 0.0);
  std::vector<double> Wn(n), Van(n), Vbn(n);

  int it = 0;
  double delta = 0.0;
  for (it = 1; it <= max_iter; ++it) {
    const double reward = mid * (1.0 + W[n - 1]);
    delta = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w_i = W[i];
      Wn[i] = disc * w_i + mid * (meet_a * (std::max(w_i, Va[i]) - w_i) +
                                  meet_b * (std::max(w_i, Vb[i]) - w_i));

      const double pa = p.lambda_a * g.pi[i] * dt;
      const double va_next = (1.0 - ta.hi_weight[i]) * Va[ta.idx[i]] +
                             ta.hi_weight[i] * Va[ta.idx[i] + 1];
      Van[i] = std::max(w_i, -cost + pa * reward + disc * (1.0 - pa) * va_next);

      const double pb = p.lambda_b * g.pi[i] * dt;
      const double vb_next = (1.0 - tb.hi_weight[i]) * Vb[tb.idx[i]] +
                             tb.hi_weight[i] * Vb[tb.idx[i] + 1];
      Vbn[i] = std::max(w_i, -cost + pb * reward + disc * (1.0 - pb) * vb_next);

      delta = std::max(delta, std::abs(Wn[i] - w_i));
      delta = std::max(delta, std::abs(Van[i] - Va[i]));
      delta = std::max(delta, std::abs(Vbn[i] - Vb[i]));
    }
    W.swap(Wn);
    Va.swap(Van);
    Vb.swap(Vbn);
    if (delta < tol) break;
  }
  if (delta >= tol) {
    throw std::runtime_error("value_iteration: no convergence in " + std::to_string(max_iter) +
                             " sweeps, last delta = " + std::to_string(delta));
  }

  g.W = std::move(W);
  g.V_a = std::move(Va);
  g.V_b = std::move(Vb);
  g.iterations = it;
  g.sup_delta = delta;
  g.beta_index = first_exceeding(g.V_b, g.W);
  g.alpha_index = first_exceeding(g.V_a, g.W);
  return g;
}

OracleComparison compare(const GridSolution& g, const SolveReport& rep) {
  if (!(g.params == rep.params)) {
    throw std::invalid_argument("compare: grid solution and report were produced from different parameters");
  }
  OracleComparison cmp;
  for (std::size_t i = 0; i < g.pi.size(); ++i) {
    const double pi = g.pi[i];
    cmp.err_w = std::max(cmp.err_w, std::abs(g.W[i] - rep.w(pi)));
    cmp.err_va = std::max(cmp.err_va, std::abs(g.V_a[i] - rep.va_value(pi)));
    cmp.err_vb = std::max(cmp.err_vb, std::abs(g.V_b[i] - rep.vb_value(pi)));
  }
  const double h = 1.0 / g.n_grid;
  cmp.beta_cells = g.beta_index >= 0
                       ? std::abs(g.pi[g.beta_index] - rep.beta) / h
                       : std::numeric_limits<double>::infinity();
  cmp.alpha_presence_agrees = (g.alpha_index >= 0) == rep.alpha.has_value();
  if (g.alpha_index >= 0 && rep.alpha) {
    cmp.alpha_cells = std::abs(g.pi[g.alpha_index] - *rep.alpha) / h;
  }
  return cmp;
}

}  // namespace repsel
