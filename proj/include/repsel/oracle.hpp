#pragma once

#include <optional>
#include <vector>

#include "repsel/economy.hpp"
#include "repsel/solver.hpp"

namespace repsel {

/// Converged discrete-time dynamic program on a uniform belief grid: the
/// independent brute-force check of the closed-form solution. W is the
/// unmatched value, V_a / V_b the matched values.
struct GridSolution {
  EconomyParams params;
  int n_grid = 0;  // number of cells; arrays hold n_grid + 1 points
  double dt = 0.0;
  double tol = 0.0;
  double tie_tolerance = 0.0;
  std::vector<double> pi;
  std::vector<double> W;
  std::vector<double> V_a;
  std::vector<double> V_b;
  int beta_index = -1;   // first grid index with V_b > W + tie_tolerance, -1 if none
  int alpha_index = -1;  // same for V_a
  int iterations = 0;
  double sup_delta = 0.0;

  std::optional<double> beta_numeric() const {
    return beta_index >= 0 ? std::optional<double>(pi[beta_index]) : std::nullopt;
  }
  std::optional<double> alpha_numeric() const {
    return alpha_index >= 0 ? std::optional<double>(pi[alpha_index]) : std::nullopt;
  }
};

/// Value iteration for the coupled (W, V_a, V_b) fixed point, built only
/// from the model primitives: per step of length dt the unmatched agent
/// meets a q-project with probability kappa*phi_q*dt and takes
/// max(W, V_q); the matched agent pays c*dt, succeeds with probability
/// lambda_q*pi*dt (collecting 1 + W(1)), otherwise her belief decays by
/// the closed-form posterior dynamics (linearly interpolated back onto the
/// grid), with the option to quit into W first. Discount e^{-r dt} per
/// step. Iterates from zero until the sup-norm change drops below tol.
///
/// Requires every per-step event probability <= 0.1 and n_grid >= 1000;
/// throws on non-convergence within max_iter.
GridSolution value_iteration(const EconomyParams& params, int n_grid, double dt, double tol,
                             int max_iter = 2000000);

/// Sup-norm distances between a grid solution and the closed forms of a
/// SolveReport at the same parameters (throws if the parameters differ),
/// plus boundary discrepancies measured in grid cells.
struct OracleComparison {
  double err_w = 0.0;
  double err_va = 0.0;
  double err_vb = 0.0;
  double max_err() const { return std::max(err_w, std::max(err_va, err_vb)); }
  double beta_cells = 0.0;
  std::optional<double> alpha_cells;  // absent when both sides have no a-section
  bool alpha_presence_agrees = true;
};

OracleComparison compare(const GridSolution& grid, const SolveReport& report);

}  // namespace repsel
