// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its own tolerances and runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "repsel/benchmark.hpp"
#include "repsel/io.hpp"
#include "repsel/oracle.hpp"
#include "repsel/simulator.hpp"
#include "repsel/solver.hpp"
#include "repsel/sweep.hpp"
#include "repsel/ushape.hpp"
#include "repsel/verifier.hpp"
#include "test_support.hpp"

using namespace repsel;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool approx(double x, double target, double tol, std::string& why, const char* label) {
  if (std::abs(x - target) <= tol) return true;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s = %.9g, wanted %.9g +- %.1e; ", label, x, target, tol);
  why += buf;
  return false;
}

bool require(bool ok, std::string& why, const std::string& message) {
  if (!ok) why += message + "; ";
  return ok;
}

// --- 1: baseline constants of the learning model ---
bool criterion1(std::string& why) {
  const SolveReport rep = solve(testing::lowcost_base_params());
  bool ok = require(rep.regime.regime == Regime::LowCost, why, "regime must be low cost");
  ok &= approx(rep.regime.w1, 0.1967, 1e-4, why, "w(1)");
  ok &= approx(rep.beta, 0.334252, 1e-4, why, "beta");
  if (rep.alpha) {
    ok &= approx(*rep.alpha, 0.646471, 1e-4, why, "alpha");
    ok &= approx(rep.vb_value(*rep.alpha), 0.170859, 1e-4, why, "v_b(alpha)");
  } else {
    ok = require(false, why, "alpha missing");
  }
  return ok;
}

// --- 2: baseline constants of the no-learning benchmark ---
bool criterion2(std::string& why) {
  const BenchmarkReport rep = solve_no_learning(testing::benchmark_base_params());
  bool ok = approx(rep.beta_hat, 0.157895, 1e-6, why, "beta_hat");
  if (rep.alpha_hat) {
    ok &= approx(*rep.alpha_hat, 0.648248, 1e-4, why, "alpha_hat");
    const double residual = std::abs(rep.params.lambda_a * *rep.alpha_hat - rep.params.c -
                                     rep.params.r * rep.w_ab_branch(*rep.alpha_hat));
    ok &= require(residual < 1e-6, why,
                  "indifference residual " + std::to_string(residual) + " >= 1e-6");
  } else {
    ok = require(false, why, "alpha_hat missing");
  }
  return ok;
}

// --- 3: verifier certification on the baseline and 20 sampled parameter sets ---
bool criterion3(std::string& why) {
  std::vector<EconomyParams> sets{testing::lowcost_base_params()};
  for (const auto& p : testing::acceptance_sample()) sets.push_back(p);
  bool ok = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const VerificationReport ver = check_all(solve(sets[i]), 10000);
    if (!ver.pass) {
      for (const auto& c : ver.checks) {
        if (!c.pass) {
          why += "set " + std::to_string(i) + " failed " + c.name + " (violation " +
                 std::to_string(c.max_violation) + "); ";
        }
      }
      ok = false;
    }
  }
  return ok;
}

// --- 4: grid-oracle equivalence and first-order convergence ---
bool criterion4(std::string& why) {
  const SolveReport rep = solve(testing::lowcost_base_params());
  const GridSolution coarse = value_iteration(testing::lowcost_base_params(), 4000, 1e-3, 1e-10);
  const OracleComparison cc = compare(coarse, rep);
  bool ok = require(cc.max_err() < 1e-2, why,
                    "sup-norm error " + std::to_string(cc.max_err()) + " >= 1e-2");

  // Boundary localization: the closed-form boundary must lie within one
  // grid cell of the extraction cell (pi[idx-1], pi[idx]].
  auto cell_ok = [&](int idx, double target, const char* label) {
    const double h = 1.0 / coarse.n_grid;
    if (idx < 1) {
      why += std::string(label) + " not extracted; ";
      return false;
    }
    const double lo = coarse.pi[idx - 1] - h;
    const double hi = coarse.pi[idx] + h;
    if (target >= lo && target <= hi) return true;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s=%.6f outside cell window [%.6f, %.6f]; ", label, target,
                  lo, hi);
    why += buf;
    return false;
  };
  ok &= cell_ok(coarse.beta_index, rep.beta, "beta");
  ok &= cell_ok(coarse.alpha_index, *rep.alpha, "alpha");

  const OracleComparison fc =
      compare(value_iteration(testing::lowcost_base_params(), 8000, 5e-4, 1e-10), rep);
  ok &= require(cc.err_w / fc.err_w >= 1.5, why, "err_w shrink < 1.5x");
  ok &= require(cc.err_va / fc.err_va >= 1.5, why, "err_va shrink < 1.5x");
  ok &= require(cc.err_vb / fc.err_vb >= 1.5, why, "err_vb shrink < 1.5x");
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "errs %.2e/%.2e/%.2e, boundary offsets %.2f/%.2f cells, shrink %.2fx",
                cc.err_w, cc.err_va, cc.err_vb, cc.beta_cells,
                cc.alpha_cells.value_or(-1.0), cc.err_w / fc.err_w);
  why += buf;  // informational even on pass
  return ok;
}

// --- 5: Monte-Carlo validation and policy dominance ---
bool criterion5(std::string& why) {
  const SolveReport rep = solve(testing::lowcost_base_params());
  const Policy pol = Policy::from_report(rep);
  SimConfig cfg;
  cfg.n_paths = 100000;
  cfg.seed = 1;
  cfg.eps = 1e-10;
  bool ok = true;
  for (double pi0 : {0.4, 0.6, 0.8, 1.0}) {
    cfg.pi0 = pi0;
    const SimResult res = simulate(testing::lowcost_base_params(), pol, cfg);
    const double target = rep.w(pi0);
    char buf[200];
    std::snprintf(buf, sizeof(buf), "pi0=%.1f mean=%.6f target=%.6f se=%.2e; ", pi0, res.mean,
                  target, res.std_error);
    why += buf;
    ok &= require(std::abs(res.mean - target) <= 3.0 * res.std_error, why,
                  "gap exceeds 3 SE at pi0=" + std::to_string(pi0));
    ok &= require(res.std_error < 0.01, why, "SE >= 0.01 at pi0=" + std::to_string(pi0));
  }
  cfg.pi0 = 0.8;
  const DominanceTable table =
      policy_dominance(testing::lowcost_base_params(), rep, {0.05, -0.05, 0.1, -0.1}, cfg);
  for (const auto& row : table.rows) {
    ok &= require(!row.beats_optimal, why, row.label + " beats the optimal policy by > 3 SE");
  }
  return ok;
}

// --- 6: comparative statics at desk scale ---
bool criterion6(std::string& why) {
  auto strictly = [&](const std::vector<SweepRow>& rows, bool up, bool hat,
                      const char* label) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (!rows[i].ok || !rows[i - 1].ok) {
        why += std::string(label) + " has failed rows; ";
        return false;
      }
      const double prev = hat ? *rows[i - 1].alpha_hat : *rows[i - 1].beta;
      const double cur = hat ? *rows[i].alpha_hat : *rows[i].beta;
      if (up ? (cur <= prev) : (cur >= prev)) {
        why += std::string(label) + " not strictly monotone at index " + std::to_string(i) +
               "; ";
        return false;
      }
    }
    return true;
  };
  bool ok = strictly(
      run_sweep({testing::lowcost_base_params(), "kappa", 0.01, 1.45, 100, SweepModel::Learning}),
      false, false, "beta(kappa)");
  ok &= strictly(run_sweep({testing::lowcost_base_params(), "c", 0.7, 1.7, 100, SweepModel::Learning}),
                 true, false, "beta(c)");
  ok &= strictly(run_sweep({testing::lowcost_base_params(), "r", 0.3, 2.0, 100, SweepModel::Learning}),
                 true, false, "beta(r)");
  ok &= strictly(
      run_sweep({testing::benchmark_base_params(), "kappa", 0.2, 4.0, 100, SweepModel::NoLearning}), true,
      true, "alpha_hat(kappa)");
  return ok;
}

// --- 7: the committed U-shape witness re-runs green ---
bool criterion7(std::string& why) {
  const auto fixture =
      load_json_file(std::string(REPSEL_FIXTURE_DIR) + "/ushape_witness.json");
  const UshapeEvaluation eval = evaluate_ushape_witness(ushape_witness_from_json(fixture));
  bool ok = require(eval.all_low_cost, why, "witness leaves the low cost regime");
  ok &= require(eval.verdict.shape == Shape::UShaped, why,
                std::string("shape classified as ") + to_string(eval.verdict.shape));
  if (eval.verdict.arg_extreme) {
    const int argmin = *eval.verdict.arg_extreme;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "argmin index %d of %zu; ", argmin, eval.alpha.size());
    why += buf;
    ok &= require(argmin > 0 && argmin + 1 < static_cast<int>(eval.alpha.size()), why,
                  "argmin not strictly interior");
  } else {
    ok = require(false, why, "no argmin reported");
  }
  return ok;
}

// --- 8: learning vs no-learning boundary comparison ---
bool criterion8(std::string& why) {
  bool ok = true;
  int idx = 0;
  for (const auto& p : testing::acceptance_sample()) {
    const LearningComparison cmp = compare_learning(p);
    ok &= require(cmp.beta < cmp.beta_hat, why,
                  "beta !< beta_hat at sampled set " + std::to_string(idx));
    ++idx;
  }
  EconomyParams frozen = testing::lowcost_base_params();
  frozen.kappa = 0.0;
  const LearningComparison cmp = compare_learning(frozen);
  ok &= require(std::abs(cmp.beta - cmp.beta_hat) <= 1e-10, why, "kappa=0 equality violated");
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "baseline constants, learning model", 1.0, criterion1},
      {2, "baseline constants, no-learning benchmark", 1.0, criterion2},
      {3, "verifier certification on 21 parameter sets", 10.0, criterion3},
      {4, "grid-oracle equivalence and convergence order", 60.0, criterion4},
      {5, "Monte-Carlo validation and policy dominance", 120.0, criterion5},
      {6, "comparative statics monotonicity", 10.0, criterion6},
      {7, "U-shaped alpha(kappa) witness", 30.0, criterion7},
      {8, "learning vs no-learning boundaries", 60.0, criterion8},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      ok = false;
      detail += " runtime " + std::to_string(seconds) + "s over budget " +
                std::to_string(c.budget_seconds) + "s";
    }
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    failures += ok ? 0 : 1;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
