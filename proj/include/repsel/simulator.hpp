#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repsel/economy.hpp"
#include "repsel/solver.hpp"

namespace repsel {

/// Threshold policy: accept / keep a q-match iff the current belief is
/// strictly above threshold_q. An absent threshold_a means a-projects are
/// never accepted. Belief exactly at a threshold counts as rejection.
struct Policy {
  std::optional<double> threshold_a;
  double threshold_b = 0.0;

  void validate() const;
  static Policy from_report(const SolveReport& report) {
    return Policy{report.alpha, report.beta};
  }
};

struct SimConfig {
  double pi0 = 0.5;
  std::int64_t n_paths = 10000;
  std::uint64_t seed = 0;
  double eps = 1e-10;  // discount truncation: a path stops once e^{-rt} < eps
  std::int64_t max_events = 1000000;

  void validate() const;
};

/// Aggregated Monte-Carlo estimate of the lifetime discounted payoff under
/// a threshold policy, with per-path summary statistics.
struct SimResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_paths = 0;
  double mean_successes = 0.0;
  double mean_matches = 0.0;
  double mean_final_belief = 0.0;
  double theta_high_fraction = 0.0;  // empirical mean of the latent type draw
  double truncation_bound = 0.0;     // bound on the discarded tail payoff per path
  std::int64_t truncated_paths = 0;
  std::int64_t exhausted_paths = 0;  // hit max_events; reported, not fatal
};

struct PathOutcome {
  double payoff = 0.0;
  std::int32_t successes = 0;
  std::int32_t matches = 0;
  double final_belief = 0.0;
  bool theta_high = false;
  bool truncated = false;
  bool exhausted = false;
};

/// Simulates the meet/select/stop cycle path by path. Each path derives its
/// own RNG substream from (seed, path index), so results are bit-identical
/// for any worker count; n_threads = 0 picks the hardware default.
/// Discounted flow costs are integrated in closed form between events, so
/// there is no time-discretization error.
SimResult simulate(const EconomyParams& params, const Policy& policy, const SimConfig& config,
                   int n_threads = 0);

/// Same simulation, returning the per-path outcomes (in path order).
std::vector<PathOutcome> simulate_paths(const EconomyParams& params, const Policy& policy,
                                        const SimConfig& config, int n_threads = 0);

struct DominanceRow {
  std::string label;
  Policy policy;
  double mean = 0.0;
  double mean_diff = 0.0;  // candidate minus optimal, under common random numbers
  double se_diff = 0.0;
  bool beats_optimal = false;  // mean_diff > 3 se_diff
};

struct DominanceTable {
  double optimal_mean = 0.0;
  double optimal_se = 0.0;
  std::vector<DominanceRow> rows;
  bool any_beats_optimal = false;
};

/// Simulates the report's optimal policy against perturbed thresholds
/// (each shift applied to beta and to alpha separately) plus the
/// ignore-a-projects policy, all under common random numbers. Perturbations
/// that leave (0,1) are skipped.
DominanceTable policy_dominance(const EconomyParams& params, const SolveReport& report,
                                const std::vector<double>& perturbations,
                                const SimConfig& config, int n_threads = 0);

}  // namespace repsel
