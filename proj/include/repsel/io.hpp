#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "repsel/benchmark.hpp"
#include "repsel/economy.hpp"
#include "repsel/oracle.hpp"
#include "repsel/simulator.hpp"
#include "repsel/solver.hpp"
#include "repsel/sweep.hpp"
#include "repsel/verifier.hpp"

namespace repsel {

// Parameters are a flat JSON object with exactly the keys
// r, lambda_a, lambda_b, c, kappa, phi_a, phi_b; unknown keys are rejected.
EconomyParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const EconomyParams& p);

nlohmann::json report_to_json(const SolveReport& rep);
SolveReport report_from_json(const nlohmann::json& j);

nlohmann::json benchmark_to_json(const BenchmarkReport& rep);
nlohmann::json comparison_to_json(const LearningComparison& cmp);
nlohmann::json verification_to_json(const VerificationReport& rep);
nlohmann::json oracle_comparison_to_json(const OracleComparison& cmp, const GridSolution& grid);
nlohmann::json sim_result_to_json(const SimResult& res);
nlohmann::json dominance_to_json(const DominanceTable& table);

/// Reads policy thresholds out of a solve-report JSON object.
Policy policy_from_report_json(const nlohmann::json& j);

/// N+1 rows sampled uniformly on [0,1] with columns pi,w,v_a,v_b.
void write_curve_csv(std::ostream& os, const SolveReport& rep, int n);
/// Benchmark version of the same curve (columns pi,w,v_a,v_b).
void write_curve_csv(std::ostream& os, const BenchmarkReport& rep, int n);
/// Grid-oracle dump (columns pi,W,V_a,V_b).
void write_curve_csv(std::ostream& os, const GridSolution& grid);

/// Sweep rows; absent values become empty fields, skipped rows keep their
/// parameter value and carry the reason in the last column.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace repsel
