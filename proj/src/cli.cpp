#include "repsel/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repsel/benchmark.hpp"
#include "repsel/io.hpp"
#include "repsel/oracle.hpp"
#include "repsel/simulator.hpp"
#include "repsel/solver.hpp"
#include "repsel/sweep.hpp"
#include "repsel/ushape.hpp"
#include "repsel/verifier.hpp"

namespace repsel {

namespace {

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << std::endl;
  } else {
    save_json_file(out_path, j);
  }
}

SweepModel parse_model(const std::string& s) {
  if (s == "learning") return SweepModel::Learning;
  if (s == "no-learning") return SweepModel::NoLearning;
  if (s == "both") return SweepModel::Both;
  throw std::runtime_error("unknown model '" + s + "'");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Optimal project selection under reputation learning: closed-form solver, "
               "verifier, grid oracle, Monte-Carlo simulator and comparative statics"};
  app.require_subcommand(1);

  // --- solve ---
  auto* solve_cmd = app.add_subcommand("solve", "solve the model at given parameters");
  std::string solve_params, solve_out, solve_model = "learning", solve_curve_out = "curve.csv";
  int solve_curve_n = 0;
  solve_cmd->add_option("--params", solve_params, "parameters JSON file")->required();
  solve_cmd->add_option("--out", solve_out, "write the report JSON here (default: stdout)");
  solve_cmd->add_option("--model", solve_model, "learning | no-learning");
  solve_cmd->add_option("--emit-curve", solve_curve_n, "also write an N-row value-function CSV");
  solve_cmd->add_option("--curve-out", solve_curve_out, "path of the curve CSV");

  // --- verify ---
  auto* verify_cmd = app.add_subcommand("verify", "certify a solve report");
  std::string verify_report, verify_out;
  int verify_grid = 10000;
  verify_cmd->add_option("--report", verify_report, "report JSON file")->required();
  verify_cmd->add_option("--grid", verify_grid, "grid size (>= 1000)");
  verify_cmd->add_option("--out", verify_out, "write the verification JSON here");

  // --- oracle ---
  auto* oracle_cmd = app.add_subcommand("oracle", "independent grid dynamic program");
  std::string oracle_params, oracle_compare, oracle_out, oracle_csv;
  int oracle_n = 4000, oracle_max_iter = 2000000;
  double oracle_dt = 1e-3, oracle_tol = 1e-10;
  oracle_cmd->add_option("--params", oracle_params, "parameters JSON file")->required();
  oracle_cmd->add_option("--n-grid", oracle_n, "number of belief grid cells");
  oracle_cmd->add_option("--dt", oracle_dt, "time step");
  oracle_cmd->add_option("--tol", oracle_tol, "sup-norm convergence tolerance");
  oracle_cmd->add_option("--max-iter", oracle_max_iter, "iteration cap");
  oracle_cmd->add_option("--compare", oracle_compare, "closed-form report JSON to compare against");
  oracle_cmd->add_option("--out", oracle_out, "write the error-report JSON here");
  oracle_cmd->add_option("--csv", oracle_csv, "dump the converged grid as CSV");

  // --- simulate ---
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo simulation of a threshold policy");
  std::string sim_params, sim_policy, sim_out, sim_perturb;
  SimConfig sim_cfg;
  sim_cfg.pi0 = 0.8;
  sim_cfg.n_paths = 100000;
  sim_cfg.seed = 42;
  bool sim_dominance = false;
  int sim_threads = 0;
  sim_cmd->add_option("--params", sim_params, "parameters JSON file")->required();
  sim_cmd->add_option("--policy", sim_policy, "solve-report JSON holding the thresholds")->required();
  sim_cmd->add_option("--pi0", sim_cfg.pi0, "initial belief");
  sim_cmd->add_option("--paths", sim_cfg.n_paths, "number of simulated paths");
  sim_cmd->add_option("--seed", sim_cfg.seed, "RNG seed");
  sim_cmd->add_option("--eps", sim_cfg.eps, "discount truncation threshold");
  sim_cmd->add_option("--max-events", sim_cfg.max_events, "per-path event cap");
  sim_cmd->add_option("--threads", sim_threads, "worker threads (0 = auto)");
  sim_cmd->add_flag("--dominance", sim_dominance, "run the policy-dominance table instead");
  sim_cmd->add_option("--perturb", sim_perturb,
                      "comma-separated threshold shifts for --dominance "
                      "(default 0.05,-0.05,0.1,-0.1)");
  sim_cmd->add_option("--out", sim_out, "write the result JSON here");

  // --- sweep ---
  auto* sweep_cmd = app.add_subcommand("sweep", "comparative statics over one parameter");
  std::string sweep_params, sweep_param, sweep_model = "learning", sweep_out;
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 0;
  sweep_cmd->add_option("--params", sweep_params, "base parameters JSON file")->required();
  sweep_cmd->add_option("--param", sweep_param, "swept parameter name")->required();
  sweep_cmd->add_option("--from", sweep_from, "grid start")->required();
  sweep_cmd->add_option("--to", sweep_to, "grid end")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "number of grid points")->required();
  sweep_cmd->add_option("--model", sweep_model, "learning | no-learning | both");
  sweep_cmd->add_option("--out", sweep_out, "write the CSV here (default: stdout)");

  // --- compare ---
  auto* cmp_cmd = app.add_subcommand("compare", "learning vs no-learning boundaries");
  std::string cmp_params, cmp_out;
  cmp_cmd->add_option("--params", cmp_params, "parameters JSON file")->required();
  cmp_cmd->add_option("--out", cmp_out, "write the comparison JSON here");

  // --- search-ushape ---
  auto* ushape_cmd = app.add_subcommand(
      "search-ushape", "search parameter boxes for a U-shaped alpha(kappa) response");
  std::string ushape_out;
  double ushape_from = 0.02, ushape_to = 1.45;
  int ushape_steps = 40;
  ushape_cmd->add_option("--out", ushape_out, "write the witness fixture JSON here");
  ushape_cmd->add_option("--kappa-from", ushape_from, "kappa grid start");
  ushape_cmd->add_option("--kappa-to", ushape_to, "kappa grid end");
  ushape_cmd->add_option("--steps", ushape_steps, "kappa grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve_cmd) {
      const EconomyParams p = params_from_json(load_json_file(solve_params));
      if (solve_model == "no-learning") {
        const BenchmarkReport rep = solve_no_learning(p);
        emit(benchmark_to_json(rep), solve_out);
        if (solve_curve_n > 0) {
          std::ofstream os(solve_curve_out);
          write_curve_csv(os, rep, solve_curve_n);
        }
      } else if (solve_model == "learning") {
        const SolveReport rep = solve(p);
        emit(report_to_json(rep), solve_out);
        if (solve_curve_n > 0) {
          std::ofstream os(solve_curve_out);
          write_curve_csv(os, rep, solve_curve_n);
        }
      } else {
        throw std::runtime_error("unknown model '" + solve_model + "'");
      }
      return 0;
    }

    if (*verify_cmd) {
      const SolveReport rep = report_from_json(load_json_file(verify_report));
      const VerificationReport ver = check_all(rep, verify_grid);
      emit(verification_to_json(ver), verify_out);
      if (!ver.pass) {
        for (const auto& c : ver.checks) {
          if (!c.pass) {
            std::cerr << "check failed: " << c.name << " violation " << c.max_violation
                      << " at pi = " << c.worst_pi << "\n";
          }
        }
      }
      return ver.pass ? 0 : 1;
    }

    if (*oracle_cmd) {
      const EconomyParams p = params_from_json(load_json_file(oracle_params));
      const GridSolution grid =
          value_iteration(p, oracle_n, oracle_dt, oracle_tol, oracle_max_iter);
      if (!oracle_csv.empty()) {
        std::ofstream os(oracle_csv);
        write_curve_csv(os, grid);
      }
      if (!oracle_compare.empty()) {
        const SolveReport rep = report_from_json(load_json_file(oracle_compare));
        const OracleComparison cmp = compare(grid, rep);
        emit(oracle_comparison_to_json(cmp, grid), oracle_out);
      } else {
        nlohmann::json j{{"n_grid", grid.n_grid},
                         {"dt", grid.dt},
                         {"iterations", grid.iterations},
                         {"sup_delta", grid.sup_delta}};
        if (grid.beta_numeric()) j["beta_numeric"] = *grid.beta_numeric();
        if (grid.alpha_numeric()) j["alpha_numeric"] = *grid.alpha_numeric();
        emit(j, oracle_out);
      }
      return 0;
    }

    if (*sim_cmd) {
      const EconomyParams p = params_from_json(load_json_file(sim_params));
      const nlohmann::json policy_json = load_json_file(sim_policy);
      if (sim_dominance) {
        const SolveReport rep = report_from_json(policy_json);
        std::vector<double> shifts{0.05, -0.05, 0.1, -0.1};
        if (!sim_perturb.empty()) {
          shifts.clear();
          std::stringstream ss(sim_perturb);
          std::string tok;
          while (std::getline(ss, tok, ',')) shifts.push_back(std::stod(tok));
        }
        const DominanceTable table = policy_dominance(p, rep, shifts, sim_cfg, sim_threads);
        emit(dominance_to_json(table), sim_out);
        return table.any_beats_optimal ? 1 : 0;
      }
      const Policy pol = policy_from_report_json(policy_json);
      const SimResult res = simulate(p, pol, sim_cfg, sim_threads);
      emit(sim_result_to_json(res), sim_out);
      return 0;
    }

    if (*sweep_cmd) {
      SweepSpec spec;
      spec.base = params_from_json(load_json_file(sweep_params));
      spec.param = sweep_param;
      spec.from = sweep_from;
      spec.to = sweep_to;
      spec.steps = sweep_steps;
      spec.model = parse_model(sweep_model);
      const auto rows = run_sweep(spec);
      if (sweep_out.empty()) {
        write_sweep_csv(std::cout, rows);
      } else {
        std::ofstream os(sweep_out);
        if (!os) throw std::runtime_error("cannot open '" + sweep_out + "' for writing");
        write_sweep_csv(os, rows);
      }
      return 0;
    }

    if (*cmp_cmd) {
      const EconomyParams p = params_from_json(load_json_file(cmp_params));
      emit(comparison_to_json(compare_learning(p)), cmp_out);
      return 0;
    }

    if (*ushape_cmd) {
      const auto witness = search_ushape_witness(ushape_from, ushape_to, ushape_steps);
      if (!witness) {
        std::cerr << "no U-shaped alpha(kappa) configuration found in the search box\n";
        return 1;
      }
      emit(ushape_witness_to_json(*witness), ushape_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace repsel
