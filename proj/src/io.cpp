#include "repsel/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace repsel {

using nlohmann::json;

namespace {

const char* const kParamKeys[] = {"r", "lambda_a", "lambda_b", "c", "kappa", "phi_a", "phi_b"};

json valuefn_to_json(const ValueFn& v) {
  return json{{"p0", v.p0}, {"p1", v.p1}, {"gamma", v.gamma}, {"x_low", v.x_low}, {"rho", v.rho}};
}

ValueFn valuefn_from_json(const json& j) {
  ValueFn v;
  v.p0 = j.at("p0").get<double>();
  v.p1 = j.at("p1").get<double>();
  v.gamma = j.at("gamma").get<double>();
  v.x_low = j.at("x_low").get<double>();
  v.rho = j.at("rho").get<double>();
  return v;
}

Regime regime_from_string(const std::string& s) {
  if (s == "low_cost") return Regime::LowCost;
  if (s == "high_cost") return Regime::HighCost;
  throw std::invalid_argument("unknown regime label '" + s + "'");
}

// Fixed-format numeric cell: '.' decimal point, empty for absent values.
std::string csv_cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", *v);
  return buf;
}

}  // namespace

EconomyParams params_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("params: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kParamKeys) known = known || key == k;
    if (!known) throw std::invalid_argument("params: unknown key '" + key + "'");
    if (!value.is_number()) throw std::invalid_argument("params: key '" + key + "' must be a number");
  }
  for (const char* k : kParamKeys) {
    if (!j.contains(k)) throw std::invalid_argument(std::string("params: missing key '") + k + "'");
  }
  EconomyParams p{};
  p.r = j.at("r").get<double>();
  p.lambda_a = j.at("lambda_a").get<double>();
  p.lambda_b = j.at("lambda_b").get<double>();
  p.c = j.at("c").get<double>();
  p.kappa = j.at("kappa").get<double>();
  p.phi_a = j.at("phi_a").get<double>();
  p.phi_b = j.at("phi_b").get<double>();
  p.validate();
  return p;
}

json params_to_json(const EconomyParams& p) {
  return json{{"r", p.r},         {"lambda_a", p.lambda_a}, {"lambda_b", p.lambda_b},
              {"c", p.c},         {"kappa", p.kappa},       {"phi_a", p.phi_a},
              {"phi_b", p.phi_b}};
}

json report_to_json(const SolveReport& rep) {
  json j;
  j["model"] = "learning";
  j["params"] = params_to_json(rep.params);
  j["regime"] = to_string(rep.regime.regime);
  j["w1"] = rep.regime.w1;
  j["beta"] = rep.beta;
  if (rep.alpha) j["alpha"] = *rep.alpha;
  j["vb"] = valuefn_to_json(rep.vb);
  j["va"] = valuefn_to_json(rep.va);
  j["va_is_scaled_vb"] = rep.va_is_scaled_vb;
  j["diagnostics"] = rep.diagnostics;
  return j;
}

SolveReport report_from_json(const json& j) {
  if (j.value("model", "learning") != "learning") {
    throw std::invalid_argument("report: expected a learning-model report");
  }
  SolveReport rep;
  rep.params = params_from_json(j.at("params"));
  rep.regime = {regime_from_string(j.at("regime").get<std::string>()), j.at("w1").get<double>()};
  rep.beta = j.at("beta").get<double>();
  if (j.contains("alpha")) rep.alpha = j.at("alpha").get<double>();
  rep.vb = valuefn_from_json(j.at("vb"));
  rep.va = valuefn_from_json(j.at("va"));
  rep.va_is_scaled_vb = j.value("va_is_scaled_vb", false);
  if (j.contains("diagnostics")) {
    rep.diagnostics = j.at("diagnostics").get<std::map<std::string, double>>();
  }
  rep.matching = MatchingSet{rep.beta, rep.alpha};
  return rep;
}

json benchmark_to_json(const BenchmarkReport& rep) {
  json j;
  j["model"] = "no-learning";
  j["params"] = params_to_json(rep.params);
  j["regime"] = to_string(rep.regime.regime);
  j["w1"] = rep.regime.w1;
  j["beta_hat"] = rep.beta_hat;
  if (rep.alpha_hat) j["alpha_hat"] = *rep.alpha_hat;
  j["diagnostics"] = rep.diagnostics;
  return j;
}

json comparison_to_json(const LearningComparison& cmp) {
  json j;
  j["beta"] = cmp.beta;
  j["beta_hat"] = cmp.beta_hat;
  j["beta_below_benchmark"] = cmp.beta_below_benchmark;
  if (cmp.alpha) j["alpha"] = *cmp.alpha;
  if (cmp.alpha_hat) j["alpha_hat"] = *cmp.alpha_hat;
  j["b_section_includes_benchmark"] = cmp.b_section_includes_benchmark;
  j["a_section_includes_benchmark"] = cmp.a_section_includes_benchmark;
  return j;
}

json verification_to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(json{{"name", c.name},
                          {"max_violation", c.max_violation},
                          {"worst_pi", c.worst_pi},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  }
  return json{{"grid_n", rep.grid_n}, {"pass", rep.pass}, {"checks", checks}};
}

json oracle_comparison_to_json(const OracleComparison& cmp, const GridSolution& grid) {
  json j;
  j["n_grid"] = grid.n_grid;
  j["dt"] = grid.dt;
  j["iterations"] = grid.iterations;
  j["sup_delta"] = grid.sup_delta;
  j["err_w"] = cmp.err_w;
  j["err_va"] = cmp.err_va;
  j["err_vb"] = cmp.err_vb;
  j["beta_cells"] = cmp.beta_cells;
  if (cmp.alpha_cells) j["alpha_cells"] = *cmp.alpha_cells;
  j["alpha_presence_agrees"] = cmp.alpha_presence_agrees;
  return j;
}

json sim_result_to_json(const SimResult& res) {
  return json{{"mean", res.mean},
              {"std_error", res.std_error},
              {"n_paths", res.n_paths},
              {"mean_successes", res.mean_successes},
              {"mean_matches", res.mean_matches},
              {"mean_final_belief", res.mean_final_belief},
              {"theta_high_fraction", res.theta_high_fraction},
              {"truncation_bound", res.truncation_bound},
              {"truncated_paths", res.truncated_paths},
              {"exhausted_paths", res.exhausted_paths}};
}

json dominance_to_json(const DominanceTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row{{"label", r.label},
             {"threshold_b", r.policy.threshold_b},
             {"mean", r.mean},
             {"mean_diff", r.mean_diff},
             {"se_diff", r.se_diff},
             {"beats_optimal", r.beats_optimal}};
    if (r.policy.threshold_a) row["threshold_a"] = *r.policy.threshold_a;
    rows.push_back(std::move(row));
  }
  return json{{"optimal_mean", table.optimal_mean},
              {"optimal_se", table.optimal_se},
              {"any_beats_optimal", table.any_beats_optimal},
              {"rows", rows}};
}

Policy policy_from_report_json(const json& j) {
  Policy pol;
  pol.threshold_b = j.at("beta").get<double>();
  if (j.contains("alpha")) pol.threshold_a = j.at("alpha").get<double>();
  pol.validate();
  return pol;
}

void write_curve_csv(std::ostream& os, const SolveReport& rep, int n) {
  os << "pi,w,v_a,v_b\n";
  for (int i = 0; i <= n; ++i) {
    const double pi = static_cast<double>(i) / n;
    os << csv_cell(pi) << ',' << csv_cell(rep.w(pi)) << ',' << csv_cell(rep.va_value(pi))
       << ',' << csv_cell(rep.vb_value(pi)) << '\n';
  }
}

void write_curve_csv(std::ostream& os, const BenchmarkReport& rep, int n) {
  os << "pi,w,v_a,v_b\n";
  for (int i = 0; i <= n; ++i) {
    const double pi = static_cast<double>(i) / n;
    os << csv_cell(pi) << ',' << csv_cell(rep.w(pi)) << ','
       << csv_cell(rep.v(ProjectType::A, pi)) << ',' << csv_cell(rep.v(ProjectType::B, pi))
       << '\n';
  }
}

void write_curve_csv(std::ostream& os, const GridSolution& grid) {
  os << "pi,W,V_a,V_b\n";
  for (std::size_t i = 0; i < grid.pi.size(); ++i) {
    os << csv_cell(grid.pi[i]) << ',' << csv_cell(grid.W[i]) << ',' << csv_cell(grid.V_a[i])
       << ',' << csv_cell(grid.V_b[i]) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "value,regime,w1,beta,alpha,beta_hat,alpha_hat,error\n";
  for (const auto& r : rows) {
    os << csv_cell(r.value) << ',';
    os << (r.regime ? to_string(*r.regime) : "") << ',';
    os << csv_cell(r.w1) << ',' << csv_cell(r.beta) << ',' << csv_cell(r.alpha) << ','
       << csv_cell(r.beta_hat) << ',' << csv_cell(r.alpha_hat) << ',';
    os << r.error << '\n';
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

}  // namespace repsel
