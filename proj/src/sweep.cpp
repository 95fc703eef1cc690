#include "repsel/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "repsel/benchmark.hpp"
#include "repsel/solver.hpp"

namespace repsel {

EconomyParams with_param(const EconomyParams& base, const std::string& name, double value) {
  EconomyParams p = base;
  if (name == "r") p.r = value;
  else if (name == "lambda_a") p.lambda_a = value;
  else if (name == "lambda_b") p.lambda_b = value;
  else if (name == "c") p.c = value;
  else if (name == "kappa") p.kappa = value;
  else if (name == "phi_a") p.phi_a = value;
  else if (name == "phi_b") p.phi_b = value;
  else throw std::invalid_argument("with_param: unknown parameter name '" + name + "'");
  return p;
}

void SweepSpec::validate() const {
  base.validate();
  with_param(base, param, from);  // throws on an unknown name
  if (steps < 2) throw std::invalid_argument("SweepSpec: steps must be >= 2");
  if (!(std::isfinite(from) && std::isfinite(to))) {
    throw std::invalid_argument("SweepSpec: grid endpoints must be finite");
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(spec.steps);
  for (int i = 0; i < spec.steps; ++i) {
    SweepRow row;
    row.value = spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
    EconomyParams p = with_param(spec.base, spec.param, row.value);
    try {
      p.validate();
      if (spec.model != SweepModel::NoLearning) {
        const SolveReport rep = solve(p);
        row.regime = rep.regime.regime;
        row.w1 = rep.regime.w1;
        row.beta = rep.beta;
        row.alpha = rep.alpha;
      }
      if (spec.model != SweepModel::Learning) {
        const BenchmarkReport bench = solve_no_learning(p);
        if (!row.regime) {
          row.regime = bench.regime.regime;
          row.w1 = bench.regime.w1;
        }
        row.beta_hat = bench.beta_hat;
        row.alpha_hat = bench.alpha_hat;
      }
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* to_string(Shape s) {
  switch (s) {
    case Shape::Increasing: return "increasing";
    case Shape::Decreasing: return "decreasing";
    case Shape::UShaped: return "u_shaped";
    case Shape::InverseU: return "inverse_u";
    case Shape::NonMonotoneOther: return "non_monotone_other";
  }
  return "?";
}

ShapeVerdict detect_shape(const std::vector<double>& series, double dead_band) {
  if (series.size() < 3) throw std::invalid_argument("detect_shape: need at least 3 points");
  for (double v : series) {
    if (!std::isfinite(v)) throw std::invalid_argument("detect_shape: series has gaps");
  }

  // Signed differences, dead band collapsed to zero, zeros dropped.
  std::vector<int> signs;
  std::vector<int> positions;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    const double d = series[i + 1] - series[i];
    if (std::abs(d) <= dead_band) continue;
    signs.push_back(d > 0.0 ? 1 : -1);
    positions.push_back(static_cast<int>(i));
  }

  ShapeVerdict verdict;
  if (signs.empty()) return verdict;  // flat series carries no shape information

  std::vector<int> flips;
  for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
    if (signs[i] != signs[i + 1]) flips.push_back(positions[i + 1]);
  }
  verdict.witnesses = flips;

  if (flips.empty()) {
    verdict.shape = signs.front() > 0 ? Shape::Increasing : Shape::Decreasing;
    return verdict;
  }
  if (flips.size() == 1) {
    if (signs.front() < 0) {
      verdict.shape = Shape::UShaped;
      verdict.arg_extreme = static_cast<int>(
          std::min_element(series.begin(), series.end()) - series.begin());
    } else {
      verdict.shape = Shape::InverseU;
      verdict.arg_extreme = static_cast<int>(
          std::max_element(series.begin(), series.end()) - series.begin());
    }
    return verdict;
  }
  verdict.shape = Shape::NonMonotoneOther;
  return verdict;
}

}  // namespace repsel
