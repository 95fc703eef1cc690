#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repsel/economy.hpp"

namespace repsel {

enum class SweepModel { Learning, NoLearning, Both };

/// One comparative-statics run: vary a single primitive over a uniform
/// grid and re-solve the requested model(s) at every point.
struct SweepSpec {
  EconomyParams base;
  std::string param;  // one of r, lambda_a, lambda_b, c, kappa, phi_a, phi_b
  double from = 0.0;
  double to = 0.0;
  int steps = 0;  // number of grid points, endpoints included; >= 2
  SweepModel model = SweepModel::Learning;

  void validate() const;
};

/// One output row. Grid points with invalid parameters (or a per-point
/// solver failure) are kept as skipped rows with the reason, never dropped.
struct SweepRow {
  double value = 0.0;
  bool ok = false;
  std::string error;
  std::optional<Regime> regime;
  std::optional<double> w1;
  std::optional<double> beta;
  std::optional<double> alpha;
  std::optional<double> beta_hat;
  std::optional<double> alpha_hat;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Returns a copy of base with the named primitive replaced; throws on an
/// unknown name.
EconomyParams with_param(const EconomyParams& base, const std::string& name, double value);

enum class Shape { Increasing, Decreasing, UShaped, InverseU, NonMonotoneOther };

const char* to_string(Shape s);

/// Shape classification of a numeric series by the sign pattern of its
/// consecutive differences, with a dead band absorbing solver noise.
/// U-shaped means exactly one sign change, minus to plus.
struct ShapeVerdict {
  Shape shape = Shape::NonMonotoneOther;
  std::optional<int> arg_extreme;   // argmin (U) or argmax (inverse U)
  std::vector<int> witnesses;       // indices where the diff sign flips
};

ShapeVerdict detect_shape(const std::vector<double>& series, double dead_band = 1e-9);

}  // namespace repsel
