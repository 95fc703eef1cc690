#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "repsel/economy.hpp"
#include "repsel/sweep.hpp"

namespace repsel {

/// A committed-fixture description of a parameter set whose alpha(kappa)
/// response is U-shaped while the economy stays in the low cost regime over
/// the whole kappa grid.
struct UshapeWitness {
  EconomyParams params;  // kappa field is ignored; the grid below supplies it
  double kappa_from = 0.0;
  double kappa_to = 0.0;
  int steps = 0;
};

struct UshapeEvaluation {
  std::vector<double> kappa;
  std::vector<double> alpha;
  ShapeVerdict verdict;
  bool all_low_cost = false;
  bool argmin_interior = false;

  bool is_u_shaped() const {
    return all_low_cost && verdict.shape == Shape::UShaped && argmin_interior;
  }
};

/// Re-runs the witness: solves the learning model at every kappa grid point
/// and classifies the alpha series. Throws if any grid point fails to
/// solve (a witness must be clean).
UshapeEvaluation evaluate_ushape_witness(const UshapeWitness& witness);

/// Coarse search over boxes of (r, c, lambda_a, lambda_b, phi_a, phi_b)
/// for a configuration whose alpha(kappa) series over [kappa_from,
/// kappa_to] is U-shaped with a strictly interior argmin. Returns the
/// first hit, or nothing if the box is exhausted.
std::optional<UshapeWitness> search_ushape_witness(double kappa_from, double kappa_to,
                                                   int steps);

nlohmann::json ushape_witness_to_json(const UshapeWitness& w);
UshapeWitness ushape_witness_from_json(const nlohmann::json& j);

}  // namespace repsel
