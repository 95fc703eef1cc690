#pragma once

#include <string>
#include <vector>

#include "repsel/solver.hpp"

namespace repsel {

struct CheckResult {
  std::string name;
  double max_violation = 0.0;  // worst slack past the allowed bound; <= 0 is clean
  double worst_pi = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

/// Outcome of the optimality certification. pass iff every individual
/// check stays within its declared tolerance.
struct VerificationReport {
  int grid_n = 0;
  std::vector<CheckResult> checks;
  bool pass = true;

  const CheckResult* find(const std::string& name) const;
};

/// Infinitesimal generator of the in-match reputation process applied to
/// the matching value function v_q of the report:
///   [L_q u](pi) = lambda_q pi (1 + w(1) - u(pi)) - lambda_q pi (1-pi) u'(pi).
/// Uses the closed-form derivative inside the continuation interval and
/// the stopping-branch derivative elsewhere.
double generator_apply(const SolveReport& report, ProjectType q, double pi);

/// Runs every optimality check the solution must satisfy on a uniform grid
/// of grid_n + 1 points with the free boundaries inserted: majorant,
/// superharmonic (with equality on continuation), variational HJB
/// consistency, smooth pasting, v_b >= v_a, convexity of v_b, increasing
/// interval structure and the ratio bounds on the overlap of the sections.
/// Never throws on a failing check; requires grid_n >= 1000.
VerificationReport check_all(const SolveReport& report, int grid_n);

}  // namespace repsel
