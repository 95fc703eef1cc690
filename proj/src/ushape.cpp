#include "repsel/ushape.hpp"

#include <stdexcept>

#include "repsel/io.hpp"
#include "repsel/solver.hpp"

namespace repsel {

UshapeEvaluation evaluate_ushape_witness(const UshapeWitness& w) {
  if (w.steps < 3) throw std::invalid_argument("ushape witness: need at least 3 kappa points");
  UshapeEvaluation eval;
  eval.all_low_cost = true;
  for (int i = 0; i < w.steps; ++i) {
    const double kappa = w.kappa_from + (w.kappa_to - w.kappa_from) * i / (w.steps - 1);
    EconomyParams p = w.params;
    p.kappa = kappa;
    const SolveReport rep = solve(p);
    if (rep.regime.regime != Regime::LowCost || !rep.alpha) {
      eval.all_low_cost = false;
      throw std::runtime_error("ushape witness: grid point leaves the low cost regime");
    }
    eval.kappa.push_back(kappa);
    eval.alpha.push_back(*rep.alpha);
  }
  eval.verdict = detect_shape(eval.alpha);
  eval.argmin_interior = eval.verdict.arg_extreme && *eval.verdict.arg_extreme > 0 &&
                         *eval.verdict.arg_extreme < w.steps - 1;
  return eval;
}

std::optional<UshapeWitness> search_ushape_witness(double kappa_from, double kappa_to,
                                                   int steps) {
  const double r_grid[] = {0.5, 0.7, 0.9, 1.1};
  const double c_grid[] = {0.6, 0.9, 1.2};
  const double la_grid[] = {1.4, 1.8, 2.2};
  const double lb_gap[] = {0.6, 1.2, 2.0};  // lambda_b = lambda_a + gap
  const double pa_grid[] = {0.2, 0.35, 0.6, 1.0};
  const double pb_grid[] = {0.2, 0.4, 0.8};

  for (double r : r_grid)
    for (double c : c_grid)
      for (double la : la_grid)
        for (double gap : lb_gap)
          for (double pa : pa_grid)
            for (double pb : pb_grid) {
              if (!(c < la)) continue;
              UshapeWitness w;
              w.params = EconomyParams{r, la, la + gap, c, 1.0, pa, pb};
              w.kappa_from = kappa_from;
              w.kappa_to = kappa_to;
              w.steps = steps;
              try {
                const UshapeEvaluation eval = evaluate_ushape_witness(w);
                if (eval.is_u_shaped()) return w;
              } catch (const std::exception&) {
                continue;  // regime exit or solve failure disqualifies the box point
              }
            }
  return std::nullopt;
}

nlohmann::json ushape_witness_to_json(const UshapeWitness& w) {
  return nlohmann::json{{"params", params_to_json(w.params)},
                        {"kappa_from", w.kappa_from},
                        {"kappa_to", w.kappa_to},
                        {"steps", w.steps}};
}

UshapeWitness ushape_witness_from_json(const nlohmann::json& j) {
  UshapeWitness w;
  w.params = params_from_json(j.at("params"));
  w.kappa_from = j.at("kappa_from").get<double>();
  w.kappa_to = j.at("kappa_to").get<double>();
  w.steps = j.at("steps").get<int>();
  return w;
}

}  // namespace repsel
