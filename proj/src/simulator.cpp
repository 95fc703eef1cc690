#include "repsel/simulator.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace repsel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-path substream. Draws go through explicit inverse-CDF helpers so the
// stream is fully determined by the engine, independent of any library's
// distribution implementation.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t path_index)
      : eng_(splitmix64(splitmix64(seed) ^ splitmix64(path_index + 1))) {}

  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double exponential(double rate) { return -std::log1p(-u01()) / rate; }
  bool bernoulli(double p) { return u01() < p; }

 private:
  std::mt19937_64 eng_;
};

// Present value at time 0 of paying the flow cost c over [t1, t2].
double discounted_cost(double c, double r, double t1, double t2) {
  return c / r * (std::exp(-r * t1) - std::exp(-r * t2));
}

PathOutcome run_path(const EconomyParams& p, const Policy& pol, const SimConfig& cfg,
                     std::uint64_t path_index) {
  PathRng rng(cfg.seed, path_index);
  PathOutcome out;
  out.theta_high = rng.bernoulli(cfg.pi0);
  double belief = cfg.pi0;
  double t = 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  const double horizon = std::log(1.0 / cfg.eps) / p.r;  // e^{-rt} < eps beyond this
  const double meet_rate = p.total_meet_rate();
  const double prob_a = meet_rate > 0.0 ? p.phi_a / (p.phi_a + p.phi_b) : 0.0;

  auto threshold_of = [&](ProjectType q) -> std::optional<double> {
    return q == ProjectType::A ? pol.threshold_a : std::optional<double>(pol.threshold_b);
  };
  auto dead = [&]() {
    // Belief never rises while unmatched; once it clears no threshold the
    // path generates no further flows.
    if (belief > pol.threshold_b) return false;
    return !(pol.threshold_a && belief > *pol.threshold_a);
  };

  if (meet_rate <= 0.0) {
    out.final_belief = belief;
    return out;
  }

  for (std::int64_t events = 0; !dead(); ++events) {
    if (events >= cfg.max_events) {
      out.exhausted = true;
      break;
    }
    t += rng.exponential(meet_rate);
    const ProjectType q = rng.bernoulli(prob_a) ? ProjectType::A : ProjectType::B;
    const double u_succ = rng.u01();  // consumed every meeting: keeps streams
                                      // aligned across policies (common random numbers)
    if (t > horizon) {
      out.truncated = true;
      break;
    }
    const auto thr = threshold_of(q);
    if (!thr || belief <= *thr) continue;

    ++out.matches;
    const double lam = p.rate(q);
    const double sigma = out.theta_high ? -std::log1p(-u_succ) / lam : inf;
    const double exit_time = belief < 1.0 ? hitting_time(belief, *thr, lam) : inf;
    if (sigma == inf && exit_time == inf) {
      // Unreachable for consistent draws (belief 1 implies the high type);
      // the match would last forever, so close the cost integral and stop.
      out.payoff -= discounted_cost(p.c, p.r, t, inf);
      out.final_belief = belief;
      return out;
    }
    const double dur = std::min(sigma, exit_time);
    out.payoff -= discounted_cost(p.c, p.r, t, t + dur);
    if (sigma <= exit_time) {
      out.payoff += std::exp(-p.r * (t + sigma));
      belief = 1.0;
      ++out.successes;
    } else {
      belief = *thr;
    }
    t += dur;
    if (t > horizon) {
      out.truncated = true;
      break;
    }
  }
  out.final_belief = belief;
  return out;
}

// Deterministic pairwise reduction; the result does not depend on how the
// paths were distributed over workers.
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : pairwise_sum(v, 0, v.size()) / static_cast<double>(v.size());
}

}  // namespace

void Policy::validate() const {
  if (!(threshold_b > 0.0 && threshold_b < 1.0)) {
    throw std::invalid_argument("Policy: threshold_b must lie in (0,1)");
  }
  if (threshold_a && !(*threshold_a > 0.0 && *threshold_a < 1.0)) {
    throw std::invalid_argument("Policy: threshold_a must lie in (0,1)");
  }
}

void SimConfig::validate() const {
  if (!(pi0 >= 0.0 && pi0 <= 1.0)) throw std::invalid_argument("SimConfig: pi0 outside [0,1]");
  if (n_paths < 1) throw std::invalid_argument("SimConfig: n_paths must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("SimConfig: eps must lie in (0,1)");
  if (max_events < 1) throw std::invalid_argument("SimConfig: max_events must be >= 1");
}

std::vector<PathOutcome> simulate_paths(const EconomyParams& p, const Policy& pol,
                                        const SimConfig& cfg, int n_threads) {
  p.validate();
  pol.validate();
  cfg.validate();
  const std::size_t n = static_cast<std::size_t>(cfg.n_paths);
  std::vector<PathOutcome> outcomes(n);
  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads <= 0) n_threads = 1;
  }
  const std::size_t workers = std::min<std::size_t>(n_threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) outcomes[i] = run_path(p, pol, cfg, i);
    return outcomes;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi]() {
      for (std::size_t i = lo; i < hi; ++i) outcomes[i] = run_path(p, pol, cfg, i);
    });
  }
  for (auto& th : pool) th.join();
  return outcomes;
}

namespace {

SimResult summarize(const EconomyParams& p, const SimConfig& cfg,
                    const std::vector<PathOutcome>& outcomes) {
  const std::size_t n = outcomes.size();
  std::vector<double> payoffs(n), succ(n), matches(n), final_belief(n), theta(n);
  std::int64_t truncated = 0, exhausted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    payoffs[i] = outcomes[i].payoff;
    succ[i] = outcomes[i].successes;
    matches[i] = outcomes[i].matches;
    final_belief[i] = outcomes[i].final_belief;
    theta[i] = outcomes[i].theta_high ? 1.0 : 0.0;
    truncated += outcomes[i].truncated;
    exhausted += outcomes[i].exhausted;
  }
  SimResult res;
  res.n_paths = static_cast<std::int64_t>(n);
  res.mean = pairwise_mean(payoffs);
  if (n > 1) {
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = payoffs[i] - res.mean;
      sq[i] = d * d;
    }
    const double var = pairwise_sum(sq, 0, n) / static_cast<double>(n - 1);
    res.std_error = std::sqrt(var / static_cast<double>(n));
  }
  res.mean_successes = pairwise_mean(succ);
  res.mean_matches = pairwise_mean(matches);
  res.mean_final_belief = pairwise_mean(final_belief);
  res.theta_high_fraction = pairwise_mean(theta);
  res.truncation_bound = cfg.eps * (p.lambda_b + p.c) / p.r;
  res.truncated_paths = truncated;
  res.exhausted_paths = exhausted;
  return res;
}

}  // namespace

SimResult simulate(const EconomyParams& p, const Policy& pol, const SimConfig& cfg,
                   int n_threads) {
  return summarize(p, cfg, simulate_paths(p, pol, cfg, n_threads));
}

DominanceTable policy_dominance(const EconomyParams& p, const SolveReport& report,
                                const std::vector<double>& perturbations,
                                const SimConfig& cfg, int n_threads) {
  const Policy optimal = Policy::from_report(report);
  const auto base_paths = simulate_paths(p, optimal, cfg, n_threads);
  const SimResult base = summarize(p, cfg, base_paths);

  DominanceTable table;
  table.optimal_mean = base.mean;
  table.optimal_se = base.std_error;

  auto add_candidate = [&](const std::string& label, const Policy& cand) {
    const auto paths = simulate_paths(p, cand, cfg, n_threads);
    std::vector<double> diff(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      diff[i] = paths[i].payoff - base_paths[i].payoff;
    }
    DominanceRow row;
    row.label = label;
    row.policy = cand;
    row.mean_diff = pairwise_mean(diff);
    row.mean = base.mean + row.mean_diff;
    if (diff.size() > 1) {
      std::vector<double> sq(diff.size());
      for (std::size_t i = 0; i < diff.size(); ++i) {
        const double d = diff[i] - row.mean_diff;
        sq[i] = d * d;
      }
      const double var = pairwise_sum(sq, 0, sq.size()) / static_cast<double>(sq.size() - 1);
      row.se_diff = std::sqrt(var / static_cast<double>(sq.size()));
    }
    row.beats_optimal = row.mean_diff > 3.0 * row.se_diff;
    table.any_beats_optimal = table.any_beats_optimal || row.beats_optimal;
    table.rows.push_back(std::move(row));
  };

  for (double d : perturbations) {
    const double b = optimal.threshold_b + d;
    if (b > 0.0 && b < 1.0) {
      Policy cand = optimal;
      cand.threshold_b = b;
      add_candidate("beta" + std::string(d >= 0 ? "+" : "") + std::to_string(d), cand);
    }
    if (optimal.threshold_a) {
      const double a = *optimal.threshold_a + d;
      if (a > 0.0 && a < 1.0) {
        Policy cand = optimal;
        cand.threshold_a = a;
        add_candidate("alpha" + std::string(d >= 0 ? "+" : "") + std::to_string(d), cand);
      }
    }
  }
  if (optimal.threshold_a) {
    Policy cand = optimal;
    cand.threshold_a.reset();
    add_candidate("ignore_a", cand);
  }
  return table;
}

}  // namespace repsel
