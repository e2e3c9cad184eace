// bench.hpp -- experiment protocol: standard configurations, mean scaling,
// warm start, trajectories, macro-replications, and the reported metrics.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsbench/allocation.hpp"
#include "rsbench/policies.hpp"
#include "rsbench/problem.hpp"

namespace rsbench {

enum class ConfigName { Slippage, AscendingMean, AscendingVariance, DescendingVariance };

std::string config_name_string(ConfigName c);

// A policy together with its parameters. beta is used by TTTS only; alpha is
// the target allocation of the static oracle (filled from solve_gj by
// run_experiment when left empty).
struct PolicySpec {
  PolicyKind kind = PolicyKind::Gcei;
  double beta = 0.5;
  std::vector<double> alpha;
};

std::string policy_name(PolicyKind kind);

struct ExperimentSpec {
  ConfigName config = ConfigName::Slippage;
  int k = 5;
  std::int64_t budget = 0;   // R; defaults to 100*k when 0
  std::int64_t r0 = 0;       // defaults to 20*k when 0
  int n0 = 2;                // warm-start replications per system
  int macroreps = 1000;
  std::uint64_t seed = 1;
  std::vector<PolicySpec> policies;

  std::int64_t effective_budget() const { return budget > 0 ? budget : 100LL * k; }
  std::int64_t effective_r0() const { return r0 > 0 ? r0 : 20LL * k; }
};

// Unscaled means and standard deviations of a standard configuration.
ProblemInstance prescaled_instance(ConfigName config, int k);

// Means scaled by the constant c computed from the rate-optimal allocation
// of the prescaled instance; sigma unchanged. Best system is index k-1.
ProblemInstance build_instance(ConfigName config, int k, std::int64_t r0);

// Per-iteration record of one macro-replication, from the end of the warm
// start (t = n0*k) through the budget R.
struct Trajectory {
  std::int64_t start_t = 0;
  std::vector<std::int32_t> sample_best;   // sample-best index at each t
  std::vector<std::int64_t> best_count;    // replications of the true best at t
  std::vector<std::int64_t> final_counts;  // counts per system at t = R
};

// One end-to-end run: n0 round-robin passes over systems 0..k-1, then policy
// decisions until the budget is consumed (warm start counts toward R).
Trajectory run_replication(const ProblemInstance& instance,
                           const PolicySpec& policy, std::int64_t budget,
                           int n0, RngStream& rng);

// Cross-macro-replication metrics at each iteration.
struct MetricsSeries {
  std::int64_t start_t = 0;
  std::vector<double> pics;             // proportion with wrong sample-best
  std::vector<double> alloc_best_mean;  // mean of r_best(t)/t
  std::vector<double> gap_mean;         // mean of mu_best - mu_{sample-best}
  std::vector<double> gap_std;          // std with divisor M-1
};

struct SummaryRow {
  double pics;
  double alloc_best_mean;
  double gap_mean;
  double gap_std;
};

// Metrics at a single iteration t across trajectories.
SummaryRow summarize(const std::vector<Trajectory>& trajectories,
                     const ProblemInstance& instance, std::int64_t t);

MetricsSeries summarize_all(const std::vector<Trajectory>& trajectories,
                            const ProblemInstance& instance);

struct ExperimentResult {
  ProblemInstance instance;
  double scale_c = 0.0;
  AllocationVector alpha_star;
  std::vector<std::pair<std::string, MetricsSeries>> series;  // per policy
};

// Run M macro-replications per policy on substream(seed, policy*M + rep),
// fanned over n_threads workers. Aggregation is integer-based and therefore
// bit-identical for any worker count.
ExperimentResult run_experiment(const ExperimentSpec& spec, int n_threads = 1);

}  // namespace rsbench
