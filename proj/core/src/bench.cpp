#include "rsbench/bench.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace rsbench {

std::string config_name_string(ConfigName c) {
  switch (c) {
    case ConfigName::Slippage: return "slippage";
    case ConfigName::AscendingMean: return "ascending_mean";
    case ConfigName::AscendingVariance: return "ascending_variance";
    case ConfigName::DescendingVariance: return "descending_variance";
  }
  throw std::logic_error("config_name_string: bad enum");
}

std::string policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Aomap: return "aomap";
    case PolicyKind::Mcei: return "mcei";
    case PolicyKind::Gcei: return "gcei";
    case PolicyKind::Ttts: return "ttts";
    case PolicyKind::StaticOracle: return "static";
  }
  throw std::logic_error("policy_name: bad enum");
}

ProblemInstance prescaled_instance(ConfigName config, int k) {
  if (k < 2) throw std::invalid_argument("prescaled_instance: k >= 2 required");
  std::vector<double> m(k), s(k);
  for (int i = 1; i <= k; ++i) {
    switch (config) {
      case ConfigName::Slippage:
        m[i - 1] = (i == k) ? 0.0 : -1.0;
        s[i - 1] = 1.0;
        break;
      case ConfigName::AscendingMean:
        m[i - 1] = std::log(double(i));
        s[i - 1] = 1.0;
        break;
      case ConfigName::AscendingVariance:
        m[i - 1] = std::log(double(i + 1));
        s[i - 1] = std::sqrt(m[i - 1]);
        break;
      case ConfigName::DescendingVariance:
        m[i - 1] = std::log(double(i + 1));
        s[i - 1] = 1.0 / std::sqrt(m[i - 1]);
        break;
    }
  }
  return ProblemInstance(std::move(m), std::move(s));
}

ProblemInstance build_instance(ConfigName config, int k, std::int64_t r0) {
  ProblemInstance pre = prescaled_instance(config, k);
  SolverReport report = solve_gj(pre);
  double c = scale_constant(pre.mu, pre.sigma, r0, report.alpha);
  std::vector<double> mu(pre.mu);
  for (double& m : mu) m *= c;
  return ProblemInstance(std::move(mu), std::vector<double>(pre.sigma));
}

namespace {

std::size_t decide(const PolicySpec& policy, const PosteriorState& state,
                   const std::vector<double>& sigma, RngStream& rng) {
  switch (policy.kind) {
    case PolicyKind::Aomap: return aomap_choose(state, sigma).chosen;
    case PolicyKind::Mcei: return mcei_choose(state, sigma).chosen;
    case PolicyKind::Gcei: return gcei_choose(state, sigma).chosen;
    case PolicyKind::Ttts: return ttts_choose(state, sigma, rng, policy.beta).chosen;
    case PolicyKind::StaticOracle: return static_choose(policy.alpha, state.counts);
  }
  throw std::logic_error("decide: bad policy kind");
}

}  // namespace

Trajectory run_replication(const ProblemInstance& instance,
                           const PolicySpec& policy, std::int64_t budget,
                           int n0, RngStream& rng) {
  std::size_t k = instance.k();
  std::int64_t warm = std::int64_t(n0) * std::int64_t(k);
  if (budget < warm)
    throw std::invalid_argument("run_replication: budget below warm start");

  PosteriorState state(k);
  for (int pass = 0; pass < n0; ++pass)
    for (std::size_t i = 0; i < k; ++i)
      update_posterior(state, i, sample_output(instance, i, rng));

  std::size_t true_best = instance.best();
  Trajectory traj;
  traj.start_t = warm;
  traj.sample_best.reserve(std::size_t(budget - warm + 1));
  traj.best_count.reserve(std::size_t(budget - warm + 1));
  traj.sample_best.push_back(std::int32_t(current_best(state)));
  traj.best_count.push_back(state.counts[true_best]);

  for (std::int64_t t = warm; t < budget; ++t) {
    std::size_t i;
    try {
      i = decide(policy, state, instance.sigma, rng);
    } catch (const std::exception& e) {
      throw std::runtime_error("policy failure at iteration " +
                               std::to_string(t) + ": " + e.what());
    }
    update_posterior(state, i, sample_output(instance, i, rng));
    traj.sample_best.push_back(std::int32_t(current_best(state)));
    traj.best_count.push_back(state.counts[true_best]);
  }
  traj.final_counts = state.counts;
  return traj;
}

SummaryRow summarize(const std::vector<Trajectory>& trajectories,
                     const ProblemInstance& instance, std::int64_t t) {
  if (trajectories.empty()) throw std::invalid_argument("summarize: M = 0");
  std::size_t k = instance.k();
  std::size_t best = instance.best();
  std::vector<std::int64_t> picked(k, 0);
  std::int64_t best_count_sum = 0;
  for (const Trajectory& traj : trajectories) {
    std::size_t idx = std::size_t(t - traj.start_t);
    if (t < traj.start_t || idx >= traj.sample_best.size())
      throw std::out_of_range("summarize: t not recorded in every trajectory");
    picked[std::size_t(traj.sample_best[idx])] += 1;
    best_count_sum += traj.best_count[idx];
  }
  double m = double(trajectories.size());
  SummaryRow row;
  row.pics = double(std::int64_t(trajectories.size()) - picked[best]) / m;
  row.alloc_best_mean = double(best_count_sum) / double(t) / m;
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    if (picked[j] == 0) continue;
    double gap = instance.mu[best] - instance.mu[j];
    sum += double(picked[j]) * gap;
    sumsq += double(picked[j]) * gap * gap;
  }
  row.gap_mean = sum / m;
  row.gap_std = trajectories.size() > 1
                    ? std::sqrt(std::max(0.0, (sumsq - m * row.gap_mean * row.gap_mean) / (m - 1.0)))
                    : 0.0;
  return row;
}

MetricsSeries summarize_all(const std::vector<Trajectory>& trajectories,
                            const ProblemInstance& instance) {
  if (trajectories.empty()) throw std::invalid_argument("summarize_all: M = 0");
  MetricsSeries series;
  series.start_t = trajectories.front().start_t;
  std::size_t n = trajectories.front().sample_best.size();
  series.pics.reserve(n);
  series.alloc_best_mean.reserve(n);
  series.gap_mean.reserve(n);
  series.gap_std.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SummaryRow row = summarize(trajectories, instance, series.start_t + std::int64_t(i));
    series.pics.push_back(row.pics);
    series.alloc_best_mean.push_back(row.alloc_best_mean);
    series.gap_mean.push_back(row.gap_mean);
    series.gap_std.push_back(row.gap_std);
  }
  return series;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, int n_threads) {
  if (spec.k < 2) throw std::invalid_argument("run_experiment: k >= 2 required");
  if (spec.macroreps < 1) throw std::invalid_argument("run_experiment: macroreps >= 1 required");
  std::int64_t budget = spec.effective_budget();
  std::int64_t r0 = spec.effective_r0();
  if (budget < std::int64_t(spec.n0) * spec.k)
    throw std::invalid_argument("run_experiment: budget below n0*k warm start");

  ExperimentResult result;
  result.instance = build_instance(spec.config, spec.k, r0);
  {
    SolverReport report = solve_gj(result.instance);
    result.alpha_star = report.alpha;
    ProblemInstance pre = prescaled_instance(spec.config, spec.k);
    SolverReport pre_report = solve_gj(pre);
    result.scale_c = scale_constant(pre.mu, pre.sigma, r0, pre_report.alpha);
  }

  std::vector<PolicySpec> policies = spec.policies;
  for (PolicySpec& p : policies)
    if (p.kind == PolicyKind::StaticOracle && p.alpha.empty())
      p.alpha = result.alpha_star.alpha;

  std::size_t m = std::size_t(spec.macroreps);
  std::vector<std::vector<Trajectory>> trajs(policies.size());
  for (auto& v : trajs) v.resize(m);

  std::atomic<std::size_t> next{0};
  std::size_t total = policies.size() * m;
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&]() {
    try {
      for (;;) {
        std::size_t job = next.fetch_add(1);
        if (job >= total) return;
        std::size_t p = job / m;
        std::size_t rep = job % m;
        RngStream rng = RngStream::substream(spec.seed, std::uint64_t(job));
        trajs[p][rep] = run_replication(result.instance, policies[p], budget,
                                        spec.n0, rng);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next.store(total);  // drain remaining jobs
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t p = 0; p < policies.size(); ++p)
    result.series.emplace_back(policy_name(policies[p].kind),
                               summarize_all(trajs[p], result.instance));
  return result;
}

}  // namespace rsbench
