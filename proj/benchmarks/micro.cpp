// Microbenchmarks for the allocation solver, the per-iteration policy
// decisions, and a full macro-replication.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "rsbench/allocation.hpp"
#include "rsbench/bench.hpp"
#include "rsbench/policies.hpp"
#include "rsbench/rng.hpp"

namespace {

using namespace rsbench;

ProblemInstance instance_for(int k) {
  return build_instance(ConfigName::AscendingVariance, k, 20 * std::int64_t(k));
}

// A mid-trajectory posterior reached by running gCEI for a while, so the
// decision benchmarks see realistic (unequal) counts and means.
PosteriorState warmed_state(const ProblemInstance& inst, std::int64_t budget) {
  PosteriorState state(inst.k());
  RngStream rng(2024);
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < inst.k(); ++i)
      update_posterior(state, i, sample_output(inst, i, rng));
  for (std::int64_t t = state.total; t < budget; ++t) {
    std::size_t pick = gcei_choose(state, inst.sigma).chosen;
    update_posterior(state, pick, sample_output(inst, pick, rng));
  }
  return state;
}

void BM_SolveGJ(benchmark::State& bm) {
  ProblemInstance inst = instance_for(int(bm.range(0)));
  for (auto _ : bm) {
    SolverReport r = solve_gj(inst);
    benchmark::DoNotOptimize(r.alpha.alpha.data());
  }
}
BENCHMARK(BM_SolveGJ)->Arg(5)->Arg(10)->Arg(30);

template <PolicyDecision (*Choose)(const PosteriorState&,
                                   const std::vector<double>&)>
void BM_PolicyChoose(benchmark::State& bm) {
  ProblemInstance inst = instance_for(int(bm.range(0)));
  PosteriorState state = warmed_state(inst, 50 * bm.range(0));
  for (auto _ : bm) {
    PolicyDecision d = Choose(state, inst.sigma);
    benchmark::DoNotOptimize(d.chosen);
  }
}
BENCHMARK(BM_PolicyChoose<aomap_choose>)->Arg(5)->Arg(30);
BENCHMARK(BM_PolicyChoose<mcei_choose>)->Arg(5)->Arg(30);
BENCHMARK(BM_PolicyChoose<gcei_choose>)->Arg(5)->Arg(30);

void BM_TttsChoose(benchmark::State& bm) {
  ProblemInstance inst = instance_for(int(bm.range(0)));
  PosteriorState state = warmed_state(inst, 50 * bm.range(0));
  RngStream rng(7);
  for (auto _ : bm) {
    PolicyDecision d = ttts_choose(state, inst.sigma, rng, 0.5);
    benchmark::DoNotOptimize(d.chosen);
  }
}
BENCHMARK(BM_TttsChoose)->Arg(5)->Arg(30);

void BM_Replication(benchmark::State& bm) {
  ProblemInstance inst = instance_for(5);
  PolicySpec policy;
  policy.kind = PolicyKind::Gcei;
  std::uint64_t rep = 0;
  for (auto _ : bm) {
    RngStream rng = RngStream::substream(1, rep++);
    Trajectory traj = run_replication(inst, policy, 500, 2, rng);
    benchmark::DoNotOptimize(traj.final_counts.data());
  }
}
BENCHMARK(BM_Replication);

void BM_NormalFast(benchmark::State& bm) {
  RngStream rng(3);
  for (auto _ : bm) benchmark::DoNotOptimize(rng.normal_fast());
}
BENCHMARK(BM_NormalFast);

}  // namespace

BENCHMARK_MAIN();
