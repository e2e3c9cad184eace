// rsbench -- ranking-and-selection workbench CLI.
//
// Subcommands:
//   run      run an experiment and emit per-iteration metrics as CSV
//   solve    solve the rate-optimal static allocation for an instance
//   configs  list the standard configurations with prescaled values
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "rsbench/allocation.hpp"
#include "rsbench/bench.hpp"
#include "rsbench/experiment_io.hpp"

namespace {

int worker_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("RSBENCH_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

void print_report(const rsbench::ProblemInstance& instance,
                  const rsbench::SolverReport& report) {
  std::cout << "alpha:";
  for (double a : report.alpha.alpha) std::cout << ' ' << rsbench::format_real(a);
  std::cout << '\n';
  double rate = 0.0;
  std::size_t b = instance.best();
  for (std::size_t i = 0; i < instance.k(); ++i)
    if (i != b) {
      rate = rsbench::rate_of(instance, report.alpha.alpha, i);
      break;
    }
  std::cout << "common_rate: " << rsbench::format_real(rate) << '\n'
            << "max_rate_gap: " << rsbench::format_real(report.max_rate_gap) << '\n'
            << "balance_residual: " << rsbench::format_real(report.balance_residual) << '\n'
            << "iterations: " << report.iterations << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranking-and-selection replication-allocation workbench"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run an experiment and emit CSV metrics");
  std::string run_config;
  std::vector<std::string> run_policies;
  int run_k = 0, run_n0 = 0, run_macroreps = 0, run_thin = 1, run_threads = 0;
  std::int64_t run_budget = 0, run_r0 = 0;
  std::uint64_t run_seed = 0;
  double run_beta = 0.0;
  std::string run_output = "-";
  bool has_seed = false;
  run->add_option("--config", run_config,
                  "JSON config file, or a configuration name "
                  "(slippage, ascending_mean, ascending_variance, descending_variance)");
  run->add_option("--policy", run_policies,
                  "Policy to run (aomap, mcei, gcei, ttts, static); repeatable");
  run->add_option("--k", run_k, "Number of systems");
  run->add_option("--budget", run_budget, "Total replication budget R");
  run->add_option("--r0", run_r0, "Scaling horizon r0");
  run->add_option("--n0", run_n0, "Warm-start replications per system");
  run->add_option("--macroreps", run_macroreps, "Macro-replication count M");
  run->add_option("--seed", run_seed, "64-bit RNG seed")->each([&](const std::string&) {
    has_seed = true;
  });
  run->add_option("--beta", run_beta, "TTTS leader probability");
  run->add_option("--thin", run_thin, "Emit only iterations divisible by this factor");
  run->add_option("--threads", run_threads, "Worker threads (default: RSBENCH_THREADS or hardware)");
  run->add_option("--output,-o", run_output, "Output CSV path ('-' for stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve the rate-optimal static allocation");
  std::string solve_config;
  int solve_k = 5;
  std::int64_t solve_r0 = 0;
  std::vector<double> solve_means, solve_stds;
  std::string solve_output;
  solve->add_option("--config", solve_config, "Configuration name");
  solve->add_option("--k", solve_k, "Number of systems");
  solve->add_option("--r0", solve_r0, "Apply mean scaling with this r0 before solving");
  solve->add_option("--means", solve_means, "Inline true means")->delimiter(',');
  solve->add_option("--stds", solve_stds, "Inline true standard deviations")->delimiter(',');
  solve->add_option("--output,-o", solve_output, "Optional CSV of the allocation");

  // configs
  auto* configs = app.add_subcommand("configs", "List standard configurations");
  int configs_k = 5;
  configs->add_option("--k", configs_k, "Number of systems to tabulate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      rsbench::SpecOverrides overrides;
      std::string config_file;
      if (!run_config.empty()) {
        if (std::filesystem::exists(run_config))
          config_file = run_config;
        else
          overrides.config = run_config;
      }
      if (run_k > 0) overrides.k = run_k;
      if (run_budget > 0) overrides.budget = run_budget;
      if (run_r0 > 0) overrides.r0 = run_r0;
      if (run_n0 > 0) overrides.n0 = run_n0;
      if (run_macroreps > 0) overrides.macroreps = run_macroreps;
      if (has_seed) overrides.seed = run_seed;
      if (run_beta > 0.0) overrides.beta = run_beta;
      overrides.policies = run_policies;

      rsbench::ExperimentSpec spec = rsbench::parse_spec(config_file, overrides);
      if (run_thin < 1) throw rsbench::UsageError("field thin: must be >= 1");

      rsbench::ExperimentResult result =
          rsbench::run_experiment(spec, worker_threads(run_threads));
      if (run_output == "-")
        rsbench::emit_csv(result.series, std::cout, run_thin);
      else
        rsbench::emit_csv_file(result.series, run_output, run_thin);
      return 0;
    }

    if (solve->parsed()) {
      rsbench::ProblemInstance instance;
      if (!solve_means.empty() || !solve_stds.empty()) {
        if (solve_means.size() != solve_stds.size() || solve_means.size() < 2)
          throw rsbench::UsageError("--means and --stds need matching length >= 2");
        instance = rsbench::ProblemInstance(solve_means, solve_stds);
      } else if (!solve_config.empty()) {
        rsbench::ConfigName name = rsbench::parse_config_name(solve_config);
        instance = solve_r0 > 0
                       ? rsbench::build_instance(name, solve_k, solve_r0)
                       : rsbench::prescaled_instance(name, solve_k);
      } else {
        throw rsbench::UsageError("solve: provide --config NAME or --means/--stds");
      }
      rsbench::SolverReport report;
      try {
        report = rsbench::solve_gj(instance);
      } catch (const std::invalid_argument& e) {
        throw rsbench::UsageError(e.what());
      }
      print_report(instance, report);
      if (!solve_output.empty()) {
        std::ofstream out(solve_output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + solve_output);
        out << "system,alpha\n";
        for (std::size_t i = 0; i < report.alpha.alpha.size(); ++i)
          out << i << ',' << rsbench::format_real(report.alpha.alpha[i]) << '\n';
      }
      return 0;
    }

    if (configs->parsed()) {
      for (rsbench::ConfigName c :
           {rsbench::ConfigName::Slippage, rsbench::ConfigName::AscendingMean,
            rsbench::ConfigName::AscendingVariance,
            rsbench::ConfigName::DescendingVariance}) {
        rsbench::ProblemInstance inst = rsbench::prescaled_instance(c, configs_k);
        std::cout << rsbench::config_name_string(c) << "\n  m:";
        for (double v : inst.mu) std::cout << ' ' << rsbench::format_real(v);
        std::cout << "\n  sigma:";
        for (double v : inst.sigma) std::cout << ' ' << rsbench::format_real(v);
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const rsbench::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
