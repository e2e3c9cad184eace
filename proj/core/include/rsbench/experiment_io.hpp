// experiment_io.hpp -- experiment spec parsing and CSV emission.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rsbench/bench.hpp"

namespace rsbench {

// A user-facing validation error; the CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ConfigName parse_config_name(const std::string& name);
PolicyKind parse_policy_kind(const std::string& name);

// Flag-level overrides; unset fields fall back to the config file, then to
// the defaults (r0 = 20k, R = 100k, n0 = 2, beta = 1/2).
struct SpecOverrides {
  std::optional<std::string> config;
  std::optional<int> k;
  std::optional<std::int64_t> budget;
  std::optional<std::int64_t> r0;
  std::optional<int> n0;
  std::optional<int> macroreps;
  std::optional<std::uint64_t> seed;
  std::optional<double> beta;
  std::vector<std::string> policies;
};

// Build a validated spec from an optional JSON config file plus overrides.
// JSON keys: config, k, budget, macroreps, seed, policies, beta, r0, n0.
// Throws UsageError naming the offending field.
ExperimentSpec parse_spec(const std::string& config_file,
                          const SpecOverrides& overrides);

// Header `policy,t,pics,alloc_best_mean,gap_mean,gap_std`; rows sorted by
// (policy name, t); reals printed with 10 significant digits; thin = j keeps
// t == 0 (mod j) plus the final t.
void emit_csv(const std::vector<std::pair<std::string, MetricsSeries>>& series,
              std::ostream& out, int thin = 1);
void emit_csv_file(const std::vector<std::pair<std::string, MetricsSeries>>& series,
                   const std::string& path, int thin = 1);

// Locale-independent shortest representation with at most 10 significant
// digits.
std::string format_real(double v);

}  // namespace rsbench
