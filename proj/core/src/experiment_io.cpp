#include "rsbench/experiment_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace rsbench {

ConfigName parse_config_name(const std::string& name) {
  if (name == "slippage") return ConfigName::Slippage;
  if (name == "ascending_mean") return ConfigName::AscendingMean;
  if (name == "ascending_variance") return ConfigName::AscendingVariance;
  if (name == "descending_variance") return ConfigName::DescendingVariance;
  throw UsageError("unknown configuration name: \"" + name + "\"");
}

PolicyKind parse_policy_kind(const std::string& name) {
  if (name == "aomap") return PolicyKind::Aomap;
  if (name == "mcei") return PolicyKind::Mcei;
  if (name == "gcei") return PolicyKind::Gcei;
  if (name == "ttts") return PolicyKind::Ttts;
  if (name == "static" || name == "static_oracle") return PolicyKind::StaticOracle;
  throw UsageError("unknown policy name: \"" + name + "\"");
}

ExperimentSpec parse_spec(const std::string& config_file,
                          const SpecOverrides& overrides) {
  nlohmann::json file = nlohmann::json::object();
  if (!config_file.empty()) {
    std::ifstream in(config_file);
    if (!in) throw UsageError("cannot open config file: " + config_file);
    try {
      in >> file;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config file " + config_file + ": " + e.what());
    }
  }

  ExperimentSpec spec;
  try {
    std::string config_name = overrides.config
        ? *overrides.config
        : file.value("config", std::string("slippage"));
    spec.config = parse_config_name(config_name);
    spec.k = overrides.k ? *overrides.k : file.value("k", 5);
    spec.budget = overrides.budget ? *overrides.budget
                                   : file.value("budget", std::int64_t(0));
    spec.r0 = overrides.r0 ? *overrides.r0 : file.value("r0", std::int64_t(0));
    spec.n0 = overrides.n0 ? *overrides.n0 : file.value("n0", 2);
    spec.macroreps = overrides.macroreps ? *overrides.macroreps
                                         : file.value("macroreps", 1000);
    spec.seed = overrides.seed ? *overrides.seed
                               : file.value("seed", std::uint64_t(1));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("config file field: ") + e.what());
  }

  double beta = overrides.beta ? *overrides.beta : file.value("beta", 0.5);
  if (!(beta > 0.0 && beta < 1.0))
    throw UsageError("field beta: must lie in (0, 1)");

  std::vector<std::string> names = overrides.policies;
  if (names.empty() && file.contains("policies")) {
    try {
      names = file["policies"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("field policies: ") + e.what());
    }
  }
  if (names.empty()) names = {"aomap", "mcei", "gcei", "ttts"};
  for (const std::string& n : names) {
    PolicySpec p;
    p.kind = parse_policy_kind(n);
    p.beta = beta;
    spec.policies.push_back(std::move(p));
  }

  if (spec.k < 2) throw UsageError("field k: must be >= 2");
  if (spec.n0 < 1) throw UsageError("field n0: must be >= 1");
  if (spec.macroreps < 1) throw UsageError("field macroreps: must be >= 1");
  if (spec.effective_r0() < 1) throw UsageError("field r0: must be >= 1");
  if (spec.effective_budget() < std::int64_t(spec.n0) * spec.k)
    throw UsageError("field budget: must be >= n0*k");
  return spec;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void emit_csv(const std::vector<std::pair<std::string, MetricsSeries>>& series,
              std::ostream& out, int thin) {
  if (series.empty()) throw std::invalid_argument("emit_csv: empty series");
  if (thin < 1) throw std::invalid_argument("emit_csv: thin >= 1 required");
  std::vector<std::size_t> order(series.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return series[a].first < series[b].first;
  });
  out << "policy,t,pics,alloc_best_mean,gap_mean,gap_std\n";
  for (std::size_t idx : order) {
    const std::string& name = series[idx].first;
    const MetricsSeries& s = series[idx].second;
    std::size_t n = s.pics.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t t = s.start_t + std::int64_t(i);
      if (t % thin != 0 && i + 1 != n) continue;
      out << name << ',' << t << ',' << format_real(s.pics[i]) << ','
          << format_real(s.alloc_best_mean[i]) << ','
          << format_real(s.gap_mean[i]) << ',' << format_real(s.gap_std[i])
          << '\n';
    }
  }
}

void emit_csv_file(const std::vector<std::pair<std::string, MetricsSeries>>& series,
                   const std::string& path, int thin) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
  emit_csv(series, out, thin);
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

}  // namespace rsbench
