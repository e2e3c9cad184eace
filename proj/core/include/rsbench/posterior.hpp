// posterior.hpp -- sufficient statistic for all policies: counts and sums.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rsbench {

// Posterior under a non-informative prior: the posterior mean of system i is
// its sample mean and the posterior precision is r_i / sigma_i^2. Running
// sums are kept instead of incremental means; only means are ever needed.
struct PosteriorState {
  std::vector<std::int64_t> counts;  // r_i(t)
  std::vector<double> sums;
  std::int64_t total = 0;            // t = sum_i r_i

  PosteriorState() = default;
  explicit PosteriorState(std::size_t k) : counts(k, 0), sums(k, 0.0) {}

  std::size_t k() const { return counts.size(); }

  // Requires counts[i] >= 1.
  double sample_mean(std::size_t i) const {
    return sums[i] / double(counts[i]);
  }

  double precision(std::size_t i, double sigma_i) const {
    return double(counts[i]) / (sigma_i * sigma_i);
  }

  bool all_initialized() const {
    for (std::int64_t c : counts)
      if (c < 1) return false;
    return true;
  }
};

// Record one observation y for system i.
void update_posterior(PosteriorState& state, std::size_t i, double y);

// argmax of sample means; ties broken by smallest index.
// Requires every system to have at least one observation.
std::size_t current_best(const PosteriorState& state);

}  // namespace rsbench
