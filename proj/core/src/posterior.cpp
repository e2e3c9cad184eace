#include "rsbench/posterior.hpp"

#include <stdexcept>

namespace rsbench {

void update_posterior(PosteriorState& state, std::size_t i, double y) {
  if (i >= state.k()) throw std::out_of_range("update_posterior: system index");
  state.counts[i] += 1;
  state.sums[i] += y;
  state.total += 1;
}

std::size_t current_best(const PosteriorState& state) {
  if (!state.all_initialized())
    throw std::logic_error("current_best: some system has no observations");
  std::size_t b = 0;
  double best_mean = state.sample_mean(0);
  for (std::size_t i = 1; i < state.k(); ++i) {
    double m = state.sample_mean(i);
    if (m > best_mean) {
      best_mean = m;
      b = i;
    }
  }
  return b;
}

}  // namespace rsbench
