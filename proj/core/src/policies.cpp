#include "rsbench/policies.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rsbench/normal.hpp"

namespace rsbench {

namespace {

void require_initialized(const PosteriorState& state) {
  if (!state.all_initialized())
    throw std::logic_error("policy: some system has no observations");
}

}  // namespace

double ei_value(const PosteriorState& state, const std::vector<double>& sigma,
                std::size_t i) {
  require_initialized(state);
  std::size_t b = current_best(state);
  double sd = std::sqrt(1.0 / state.precision(i, sigma[i]));
  double gap = state.sample_mean(i) - state.sample_mean(b);
  return sd * f_acq(gap / sd);
}

double aomap_xi(const PosteriorState& state, const std::vector<double>& sigma) {
  require_initialized(state);
  std::size_t b = current_best(state);
  double best_mean = state.sample_mean(b);
  double var_b = sigma[b] * sigma[b];
  double sum = 0.0;
  for (std::size_t i = 0; i < state.k(); ++i) {
    if (i == b) continue;
    double gap = state.sample_mean(i) - best_mean;
    if (gap == 0.0) return 0.0;  // infinite summand; limiting value
    double g2 = gap * gap;
    sum += var_b * sigma[i] * sigma[i] / (g2 * g2);
  }
  return std::pow(sum, -0.25);
}

PolicyDecision aomap_choose(const PosteriorState& state,
                            const std::vector<double>& sigma) {
  require_initialized(state);
  std::size_t b = current_best(state);
  double best_mean = state.sample_mean(b);
  double xi = aomap_xi(state, sigma);
  PolicyDecision d;
  d.scores.resize(state.k());
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < state.k(); ++i) {
    double mean_i = state.sample_mean(i);
    double target = (mean_i == best_mean) ? best_mean + xi * sigma[b] : best_mean;
    double sd = std::sqrt(1.0 / state.precision(i, sigma[i]));
    double score = sd * f_acq((mean_i - target) / sd);
    d.scores[i] = score;
    if (score > best_score) {
      best_score = score;
      d.chosen = i;
    }
  }
  return d;
}

double cei_value(const PosteriorState& state, const std::vector<double>& sigma,
                 std::size_t i) {
  require_initialized(state);
  std::size_t b = current_best(state);
  if (i == b) throw std::invalid_argument("cei_value: i is the sample-best");
  double nu = 1.0 / state.precision(i, sigma[i]) + 1.0 / state.precision(b, sigma[b]);
  double sd = std::sqrt(nu);
  double gap = state.sample_mean(i) - state.sample_mean(b);
  return sd * f_acq(gap / sd);
}

PolicyDecision mcei_choose(const PosteriorState& state,
                           const std::vector<double>& sigma) {
  require_initialized(state);
  std::size_t b = current_best(state);
  double lhs = double(state.counts[b]) / sigma[b];
  lhs *= lhs;
  double rhs = 0.0;
  for (std::size_t i = 0; i < state.k(); ++i) {
    if (i == b) continue;
    double w = double(state.counts[i]) / sigma[i];
    rhs += w * w;
  }
  PolicyDecision d;
  if (lhs < rhs) {
    d.chosen = b;
    return d;
  }
  double best_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < state.k(); ++i) {
    if (i == b) continue;
    double v = cei_value(state, sigma, i);
    if (v > best_val) {
      best_val = v;
      d.chosen = i;
    }
  }
  return d;
}

CeiGradient gcei_grad(const PosteriorState& state,
                      const std::vector<double>& sigma, std::size_t i) {
  require_initialized(state);
  std::size_t b = current_best(state);
  if (i == b) throw std::invalid_argument("gcei_grad: i is the sample-best");
  double nu = 1.0 / state.precision(i, sigma[i]) + 1.0 / state.precision(b, sigma[b]);
  double gap = state.sample_mean(i) - state.sample_mean(b);
  double common = norm_pdf(gap / std::sqrt(nu)) / (2.0 * std::sqrt(nu));
  double ri = double(state.counts[i]);
  double rb = double(state.counts[b]);
  CeiGradient g;
  g.d_own = -(sigma[i] * sigma[i] / (ri * ri)) * common;
  g.d_best = -(sigma[b] * sigma[b] / (rb * rb)) * common;
  return g;
}

PolicyDecision gcei_choose(const PosteriorState& state,
                           const std::vector<double>& sigma) {
  require_initialized(state);
  std::size_t b = current_best(state);
  double total_best = 0.0;
  double min_own = std::numeric_limits<double>::infinity();
  std::size_t challenger = 0;
  PolicyDecision d;
  d.scores.resize(state.k(), 0.0);
  for (std::size_t i = 0; i < state.k(); ++i) {
    if (i == b) continue;
    CeiGradient g = gcei_grad(state, sigma, i);
    total_best += g.d_best;
    d.scores[i] = g.d_own;
    if (g.d_own < min_own) {
      min_own = g.d_own;
      challenger = i;
    }
  }
  d.scores[b] = total_best;
  d.chosen = (total_best <= min_own) ? b : challenger;
  return d;
}

PolicyDecision ttts_choose(const PosteriorState& state,
                           const std::vector<double>& sigma, RngStream& rng,
                           double beta) {
  require_initialized(state);
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("ttts_choose: beta must lie in (0, 1]");
  std::size_t k = state.k();

  // The rejection loop below may take thousands of rounds once the posterior
  // concentrates, so hoist the per-system moments and use the cheap ziggurat
  // sampler for the Thompson draws.
  std::vector<double> mean(k), sd(k);
  for (std::size_t i = 0; i < k; ++i) {
    mean[i] = state.sample_mean(i);
    sd[i] = std::sqrt(1.0 / state.precision(i, sigma[i]));
  }

  auto thompson_argmax = [&](std::size_t exclude) {
    std::size_t arg = std::size_t(-1);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
      double draw = mean[i] + sd[i] * rng.normal_fast();
      if (i == exclude) continue;  // still consumes the draw
      if (draw > best) {
        best = draw;
        arg = i;
      }
    }
    return arg;
  };

  std::size_t leader = thompson_argmax(std::size_t(-1));
  PolicyDecision d;
  if (rng.uniform() < beta) {
    d.chosen = leader;
    return d;
  }
  constexpr int kMaxRounds = 10000;
  for (int round = 0; round < kMaxRounds; ++round) {
    std::size_t j = thompson_argmax(std::size_t(-1));
    if (j != leader) {
      d.chosen = j;
      return d;
    }
  }
  // Cap reached: one final draw restricted to systems != leader.
  d.chosen = thompson_argmax(leader);
  return d;
}

std::size_t static_choose(const std::vector<double>& alpha,
                          const std::vector<std::int64_t>& counts) {
  std::int64_t t = 0;
  for (std::int64_t c : counts) t += c;
  std::size_t arg = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    double deficit = alpha[i] * double(t + 1) - double(counts[i]);
    if (deficit > best) {
      best = deficit;
      arg = i;
    }
  }
  return arg;
}

}  // namespace rsbench
