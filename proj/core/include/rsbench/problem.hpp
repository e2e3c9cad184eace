// problem.hpp -- ground-truth description of a selection problem.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rsbench/rng.hpp"

namespace rsbench {

// True means and standard deviations of the k simulated systems. Policies
// never see mu; sigma is known throughout (known-variance setting).
struct ProblemInstance {
  std::vector<double> mu;
  std::vector<double> sigma;

  ProblemInstance() = default;
  ProblemInstance(std::vector<double> means, std::vector<double> stds)
      : mu(std::move(means)), sigma(std::move(stds)) {
    if (mu.size() < 2 || mu.size() != sigma.size())
      throw std::invalid_argument("ProblemInstance: need k >= 2 with matching sigma");
    for (double s : sigma)
      if (!(s > 0.0)) throw std::invalid_argument("ProblemInstance: sigma must be > 0");
  }

  std::size_t k() const { return mu.size(); }

  // Index of the largest true mean; ties broken by smallest index.
  std::size_t best() const {
    std::size_t b = 0;
    for (std::size_t i = 1; i < mu.size(); ++i)
      if (mu[i] > mu[b]) b = i;
    return b;
  }
};

// One replication of system i: mu_i + sigma_i * Z.
inline double sample_output(const ProblemInstance& instance, std::size_t i,
                            RngStream& rng) {
  if (i >= instance.k()) throw std::out_of_range("sample_output: system index");
  return instance.mu[i] + instance.sigma[i] * rng.normal();
}

}  // namespace rsbench
