// allocation.hpp -- rate-optimal static allocation for normal systems with
// known variances, characterized by equal pairwise large-deviations rates
// plus a balance equation on the best system's share.
#pragma once

#include <cstdint>
#include <vector>

#include "rsbench/problem.hpp"

namespace rsbench {

// A point on the open k-simplex: alpha_i > 0, sum alpha_i = 1.
struct AllocationVector {
  std::vector<double> alpha;
};

struct SolverReport {
  AllocationVector alpha;
  double max_rate_gap = 0.0;      // largest pairwise difference of rates
  double balance_residual = 0.0;  // recomputed from alpha
  int iterations = 0;             // outer bisection steps
};

// Decay-rate proxy of the pairwise incorrect-selection event for non-best
// system i under allocation alpha:
//   (mu_i - mu_best)^2 / (sigma_i^2/alpha_i + sigma_best^2/alpha_best).
// The conventional large-deviations factor 1/2 is omitted; only equality of
// rates across systems matters for the optimality conditions.
double rate_of(const ProblemInstance& instance,
               const std::vector<double>& alpha, std::size_t i);

// Balance condition on the best system's share:
//   sum_{j != best} (sigma_best/alpha_best)^2 * (alpha_j/sigma_j)^2 - 1.
// Zero at the optimal allocation; positive means the best system is
// under-allocated.
double balance_residual(const ProblemInstance& instance,
                        const std::vector<double>& alpha);

// Solve for the allocation with equal rates and zero balance residual.
// Nested bisection: the outer variable is the best system's share, the inner
// variable is the common rate. Throws on a non-unique best mean or on
// bracket failure after bounded expansion.
SolverReport solve_gj(const ProblemInstance& instance, double tol = 1e-10);

// Scaling constant c so that, under the optimal allocation alpha_star, the
// gap between the top two prescaled means equals one standard error of their
// estimated difference after r0 replications:
//   c*(m_best - m_second) = sqrt(sigma_second^2/(r0*alpha_second)
//                               + sigma_best^2/(r0*alpha_best)).
double scale_constant(const std::vector<double>& prescaled_means,
                      const std::vector<double>& sigma, std::int64_t r0,
                      const AllocationVector& alpha_star);

}  // namespace rsbench
