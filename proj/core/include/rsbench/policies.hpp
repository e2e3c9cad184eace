// policies.hpp -- adaptive replication-allocation rules.
//
// Each policy maps (posterior state, known sigmas, randomness) to the index
// of the next system to simulate. Policies see sigma but never true means.
#pragma once

#include <cstdint>
#include <vector>

#include "rsbench/posterior.hpp"
#include "rsbench/rng.hpp"

namespace rsbench {

enum class PolicyKind { Aomap, Mcei, Gcei, Ttts, StaticOracle };

struct PolicyDecision {
  std::size_t chosen = 0;
  // Optional per-system acquisition scores or gradients, for logging only;
  // empty unless the caller asked for diagnostics. Not part of any
  // determinism contract.
  std::vector<double> scores;
};

// Expected improvement of system i over the current sample-best:
// sqrt(1/p_i) * f((mean_i - mean_best) / sqrt(1/p_i)).
double ei_value(const PosteriorState& state, const std::vector<double>& sigma,
                std::size_t i);

// Penalty width for the sample-best target under AOMAP:
// (sum_{i != best} sigma_best^2 sigma_i^2 / (mean_i - mean_best)^4)^(-1/4).
// Defined as 0 when any non-best mean ties the best (limit of the sum).
double aomap_xi(const PosteriorState& state, const std::vector<double>& sigma);

// AOMAP: argmax over all systems of sqrt(1/p_i) * f((mean_i - A_i)*sqrt(p_i))
// where A_i is the best mean, shifted up by xi*sigma_best for systems whose
// mean ties the best. Ties broken by smallest index.
PolicyDecision aomap_choose(const PosteriorState& state,
                            const std::vector<double>& sigma);

// Complete expected improvement of non-best system i, accounting for the
// posterior variance of both i and the sample-best:
// sqrt(nu_i) * f((mean_i - mean_best)/sqrt(nu_i)), nu_i = 1/p_i + 1/p_best.
double cei_value(const PosteriorState& state, const std::vector<double>& sigma,
                 std::size_t i);

// mCEI: simulate the sample-best iff (r_best/sigma_best)^2 is strictly less
// than sum_{i != best} (r_i/sigma_i)^2; otherwise the non-best system with
// the largest CEI.
PolicyDecision mcei_choose(const PosteriorState& state,
                           const std::vector<double>& sigma);

struct CeiGradient {
  double d_own;   // d CEI_i / d r_i, always <= 0
  double d_best;  // d CEI_i / d r_best, always <= 0
};

// Partial derivatives of CEI_i with respect to the replication counts of
// system i and of the sample-best, treating counts as continuous. The
// derivative with respect to any other system is identically zero.
CeiGradient gcei_grad(const PosteriorState& state,
                      const std::vector<double>& sigma, std::size_t i);

// gCEI: simulate the sample-best iff
//   sum_{i != best} dCEI_i/dr_best <= min_{i != best} dCEI_i/dr_i
// (ties go to the best); otherwise the argmin of dCEI_i/dr_i.
PolicyDecision gcei_choose(const PosteriorState& state,
                           const std::vector<double>& sigma);

// Top-two Thompson sampling: Thompson-sample a leader; with probability beta
// simulate it, otherwise resample until a distinct challenger appears.
// The challenger loop is capped at 10,000 rounds; on cap the challenger is
// the argmax of one final Thompson draw restricted to systems != leader.
PolicyDecision ttts_choose(const PosteriorState& state,
                           const std::vector<double>& sigma, RngStream& rng,
                           double beta);

// Largest-deficit scheduler for a fixed target allocation: returns
// argmax_i alpha_i*(t+1) - counts_i with t = sum counts; ties to smallest
// index. Tracks alpha to within one replication at all times.
std::size_t static_choose(const std::vector<double>& alpha,
                          const std::vector<std::int64_t>& counts);

}  // namespace rsbench
