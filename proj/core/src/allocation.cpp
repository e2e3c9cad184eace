#include "rsbench/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsbench {

namespace {

void require_unique_best(const ProblemInstance& instance, std::size_t b) {
  double sigma_max = *std::max_element(instance.sigma.begin(), instance.sigma.end());
  for (std::size_t i = 0; i < instance.k(); ++i) {
    if (i == b) continue;
    if (instance.mu[b] - instance.mu[i] <= 1e-12 * sigma_max)
      throw std::invalid_argument("solve_gj: non-unique best mean");
  }
}

}  // namespace

double rate_of(const ProblemInstance& instance,
               const std::vector<double>& alpha, std::size_t i) {
  std::size_t b = instance.best();
  if (i == b) throw std::invalid_argument("rate_of: i is the best system");
  double gap = instance.mu[i] - instance.mu[b];
  double nu = instance.sigma[i] * instance.sigma[i] / alpha[i] +
              instance.sigma[b] * instance.sigma[b] / alpha[b];
  return gap * gap / nu;
}

double balance_residual(const ProblemInstance& instance,
                        const std::vector<double>& alpha) {
  std::size_t b = instance.best();
  double w_b = instance.sigma[b] / alpha[b];
  double sum = 0.0;
  for (std::size_t j = 0; j < instance.k(); ++j) {
    if (j == b) continue;
    double r = w_b * alpha[j] / instance.sigma[j];
    sum += r * r;
  }
  return sum - 1.0;
}

SolverReport solve_gj(const ProblemInstance& instance, double tol) {
  std::size_t k = instance.k();
  std::size_t b = instance.best();
  require_unique_best(instance, b);
  if (!(tol >= 1e-12)) tol = 1e-12;

  double var_b = instance.sigma[b] * instance.sigma[b];
  std::vector<double> gap2(k), var(k);
  double min_gap2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    var[i] = instance.sigma[i] * instance.sigma[i];
    double g = instance.mu[i] - instance.mu[b];
    gap2[i] = g * g;
    if (i != b) min_gap2 = std::min(min_gap2, gap2[i]);
  }

  // For fixed (alpha_b, rho): alpha_i = var_i / (gap_i^2/rho - var_b/alpha_b),
  // strictly increasing in rho on (0, rho_max).
  auto inferior_shares = [&](double alpha_b, double rho, std::vector<double>& out) {
    double c_b = var_b / alpha_b;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == b) continue;
      double denom = gap2[i] / rho - c_b;
      out[i] = denom > 0.0 ? var[i] / denom
                           : std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> shares(k, 0.0);
  auto share_sum = [&](double alpha_b, double rho) {
    inferior_shares(alpha_b, rho, shares);
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      if (i != b) s += shares[i];
    return s;
  };

  // Inner bisection: rho such that the inferior shares sum to 1 - alpha_b.
  auto solve_rho = [&](double alpha_b) {
    double target = 1.0 - alpha_b;
    double lo = 0.0;
    double hi = alpha_b * min_gap2 / var_b;  // share_sum -> inf as rho -> hi
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (share_sum(alpha_b, mid) < target)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  auto residual_at = [&](double alpha_b) {
    double rho = solve_rho(alpha_b);
    inferior_shares(alpha_b, rho, shares);
    shares[b] = alpha_b;
    return balance_residual(instance, shares);
  };

  // Outer bisection on alpha_b: residual decreases from +inf (alpha_b -> 0)
  // to about -1 (alpha_b -> 1). Expand toward the boundaries if the initial
  // bracket does not straddle zero.
  double lo = 0.25, hi = 0.75;
  int expansions = 0;
  while (residual_at(lo) < 0.0) {
    lo *= 0.5;
    if (++expansions > 200)
      throw std::runtime_error("solve_gj: bracket failure at lower bound");
  }
  while (residual_at(hi) > 0.0) {
    hi = 0.5 * (hi + 1.0);
    if (++expansions > 200)
      throw std::runtime_error("solve_gj: bracket failure at upper bound");
  }

  int iterations = 0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    ++iterations;
    if (residual_at(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }

  double alpha_b = 0.5 * (lo + hi);
  double rho = solve_rho(alpha_b);
  inferior_shares(alpha_b, rho, shares);
  shares[b] = alpha_b;

  // Normalize: a uniform rescale leaves rate equality and the balance
  // residual exactly unchanged.
  double s = 0.0;
  for (double a : shares) s += a;
  for (double& a : shares) a /= s;

  SolverReport report;
  report.alpha.alpha = shares;
  report.iterations = iterations;
  report.balance_residual = balance_residual(instance, shares);
  double rmin = std::numeric_limits<double>::infinity();
  double rmax = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    if (i == b) continue;
    double r = rate_of(instance, shares, i);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  report.max_rate_gap = rmax - rmin;

  double common_rate = rmin;
  if (report.max_rate_gap > tol * common_rate ||
      std::abs(report.balance_residual) > tol)
    throw std::runtime_error("solve_gj: requested tolerance not certified");
  return report;
}

double scale_constant(const std::vector<double>& prescaled_means,
                      const std::vector<double>& sigma, std::int64_t r0,
                      const AllocationVector& alpha_star) {
  std::size_t k = prescaled_means.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < k; ++i)
    if (prescaled_means[i] > prescaled_means[best]) best = i;
  std::size_t second = best == 0 ? 1 : 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == best) continue;
    if (prescaled_means[i] > prescaled_means[second]) second = i;
  }
  double gap = prescaled_means[best] - prescaled_means[second];
  if (!(gap > 0.0))
    throw std::invalid_argument("scale_constant: top two prescaled means tie");
  const std::vector<double>& a = alpha_star.alpha;
  double se2 = sigma[second] * sigma[second] / (double(r0) * a[second]) +
               sigma[best] * sigma[best] / (double(r0) * a[best]);
  return std::sqrt(se2) / gap;
}

}  // namespace rsbench
