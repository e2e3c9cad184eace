// Acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "rsbench/allocation.hpp"
#include "rsbench/bench.hpp"
#include "rsbench/experiment_io.hpp"
#include "rsbench/normal.hpp"
#include "rsbench/rng.hpp"

using namespace rsbench;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail = "") {
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

ExperimentResult slippage5_run(std::int64_t budget, int macroreps,
                               std::uint64_t seed,
                               std::vector<PolicyKind> kinds) {
  ExperimentSpec spec;
  spec.config = ConfigName::Slippage;
  spec.k = 5;
  spec.budget = budget;
  spec.macroreps = macroreps;
  spec.seed = seed;
  for (PolicyKind kind : kinds) spec.policies.push_back(PolicySpec{kind, 0.5, {}});
  return run_experiment(spec, 4);
}

void criterion_1() {
  ProblemInstance slip({-1, -1, -1, -1, 0}, {1, 1, 1, 1, 1});
  double best_ms = 1e300;
  SolverReport r;
  for (int rep = 0; rep < 5; ++rep) {
    auto start = std::chrono::steady_clock::now();
    r = solve_gj(slip);
    best_ms = std::min(best_ms, elapsed_ms(start));
  }
  bool ok = true;
  for (int i = 0; i < 4; ++i)
    ok = ok && std::abs(r.alpha.alpha[i] - 1.0 / 6.0) < 1e-6;
  ok = ok && std::abs(r.alpha.alpha[4] - 1.0 / 3.0) < 1e-6;
  bool fast = best_ms < 1.0;
  std::ostringstream d;
  d << "alpha_best=" << r.alpha.alpha[4] << ", " << best_ms << " ms";
  report(1, "slippage k=5 allocation is (1/6,...,1/3)", ok && fast, d.str());
}

void criterion_2() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string what;
  for (ConfigName c : {ConfigName::Slippage, ConfigName::AscendingMean,
                       ConfigName::AscendingVariance,
                       ConfigName::DescendingVariance}) {
    for (int k : {5, 10, 20, 30}) {
      ProblemInstance pre = prescaled_instance(c, k);
      SolverReport r = solve_gj(pre);
      std::size_t b = pre.best();
      double rate = rate_of(pre, r.alpha.alpha, b == 0 ? 1 : 0);
      bool here = r.max_rate_gap <= 1e-8 * rate &&
                  std::abs(r.balance_residual) <= 1e-8;
      for (double scale : {0.1, 10.0}) {
        std::vector<double> mu(pre.mu);
        for (double& m : mu) m *= scale;
        SolverReport rs = solve_gj(ProblemInstance(mu, pre.sigma));
        for (int i = 0; i < k; ++i)
          here = here && std::abs(rs.alpha.alpha[i] - r.alpha.alpha[i]) <= 1e-8;
      }
      if (!here && what.empty())
        what = config_name_string(c) + " k=" + std::to_string(k);
      ok = ok && here;
    }
  }
  double ms = elapsed_ms(start);
  std::ostringstream d;
  d << ms << " ms" << (what.empty() ? "" : ", first failure: " + what);
  report(2, "residual certificates and scale invariance, all configs", ok && ms < 1000.0, d.str());
}

void criterion_3() {
  ProblemInstance pre = prescaled_instance(ConfigName::Slippage, 5);
  SolverReport r = solve_gj(pre);
  double c = scale_constant(pre.mu, pre.sigma, 100, r.alpha);
  std::ostringstream d;
  d << "c=" << c;
  report(3, "scaling constant c = 0.3 for slippage k=5, r0=100",
         std::abs(c - 0.3) < 1e-12, d.str());
}

void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  // independent continuous-count CEI for central differences
  auto cei_cont = [](double ri, double rb, double gap, double si, double sb) {
    double nu = si * si / ri + sb * sb / rb;
    double z = gap / std::sqrt(nu);
    return std::sqrt(nu) * (z * norm_cdf(z) + norm_pdf(z));
  };
  RngStream rng(2026);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t k = 2 + std::size_t(rng.uniform() * 9.0);
    PosteriorState s(k);
    std::vector<double> sigma(k);
    for (std::size_t i = 0; i < k; ++i) {
      s.counts[i] = 1 + std::int64_t(rng.uniform() * 100.0);
      s.sums[i] = rng.normal() * double(s.counts[i]);
      s.total += s.counts[i];
      sigma[i] = 0.4 + 1.6 * rng.uniform();
    }
    std::size_t b = current_best(s);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == b) continue;
      double ri = double(s.counts[i]), rb = double(s.counts[b]);
      double gap = s.sample_mean(i) - s.sample_mean(b);
      double nu = sigma[i] * sigma[i] / ri + sigma[b] * sigma[b] / rb;
      if (gap / std::sqrt(nu) < -8.0) continue;  // density underflow regime
      CeiGradient g = gcei_grad(s, sigma, i);
      double h = 1e-4 * ri;
      double fd_own = (cei_cont(ri + h, rb, gap, sigma[i], sigma[b]) -
                       cei_cont(ri - h, rb, gap, sigma[i], sigma[b])) / (2 * h);
      double hb = 1e-4 * rb;
      double fd_best = (cei_cont(ri, rb + hb, gap, sigma[i], sigma[b]) -
                        cei_cont(ri, rb - hb, gap, sigma[i], sigma[b])) / (2 * hb);
      ok = ok && std::abs(g.d_own - fd_own) <= 1e-5 * std::abs(fd_own);
      ok = ok && std::abs(g.d_best - fd_best) <= 1e-5 * std::abs(fd_best);
    }
  }
  double ms = elapsed_ms(start);
  std::ostringstream d;
  d << ms << " ms";
  report(4, "gCEI gradients match finite differences on 1000 states",
         ok && ms < 5000.0, d.str());
}

void criterion_5() {
  auto start = std::chrono::steady_clock::now();
  ExperimentResult res =
      slippage5_run(5000, 200, 11, {PolicyKind::Gcei, PolicyKind::Mcei});
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, series] : res.series) {
    double final_alloc = series.alloc_best_mean.back();
    double peak = 0.0;
    for (double a : series.alloc_best_mean) peak = std::max(peak, a);
    bool converged = std::abs(final_alloc - 1.0 / 3.0) <= 0.05;
    // Both policies approach 1/3 from above; the mean-curve excess is damped
    // early on because the sample-best identity is still frequently wrong, so
    // the detectable overshoot of the averaged curve is small but systematic
    // (gCEI peaks near 0.342 across seeds, mCEI higher).
    bool overshoot = peak > 1.0 / 3.0 + 0.005;
    d << name << ": final=" << final_alloc << " peak=" << peak << "  ";
    ok = ok && converged && overshoot;
  }
  double ms = elapsed_ms(start);
  d << ms << " ms";
  report(5, "gCEI/mCEI converge to 1/3 after overshooting",
         ok && ms < 120000.0, d.str());
}

void criterion_6() {
  auto start = std::chrono::steady_clock::now();
  ExperimentResult res = slippage5_run(5000, 200, 12, {PolicyKind::Ttts});
  double final_alloc = res.series[0].second.alloc_best_mean.back();
  double ms = elapsed_ms(start);
  std::ostringstream d;
  d << "alloc=" << final_alloc << ", " << ms << " ms";
  report(6, "TTTS beta=1/2 allocates [0.40,0.60] to the best",
         final_alloc >= 0.40 && final_alloc <= 0.60 && ms < 120000.0, d.str());
}

void criterion_7() {
  auto start = std::chrono::steady_clock::now();
  ExperimentResult res =
      slippage5_run(1000, 1000, 13, {PolicyKind::Gcei, PolicyKind::StaticOracle});
  double p_gcei = res.series[0].second.pics.back();
  double p_static = res.series[1].second.pics.back();
  double m = 1000.0;
  double se = std::sqrt((p_gcei * (1 - p_gcei) + p_static * (1 - p_static)) / m);
  double ms = elapsed_ms(start);
  std::ostringstream d;
  d << "gcei=" << p_gcei << " static=" << p_static << " se=" << se << ", " << ms
    << " ms";
  report(7, "gCEI PICS(1000) <= static-oracle PICS(1000) + 3 SE",
         p_gcei <= p_static + 3.0 * se && ms < 120000.0, d.str());
}

void criterion_8() {
  auto start = std::chrono::steady_clock::now();
  ExperimentResult res = slippage5_run(
      500, 1000, 14,
      {PolicyKind::Aomap, PolicyKind::Mcei, PolicyKind::Gcei, PolicyKind::Ttts});
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, series] : res.series) {
    double early = series.pics[std::size_t(60 - series.start_t)];
    double late = series.pics.back();
    double se = std::sqrt((early * (1 - early) + late * (1 - late)) / 1000.0);
    bool here = late < early - 3.0 * se;
    d << name << ": " << early << "->" << late << "  ";
    ok = ok && here;
  }
  double ms = elapsed_ms(start);
  d << ms << " ms";
  report(8, "PICS(500) below PICS(60) by 3 SEs for all policies",
         ok && ms < 180000.0, d.str());
}

void criterion_9() {
  ExperimentResult res = slippage5_run(400, 300, 15, {PolicyKind::Gcei});
  const MetricsSeries& s = res.series[0].second;
  bool ok = true;
  for (std::size_t i = 0; i < s.pics.size(); ++i)
    ok = ok && std::abs(s.gap_mean[i] - res.scale_c * s.pics[i]) <= 1e-12;
  report(9, "slippage gap_mean(t) = c * pics(t) to 1e-12 at every t", ok);
}

void criterion_10() {
  ExperimentSpec spec;
  spec.config = ConfigName::Slippage;
  spec.k = 5;
  spec.budget = 300;
  spec.macroreps = 200;
  spec.seed = 16;
  for (PolicyKind kind : {PolicyKind::Gcei, PolicyKind::Ttts})
    spec.policies.push_back(PolicySpec{kind, 0.5, {}});
  std::ostringstream a, b;
  emit_csv(run_experiment(spec, 1).series, a, 1);
  emit_csv(run_experiment(spec, 4).series, b, 1);
  report(10, "same seed, 1 vs N workers: byte-identical CSV",
         a.str() == b.str() && !a.str().empty());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
