#include "rsbench/normal.hpp"

#include <cmath>

namespace rsbench {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490393;
}  // namespace

double norm_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double norm_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double f_acq(double z) {
  // z*Phi(z) and phi(z) nearly cancel deep in the left tail; the true
  // value phi(z)/z^2*(1+o(1)) stays positive, so clamp at zero.
  double v = z * norm_cdf(z) + norm_pdf(z);
  return v > 0.0 ? v : 0.0;
}

}  // namespace rsbench
