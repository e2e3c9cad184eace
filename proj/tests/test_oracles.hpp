// Test-side oracles, independent of the library implementation path.
#pragma once

#include <cmath>

namespace oracle {

inline double pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * 3.14159265358979323846);
}

// Composite Simpson quadrature of the normal density over [-13, z].
inline double cdf_quadrature(double z) {
  const double a = -13.0;
  if (z <= a) return 0.0;
  const int n = 2 * 14000;  // even interval count
  const double h = (z - a) / n;
  double s = pdf(a) + pdf(z);
  for (int i = 1; i < n; ++i) s += pdf(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline double f_of(double z) { return z * cdf_quadrature(z) + pdf(z); }

}  // namespace oracle
