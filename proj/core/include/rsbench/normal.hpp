// normal.hpp -- standard normal density, CDF, and the EI kernel f(z).
#pragma once

namespace rsbench {

// Standard normal density phi(z).
double norm_pdf(double z);

// Standard normal CDF Phi(z), absolute error <= 1e-12.
double norm_cdf(double z);

// f(z) = z*Phi(z) + phi(z), the expected positive exceedance of a
// standard normal over -z. Positive for all finite z; f'(z) = Phi(z).
double f_acq(double z);

}  // namespace rsbench
