#pragma once

#include <cstddef>
#include <vector>

namespace agtd {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
/// Series expansion for x < a + 1, continued fraction otherwise;
/// accurate to better than 1e-10 over the ranges used here.
double regularized_gamma_q(double a, double x);

/// Upper-tail p-value of a chi-squared statistic with `df` degrees of freedom.
double chi_squared_upper_p(double statistic, std::size_t df);

/// Shannon entropy in bits of a histogram given as counts; empty bins
/// contribute nothing. Zero total yields zero.
double shannon_entropy_bits(const std::vector<std::size_t>& counts);

}  // namespace agtd
