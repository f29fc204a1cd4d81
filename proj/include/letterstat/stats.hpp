#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Distribution helpers shared by the analysis modules.
namespace letterstat::stats {

/// Inverse standard normal CDF.
double normal_quantile(double p);

/// P(|Z| >= |z|) for a standard normal Z.
double normal_two_sided_p(double z);

/// Upper tail of the chi-square distribution with one degree of freedom,
/// via P(X >= x) = erfc(sqrt(x / 2)).
double chi_square_df1_sf(double x);

/// P(X <= k) for X ~ Binomial(n, p).
double binomial_cdf(std::uint64_t k, std::uint64_t n, double p);

/// 1-based ranks with ties sharing their average rank. Larger values get
/// larger ranks.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation. With zero variance on either side the result is 1
/// when the vectors are identical and 0 otherwise.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace letterstat::stats
