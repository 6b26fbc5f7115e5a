#pragma once

// Exact binomial probabilities by direct summation of the mass function.

#include <cstdint>

namespace lcsparse {

/// ln C(n, k) via log-gamma.
double ln_choose(double n, double k);

double binomial_pmf(std::uint64_t n, std::uint64_t k, double p);
/// Pr[X <= k] for X ~ Binomial(n, p).
double binomial_cdf(std::uint64_t n, std::uint64_t k, double p);
/// Pr[X >= k] for X ~ Binomial(n, p).
double binomial_sf(std::uint64_t n, std::uint64_t k, double p);
/// Pr[X < x] for real x.
double binomial_below(std::uint64_t n, double x, double p);

}  // namespace lcsparse
