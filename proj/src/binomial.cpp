#include "lcsparse/binomial.hpp"

#include <cmath>
#include <stdexcept>

namespace lcsparse {

double ln_choose(double n, double k) {
  if (k < 0 || k > n) throw std::invalid_argument("ln_choose: k outside [0, n]");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

namespace {

long double pmf_ld(std::uint64_t n, std::uint64_t k, double p) {
  if (k > n) return 0.0L;
  if (p <= 0.0) return k == 0 ? 1.0L : 0.0L;
  if (p >= 1.0) return k == n ? 1.0L : 0.0L;
  const long double nn = static_cast<long double>(n);
  const long double kk = static_cast<long double>(k);
  const long double log_mass = std::lgamma(nn + 1.0L) - std::lgamma(kk + 1.0L) - std::lgamma(nn - kk + 1.0L) +
                               kk * std::log(static_cast<long double>(p)) +
                               (nn - kk) * std::log1p(-static_cast<long double>(p));
  return std::exp(log_mass);
}

// Sum of pmf over [lo, hi].
double mass(std::uint64_t n, std::uint64_t lo, std::uint64_t hi, double p) {
  long double total = 0.0L;
  for (std::uint64_t k = lo; k <= hi && k <= n; ++k) total += pmf_ld(n, k, p);
  return static_cast<double>(total > 1.0L ? 1.0L : total);
}

}  // namespace

double binomial_pmf(std::uint64_t n, std::uint64_t k, double p) { return static_cast<double>(pmf_ld(n, k, p)); }

double binomial_cdf(std::uint64_t n, std::uint64_t k, double p) {
  if (k >= n) return 1.0;
  // Sum the tail that lies away from the mean so small tails keep full precision.
  if (static_cast<double>(k) <= static_cast<double>(n) * p) return mass(n, 0, k, p);
  return 1.0 - mass(n, k + 1, n, p);
}

double binomial_sf(std::uint64_t n, std::uint64_t k, double p) {
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  if (static_cast<double>(k) >= static_cast<double>(n) * p) return mass(n, k, n, p);
  return 1.0 - mass(n, 0, k - 1, p);
}

double binomial_below(std::uint64_t n, double x, double p) {
  if (x <= 0.0) return 0.0;
  const double top = std::ceil(x) - 1.0;  // largest integer strictly below x
  return binomial_cdf(n, static_cast<std::uint64_t>(top), p);
}

}  // namespace lcsparse
