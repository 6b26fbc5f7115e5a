#pragma once

// Degree-sparsification pipeline: parameter derivation, copy amplification,
// independent edge subsampling and one-shot high-degree trimming.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lcsparse/core.hpp"
#include "lcsparse/rng.hpp"

namespace lcsparse {

/// Default constants of the reduction.
inline constexpr double kDefaultDeltaConstant = 1e6;
inline constexpr double kDefaultSamplingConstant = 1e-4;
inline constexpr double kDefaultGuardRatio = 1e4;
/// Bound on Pr[endpoint trimmed | edge kept] that the trimming analysis needs.
inline constexpr double kDefaultTrimSlack = 2e-4;

/// Optional replacements for the default constants. `delta` pins the degree
/// bound directly and bypasses the c_delta formula.
struct SparsifyOverrides {
  std::optional<double> c_delta;
  std::optional<double> c_p;
  std::optional<double> guard_ratio;
  std::optional<double> trim_slack;
  std::optional<std::size_t> delta;
};

struct SparsifyParams {
  std::size_t delta = 1;  ///< degree bound
  double p = 0.0;         ///< sampling probability, set per instance
  double c_delta = kDefaultDeltaConstant;
  double c_p = kDefaultSamplingConstant;
  double gamma = 0.0;
  double guard_ratio = kDefaultGuardRatio;
  double trim_slack = kDefaultTrimSlack;
  std::size_t degree = 0;  ///< regular degree D of the input, set per instance

  /// 1/delta + p*D/delta: the Markov bound on Pr[endpoint trimmed | edge kept].
  double trim_markov_bound() const;
  /// Whether the trimming analysis applies at these constants.
  bool trim_chain_holds() const { return trim_markov_bound() <= trim_slack; }
};

/// delta = ceil(c_delta * 2 ln(2 sigma) / sqrt(gamma)), natural log.
/// Throws std::invalid_argument unless 0 < gamma < 1 and sigma >= 1.
SparsifyParams compute_params(std::size_t sigma, double gamma, const SparsifyOverrides& overrides = {});

struct GapParams {
  std::uint64_t g = 2;
  double big_c = 1.0;
  std::uint64_t q = 2;  ///< smallest prime power with q / ln q > 1e5 * C * g^2
  std::uint64_t sigma = 4;  ///< q^2
  double gamma = 0.0;       ///< 2 C ln q / q
  std::size_t delta = 1;    ///< degree bound for alphabet q^2 under default constants
  double eps = 0.0;         ///< 1 / delta
  /// min(eps, C ln q / q). Recorded only; nothing downstream reads it.
  double pcp_delta = 0.0;
  /// q <= 1e7 * C * g^2 * ln(g^2 + 2)
  bool within_growth_band = true;
};

bool is_prime_power(std::uint64_t n);

/// Requires g >= 2 and big_c > 0.
GapParams instantiate_gap_params(std::uint64_t g, double big_c);

/// t copies of each side; vertex (v, i) gets index v * t + i and every edge
/// becomes t^2 edges carrying the same table.
Instance amplify_copies(const Instance& inst, std::size_t t);
Labeling amplify_labeling(const Labeling& phi, std::size_t t);

/// Indices in [0, m) kept by independent p-coin flips. Edge i keeps iff
/// to_unit(mix(seed, Stream::subsample, i)) < p, so kept sets are nested in p.
std::vector<std::size_t> subsample_indices(std::size_t m, double p, Seed seed);
Instance subsample(const Instance& inst, double p, Seed seed);

struct TrimResult {
  Instance instance;
  std::size_t removed_edges = 0;
  std::size_t trimmed_a = 0;
  std::size_t trimmed_b = 0;
  /// Edge indices of the input that survive.
  std::vector<std::size_t> kept;
};

/// Drops every edge with an endpoint of degree > delta (degrees measured on
/// the input, single pass).
TrimResult trim(const Instance& inst, std::size_t delta);

class SparsifyError : public std::runtime_error {
 public:
  enum class Kind { not_regular, no_edges, degree_guard, probability_range };
  SparsifyError(Kind kind, const std::string& what, std::size_t required_degree = 0)
      : std::runtime_error(what), kind_(kind), required_degree_(required_degree) {}
  Kind kind() const noexcept { return kind_; }
  /// Minimum D accepted by the guard (degree_guard only).
  std::size_t required_degree() const noexcept { return required_degree_; }

 private:
  Kind kind_;
  std::size_t required_degree_;
};

struct SparsifyOutput {
  Instance intermediate;
  Instance trimmed;
  SparsifyParams params;
  std::size_t removed_edges = 0;
  std::size_t trimmed_vertices_a = 0;
  std::size_t trimmed_vertices_b = 0;
  /// Original edge indices present in `intermediate` and `trimmed`.
  std::vector<std::size_t> intermediate_edges;
  std::vector<std::size_t> trimmed_edges;
};

/// Parameters sparsify would use on `inst`; same checks and errors.
SparsifyParams sparsify_params(const Instance& inst, double gamma, const SparsifyOverrides& overrides = {});

/// Full pipeline on a regular instance of degree D >= 1: delta from
/// compute_params, p = c_p * delta / D, subsample then trim.
/// Throws SparsifyError when the input is not regular, the guard
/// D >= guard_ratio * delta fails, or p falls outside (0, 1].
SparsifyOutput sparsify(const Instance& inst, double gamma, Seed seed, const SparsifyOverrides& overrides = {});

}  // namespace lcsparse
