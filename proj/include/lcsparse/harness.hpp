#pragma once

// Monte Carlo experiments for the probabilistic steps of the sparsification
// analysis, each paired with an exact oracle computed before sampling.
//
// Trial i always draws from mix(seed, Stream::trial, i) and results are folded
// in index order, so a report does not depend on the worker count.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "lcsparse/core.hpp"
#include "lcsparse/generators.hpp"
#include "lcsparse/reductions.hpp"
#include "lcsparse/solvers.hpp"

namespace lcsparse {

/// Width of every confidence band, in standard errors.
inline constexpr double kSigmaRadius = 3.0;

struct NamedCheck {
  std::string name;
  std::size_t violations = 0;
};

struct TrialReport {
  std::string experiment;
  std::size_t trials = 0;
  std::size_t discarded = 0;  ///< trials dropped (e.g. solver budget exhausted)

  std::string statistic;
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased sample variance of the statistic

  /// Event tracked by success_count, and the claimed lower bound on its probability.
  double threshold = 0.0;
  std::size_t success_count = 0;
  std::optional<double> claim_probability;

  /// Exact expectation of the statistic and, when known, its exact variance.
  std::optional<double> oracle_value;
  std::optional<double> oracle_variance;

  std::vector<NamedCheck> checks;
  std::vector<std::pair<std::string, double>> details;
  std::vector<std::string> notes;

  /// Per-trial raw rows (line-delimited output only).
  std::vector<std::string> row_columns;
  std::vector<std::vector<double>> rows;

  std::size_t effective_trials() const noexcept { return trials - discarded; }
  double frequency() const;
  /// kSigmaRadius * sqrt(c (1 - c) / trials) around the claimed probability c.
  double frequency_radius() const;
  /// kSigmaRadius standard errors of the mean, from the exact variance when
  /// known, else the sample variance.
  double oracle_radius() const;

  bool frequency_pass() const;
  bool oracle_pass() const;
  bool checks_pass() const;
  bool pass() const { return frequency_pass() && oracle_pass() && checks_pass(); }

  void add_detail(std::string key, double value) { details.emplace_back(std::move(key), value); }
  std::optional<double> detail(const std::string& key) const;
  const NamedCheck* check(const std::string& name) const;
};

/// Calls fn(i) for i in [0, trials) on `workers` threads; output is in index order.
template <typename Fn>
auto run_indexed(std::size_t trials, std::size_t workers, const Fn& fn) {
  using Result = std::invoke_result_t<const Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(trials);
  workers = std::max<std::size_t>(1, std::min(workers, trials));
  if (workers == 1) {
    for (std::size_t i = 0; i < trials; ++i) slots[i].emplace(fn(i));
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < trials; i += workers) slots[i].emplace(fn(i));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<Result> out;
  out.reserve(trials);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Seed trial_seed(Seed seed, std::size_t trial);

struct RunConfig {
  std::size_t trials = 1000;
  Seed seed = 0;
  std::size_t workers = 1;
};

/// Removed-edge count of sparsify on one fixed instance generated from
/// `spec`, against E[removed] = |E| p (2t - t^2) with t = Pr[Bin(D-1, p) >= delta].
/// The 0.1 p D n frequency claim (0.99) is asserted only when the trimming
/// chain holds at the chosen constants.
TrialReport trial_trim(const GenSpec& spec, double gamma, const SparsifyOverrides& overrides, const RunConfig& run);

/// Exact E[removed] for a regular instance with m edges and degree D.
double expected_removed_edges(std::size_t m, std::size_t degree, std::size_t delta, double p);

/// Corrupted planted instance: |E_unsat ∩ E_interm| against p |E_unsat|, and
/// the repair cost of the planted labeling on the sparsified instance.
TrialReport trial_completeness(const GenSpec& spec, double gamma, const SparsifyOverrides& overrides,
                               const RunConfig& run);

/// Paired random-vs-planted instances on one graph per trial: exact Max-Rep
/// value of the random instance and exact Min-Rep of both sparsified instances.
TrialReport trial_soundness_small(const GenSpec& spec, double gamma, const SparsifyOverrides& overrides,
                                  const RunConfig& run, std::uint64_t budget = kDefaultBudget);

/// Frequency of fewer than 0.2 p D n edges of E_unsat surviving subsampling,
/// against the exact Binomial(|E_unsat|, p) probability and the bound
/// exp(-0.36 * 0.5 p D n). Requires a regular instance and val(psi) < 1/2.
TrialReport trial_unsat_tail(const Instance& inst, const Multilabeling& psi, double p, const RunConfig& run);

struct CountingRecord {
  std::size_t n_total = 0;
  std::size_t sigma = 0;
  double gamma = 0.0;
  std::size_t t = 0;           ///< floor(0.06 N / sqrt(gamma))
  double ln_binomial = 0.0;    ///< ln C(N sigma, t)
  double ln_bound = 0.0;       ///< (0.5 N / sqrt(gamma)) ln(2 sigma)
  bool holds = false;
};

/// Requires sigma * gamma > 1.
CountingRecord counting_bound(std::size_t n_total, std::size_t sigma, double gamma);

/// The grid N in {10..200 step 10}, sigma in {2..64 step 2}, and ten gamma
/// values spread evenly over (1/sigma, 1).
std::vector<CountingRecord> counting_grid();
TrialReport counting_report(const std::vector<CountingRecord>& records);

/// Exact expected value of round_multilabeling(inst, psi, .); empty sets count as {0}.
Fraction rounding_expectation(const Instance& inst, const Multilabeling& psi);

/// Mean value of `trials` independent roundings against rounding_expectation.
TrialReport rounding_monte_carlo(const Instance& inst, const Multilabeling& psi, const RunConfig& run);

}  // namespace lcsparse
