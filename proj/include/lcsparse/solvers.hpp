#pragma once

// Exact Max-Rep / Min-Rep oracles for tiny instances, the trivial
// Min-Rep approximation, random labelings, multilabeling rounding and the
// completeness repair.

#include <cstddef>
#include <cstdint>

#include "lcsparse/core.hpp"
#include "lcsparse/rng.hpp"

namespace lcsparse {

template <typename Objective, typename Witness>
struct SolveResult {
  Objective objective{};
  Witness witness;
  std::uint64_t nodes_explored = 0;
  bool proved_optimal = false;
};

using MaxRepResult = SolveResult<Fraction, Labeling>;
using MinRepResult = SolveResult<std::size_t, Multilabeling>;

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

/// Enumerates A-side assignments; each B vertex then takes the plurality of
/// the labels its edges project onto, which is optimal because constraints
/// are projections from A to B. nodes_explored counts A-side assignments.
MaxRepResult maxrep_exact(const Instance& inst, std::uint64_t budget = kDefaultBudget);

/// Branch and bound over per-vertex label sets, vertices in descending
/// degree order. The bound adds, for every unassigned vertex, the smallest
/// set compatible with its assigned neighbours (at least 1 when the vertex
/// has edges); isolated vertices stay empty. Seeded with trivial_minrep, so
/// the witness is always feasible. Requires sigma <= 16.
MinRepResult minrep_exact(const Instance& inst, std::uint64_t budget = kDefaultBudget);

/// For each edge, adds 0 to the left endpoint and its projection to the right.
Multilabeling trivial_minrep(const Instance& inst);

Labeling random_labeling(const Instance& inst, Seed seed);

/// Independent uniform choice from each set; empty sets map to symbol 0.
Labeling round_multilabeling(const Instance& inst, const Multilabeling& psi, Seed seed);

/// Singleton lift of phi on non-isolated vertices, plus 0 / pi(0) on both
/// ends of every edge phi leaves unsatisfied. The result satisfies every edge.
Multilabeling repair_multilabeling(const Instance& inst, const Labeling& phi);

}  // namespace lcsparse
