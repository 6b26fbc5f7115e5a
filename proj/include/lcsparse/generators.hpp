#pragma once

// Instance generators on regular bipartite constraint graphs: planted
// (value 1), corrupted planted (value >= 1 - eps), and uniformly random tables.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lcsparse/core.hpp"
#include "lcsparse/rng.hpp"

namespace lcsparse {

enum class GenKind { planted, corrupted, random };

std::optional<GenKind> parse_gen_kind(std::string_view text);
std::string_view to_string(GenKind kind);

struct GenSpec {
  std::size_t n = 1;      ///< vertices per side
  std::size_t deg = 1;    ///< regular degree of the base graph
  std::size_t sigma = 2;  ///< alphabet size
  GenKind kind = GenKind::planted;
  double eps = 0.0;  ///< corruption fraction, corrupted kind only
  Seed seed = 0;
  /// Copy amplification factor applied after generation (1 = none). The
  /// generated instance then has n*copies vertices per side and degree deg*copies.
  std::size_t copies = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

using BipartiteEdge = std::pair<std::size_t, std::size_t>;

/// Simple deg-regular bipartite graph on n + n vertices, edges sorted.
///
/// Built as a union of deg perfect matchings. Each matching starts from a
/// uniform random permutation; pairs that collide with earlier matchings are
/// dropped and the left-over vertices are re-matched by augmenting paths over
/// the complement graph, which is (n - k)-regular after k matchings and so
/// always has a perfect matching. Throws std::invalid_argument if deg > n.
std::vector<BipartiteEdge> gen_regular_bipartite(std::size_t n, std::size_t deg, Seed seed);

struct Generated {
  Instance instance;
  /// Present for planted and corrupted instances (the labeling used to plant).
  std::optional<Labeling> planted;
};

Generated gen_planted(const GenSpec& spec);
Instance gen_random(const GenSpec& spec);

/// Redirects exactly ceil(eps * |E|) edges (chosen without replacement) so
/// that phi_star violates them. Requires sigma >= 2 and phi_star of value 1.
Instance corrupt(const Instance& inst, const Labeling& phi_star, double eps, Seed seed);

/// ceil(eps * m), robust to representation error in eps.
std::size_t corruption_count(double eps, std::size_t m);

/// Dispatch on spec.kind, including copy amplification.
Generated generate(const GenSpec& spec);

}  // namespace lcsparse
