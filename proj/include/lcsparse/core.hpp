#pragma once

// Label Cover instances, labelings, multilabelings and their evaluators.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcsparse/fraction.hpp"

namespace lcsparse {

using Symbol = std::uint32_t;

enum class Side : std::uint8_t { a, b };

char side_char(Side side) noexcept;

/// Unvalidated edge as read from a file or produced by a generator.
struct RawEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Symbol> table;
};

struct RawInstance {
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t sigma = 0;
  std::vector<RawEdge> edges;
};

struct ValidationIssue {
  enum class Kind { empty_side, empty_alphabet, a_out_of_range, b_out_of_range, table_length, symbol_out_of_range, duplicate_edge };
  Kind kind;
  /// Position of the offending edge in the raw edge list, when applicable.
  std::optional<std::size_t> edge;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

struct EdgeView {
  std::size_t a;
  std::size_t b;
  std::span<const Symbol> table;

  Symbol project(Symbol s) const { return table[s]; }
};

/// Immutable bipartite Label Cover instance in canonical form: edges sorted
/// by (a, b), no duplicates, dense projection tables.
class Instance {
 public:
  /// Validates and canonicalizes; throws ValidationError listing every issue.
  static Instance from_raw(RawInstance raw);

  std::size_t n_a() const noexcept { return n_a_; }
  std::size_t n_b() const noexcept { return n_b_; }
  std::size_t sigma() const noexcept { return sigma_; }
  /// N = |A| + |B|.
  std::size_t n_total() const noexcept { return n_a_ + n_b_; }
  std::size_t edge_count() const noexcept { return ends_.size(); }

  EdgeView edge(std::size_t i) const {
    return {ends_[i].a, ends_[i].b, std::span<const Symbol>(tables_).subspan(i * sigma_, sigma_)};
  }
  Symbol project(std::size_t i, Symbol s) const { return tables_[i * sigma_ + s]; }

  std::vector<std::size_t> degrees(Side side) const;
  /// Indices of the edges incident to each vertex of `side`, in canonical order.
  std::vector<std::vector<std::size_t>> incidence(Side side) const;
  /// Vertices with at least one incident edge.
  std::size_t non_isolated_count() const;

  /// Sub-instance on the same vertex sets keeping the given edge indices,
  /// which must be strictly increasing.
  Instance subgraph(std::span<const std::size_t> kept) const;

  RawInstance to_raw() const;

  bool operator==(const Instance&) const = default;

 private:
  struct Ends {
    std::size_t a;
    std::size_t b;
    bool operator==(const Ends&) const = default;
  };

  Instance() = default;

  std::size_t n_a_ = 0;
  std::size_t n_b_ = 0;
  std::size_t sigma_ = 0;
  std::vector<Ends> ends_;
  std::vector<Symbol> tables_;
};

struct ValidationResult {
  std::optional<Instance> instance;
  std::vector<ValidationIssue> issues;
};

/// Non-throwing counterpart of Instance::from_raw.
ValidationResult validate_instance(RawInstance raw);

struct Labeling {
  std::vector<Symbol> labels_a;
  std::vector<Symbol> labels_b;

  static Labeling constant(const Instance& inst, Symbol s);

  Symbol& at(Side side, std::size_t v) { return side == Side::a ? labels_a.at(v) : labels_b.at(v); }
  Symbol at(Side side, std::size_t v) const { return side == Side::a ? labels_a.at(v) : labels_b.at(v); }

  bool operator==(const Labeling&) const = default;
};

/// One symbol set per vertex. Sets are kept sorted and duplicate-free.
class Multilabeling {
 public:
  Multilabeling() = default;
  Multilabeling(std::size_t n_a, std::size_t n_b) : sets_a_(n_a), sets_b_(n_b) {}
  static Multilabeling empty_for(const Instance& inst) { return Multilabeling(inst.n_a(), inst.n_b()); }
  static Multilabeling singleton_lift(const Labeling& phi);

  std::size_t n_a() const noexcept { return sets_a_.size(); }
  std::size_t n_b() const noexcept { return sets_b_.size(); }

  const std::vector<Symbol>& set(Side side, std::size_t v) const {
    return side == Side::a ? sets_a_.at(v) : sets_b_.at(v);
  }
  /// Returns true when the symbol was not already present.
  bool add(Side side, std::size_t v, Symbol s);
  void assign(Side side, std::size_t v, std::vector<Symbol> symbols);
  bool contains(Side side, std::size_t v, Symbol s) const;

  /// Total number of symbols over all vertices.
  std::size_t cost() const noexcept;

  bool operator==(const Multilabeling&) const = default;

 private:
  std::vector<std::vector<Symbol>> sets_a_;
  std::vector<std::vector<Symbol>> sets_b_;
};

struct EvalReport {
  std::size_t satisfied_count = 0;
  std::size_t total_edges = 0;
  /// Present for multilabeling evaluations only.
  std::optional<std::size_t> cost;

  /// satisfied/total; an instance without edges has value 1.
  Fraction value() const;
};

/// Throws std::invalid_argument on dimension or alphabet mismatch.
void check_conforms(const Instance& inst, const Labeling& phi);
void check_conforms(const Instance& inst, const Multilabeling& psi);

bool satisfies_edge(const Instance& inst, std::size_t edge, const Labeling& phi);
bool satisfies_edge(const Instance& inst, std::size_t edge, const Multilabeling& psi);

EvalReport eval_labeling(const Instance& inst, const Labeling& phi);
EvalReport eval_multilabeling(const Instance& inst, const Multilabeling& psi);

struct DegreeProfile {
  std::size_t max_deg_a = 0;
  std::size_t max_deg_b = 0;
  std::size_t min_deg = 0;
  bool is_biregular = true;
  /// degree -> number of vertices (both sides) with that degree
  std::map<std::size_t, std::size_t> histogram;

  std::size_t max_degree() const noexcept { return max_deg_a > max_deg_b ? max_deg_a : max_deg_b; }
};

DegreeProfile degree_profile(const Instance& inst);

}  // namespace lcsparse
