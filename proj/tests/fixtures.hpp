#pragma once

// Shared fixtures and brute-force oracles. The oracles here are written
// independently of the library solvers and only use the evaluators.

#include <cstdint>
#include <random>
#include <vector>

#include "lcsparse/core.hpp"

namespace fixtures {

using lcsparse::Fraction;
using lcsparse::Instance;
using lcsparse::Labeling;
using lcsparse::Multilabeling;
using lcsparse::RawInstance;
using lcsparse::Side;
using lcsparse::Symbol;

// Sigma {0,1}: (a0,b0) identity, (a0,b1) const-0, (a1,b0) swap, (a1,b1) identity.
inline RawInstance tiny1_raw() {
  return {2, 2, 2, {{0, 0, {0, 1}}, {0, 1, {0, 0}}, {1, 0, {1, 0}}, {1, 1, {0, 1}}}};
}

// Sigma {0,1}: (a0,b0) const-0, (a1,b0) const-1, (a0,b1) identity, (a1,b1) identity.
inline RawInstance tiny2_raw() {
  return {2, 2, 2, {{0, 0, {0, 0}}, {1, 0, {1, 1}}, {0, 1, {0, 1}}, {1, 1, {0, 1}}}};
}

inline Instance tiny1() { return Instance::from_raw(tiny1_raw()); }
inline Instance tiny2() { return Instance::from_raw(tiny2_raw()); }

inline Labeling make_labeling(std::vector<Symbol> a, std::vector<Symbol> b) { return {std::move(a), std::move(b)}; }

/// Random simple bipartite instance: each pair is an edge with probability `density`.
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_side, std::size_t max_sigma,
                                double density = 0.5) {
  std::uniform_int_distribution<std::size_t> side(1, max_side), alpha(1, max_sigma);
  std::bernoulli_distribution keep(density);
  RawInstance raw{side(rng), side(rng), alpha(rng), {}};
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(raw.sigma - 1));
  for (std::size_t a = 0; a < raw.n_a; ++a) {
    for (std::size_t b = 0; b < raw.n_b; ++b) {
      if (!keep(rng)) continue;
      lcsparse::RawEdge e{a, b, {}};
      for (std::size_t s = 0; s < raw.sigma; ++s) e.table.push_back(sym(rng));
      raw.edges.push_back(std::move(e));
    }
  }
  return Instance::from_raw(std::move(raw));
}

inline Labeling random_labeling(std::mt19937_64& rng, const Instance& inst) {
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(inst.sigma() - 1));
  Labeling phi{std::vector<Symbol>(inst.n_a()), std::vector<Symbol>(inst.n_b())};
  for (auto& s : phi.labels_a) s = sym(rng);
  for (auto& s : phi.labels_b) s = sym(rng);
  return phi;
}

/// Each symbol joins each set independently with probability `fill`.
inline Multilabeling random_multilabeling(std::mt19937_64& rng, const Instance& inst, double fill) {
  std::bernoulli_distribution in(fill);
  Multilabeling psi = Multilabeling::empty_for(inst);
  for (Side side : {Side::a, Side::b}) {
    const std::size_t n = side == Side::a ? inst.n_a() : inst.n_b();
    for (std::size_t v = 0; v < n; ++v) {
      for (Symbol s = 0; s < inst.sigma(); ++s) {
        if (in(rng)) psi.add(side, v, s);
      }
    }
  }
  return psi;
}

/// Max-Rep by enumerating every labeling of both sides.
inline Fraction brute_maxrep(const Instance& inst) {
  const std::size_t n = inst.n_total();
  std::vector<Symbol> digits(n, 0);
  Fraction best;
  while (true) {
    Labeling phi{std::vector<Symbol>(digits.begin(), digits.begin() + static_cast<long>(inst.n_a())),
                 std::vector<Symbol>(digits.begin() + static_cast<long>(inst.n_a()), digits.end())};
    const Fraction v = lcsparse::eval_labeling(inst, phi).value();
    if (v > best) best = v;
    std::size_t k = 0;
    while (k < n && ++digits[k] == inst.sigma()) digits[k++] = 0;
    if (k == n) break;
  }
  return best;
}

/// Min-Rep by enumerating every assignment of label subsets (bitmasks).
inline std::size_t brute_minrep(const Instance& inst) {
  const std::size_t n = inst.n_total();
  const std::uint32_t full = 1U << inst.sigma();
  std::vector<std::uint32_t> masks(n, 0);
  std::size_t best = SIZE_MAX;
  while (true) {
    std::size_t cost = 0;
    for (auto m : masks) cost += static_cast<std::size_t>(__builtin_popcount(m));
    if (cost < best) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < inst.edge_count(); ++i) {
        const auto e = inst.edge(i);
        const std::uint32_t ma = masks[e.a], mb = masks[inst.n_a() + e.b];
        bool sat = false;
        for (Symbol s = 0; s < inst.sigma() && !sat; ++s) sat = ((ma >> s) & 1U) && ((mb >> e.project(s)) & 1U);
        ok = sat;
      }
      if (ok) best = cost;
    }
    std::size_t k = 0;
    while (k < n && ++masks[k] == full) masks[k++] = 0;
    if (k == n) break;
  }
  return best;
}

/// Average value over every way of rounding psi (empty sets become {0}).
inline Fraction enumerate_roundings(const Instance& inst, const Multilabeling& psi) {
  std::vector<std::vector<Symbol>> sets;
  for (Side side : {Side::a, Side::b}) {
    const std::size_t n = side == Side::a ? inst.n_a() : inst.n_b();
    for (std::size_t v = 0; v < n; ++v) {
      const auto& s = psi.set(side, v);
      sets.push_back(s.empty() ? std::vector<Symbol>{0} : s);
    }
  }
  std::vector<std::size_t> pick(sets.size(), 0);
  Fraction total;
  std::uint64_t count = 0;
  while (true) {
    Labeling phi{std::vector<Symbol>(inst.n_a()), std::vector<Symbol>(inst.n_b())};
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const Symbol s = sets[i][pick[i]];
      if (i < inst.n_a()) {
        phi.labels_a[i] = s;
      } else {
        phi.labels_b[i - inst.n_a()] = s;
      }
    }
    const auto r = eval_labeling(inst, phi);
    total += Fraction(r.satisfied_count, 1);
    ++count;
    std::size_t k = 0;
    while (k < sets.size() && ++pick[k] == sets[k].size()) pick[k++] = 0;
    if (k == sets.size()) break;
  }
  if (inst.edge_count() == 0) return Fraction(1, 1);
  return total * Fraction(1, count * inst.edge_count());
}

}  // namespace fixtures
