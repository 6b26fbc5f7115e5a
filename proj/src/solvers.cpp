#include "lcsparse/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace lcsparse {

MaxRepResult maxrep_exact(const Instance& inst, std::uint64_t budget) {
  const std::size_t sigma = inst.sigma();
  const std::size_t m = inst.edge_count();
  const auto by_b = inst.incidence(Side::b);

  MaxRepResult result;
  result.witness = Labeling::constant(inst, 0);
  std::size_t best = 0;
  bool have_best = false;

  Labeling current = Labeling::constant(inst, 0);
  std::vector<std::size_t> votes(sigma);
  bool exhausted = true;

  for (;;) {
    if (result.nodes_explored >= budget) {
      exhausted = false;
      break;
    }
    ++result.nodes_explored;

    std::size_t satisfied = 0;
    for (std::size_t b = 0; b < inst.n_b(); ++b) {
      std::fill(votes.begin(), votes.end(), 0);
      for (std::size_t e : by_b[b]) ++votes[inst.project(e, current.labels_a[inst.edge(e).a])];
      const auto top = std::max_element(votes.begin(), votes.end());
      current.labels_b[b] = static_cast<Symbol>(top - votes.begin());
      satisfied += *top;
    }
    if (!have_best || satisfied > best) {
      best = satisfied;
      have_best = true;
      result.witness = current;
      if (best == m) break;
    }

    // Next A-side assignment in odometer order.
    std::size_t v = 0;
    while (v < inst.n_a() && current.labels_a[v] + 1 == sigma) current.labels_a[v++] = 0;
    if (v == inst.n_a()) break;
    ++current.labels_a[v];
  }

  result.objective = m == 0 ? Fraction(1, 1) : Fraction(best, m);
  result.proved_optimal = exhausted || best == m;
  return result;
}

namespace {

using Mask = std::uint32_t;

class MinRepSearch {
 public:
  MinRepSearch(const Instance& inst, std::uint64_t budget) : inst_(inst), budget_(budget) {
    const std::size_t sigma = inst.sigma();
    const Mask full = sigma == 32 ? ~Mask{0} : (Mask{1} << sigma) - 1;
    for (Mask s = 1; s <= full && s != 0; ++s) subsets_.push_back(s);
    std::stable_sort(subsets_.begin(), subsets_.end(),
                     [](Mask x, Mask y) { return std::popcount(x) < std::popcount(y); });

    n_total_ = inst.n_total();
    neighbours_.resize(n_total_);
    for (std::size_t e = 0; e < inst.edge_count(); ++e) {
      const auto view = inst.edge(e);
      neighbours_[view.a].push_back({inst.n_a() + view.b, e});
      neighbours_[inst.n_a() + view.b].push_back({view.a, e});
    }
    for (std::size_t v = 0; v < n_total_; ++v) {
      if (!neighbours_[v].empty()) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return neighbours_[x].size() > neighbours_[y].size(); });
    assigned_.assign(n_total_, 0);
  }

  void seed_incumbent(const Multilabeling& psi) {
    best_cost_ = psi.cost();
    best_.assign(n_total_, 0);
    for (std::size_t v = 0; v < n_total_; ++v) {
      for (Symbol s : set_of(psi, v)) best_[v] |= Mask{1} << s;
    }
  }

  bool run() {
    dfs(0, 0);
    return !aborted_;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t best_cost() const { return best_cost_; }

  Multilabeling witness() const {
    Multilabeling psi = Multilabeling::empty_for(inst_);
    for (std::size_t v = 0; v < n_total_; ++v) {
      const Side side = v < inst_.n_a() ? Side::a : Side::b;
      const std::size_t idx = v < inst_.n_a() ? v : v - inst_.n_a();
      for (Symbol s = 0; s < inst_.sigma(); ++s) {
        if (best_[v] >> s & 1U) psi.add(side, idx, s);
      }
    }
    return psi;
  }

 private:
  struct Neighbour {
    std::size_t vertex;
    std::size_t edge;
  };

  const std::vector<Symbol>& set_of(const Multilabeling& psi, std::size_t v) const {
    return v < inst_.n_a() ? psi.set(Side::a, v) : psi.set(Side::b, v - inst_.n_a());
  }

  Mask image(std::size_t edge, Mask from) const {
    Mask out = 0;
    for (Symbol s = 0; s < inst_.sigma(); ++s) {
      if (from >> s & 1U) out |= Mask{1} << inst_.project(edge, s);
    }
    return out;
  }

  Mask preimage(std::size_t edge, Mask to) const {
    Mask out = 0;
    for (Symbol s = 0; s < inst_.sigma(); ++s) {
      if (to >> inst_.project(edge, s) & 1U) out |= Mask{1} << s;
    }
    return out;
  }

  /// Masks that v's label set must intersect, one per assigned neighbour.
  /// Returns false if some requirement is empty (no set can satisfy it).
  bool requirements(std::size_t v, std::vector<Mask>& out) const {
    out.clear();
    const bool left = v < inst_.n_a();
    for (const auto& nb : neighbours_[v]) {
      const Mask other = assigned_[nb.vertex];
      if (other == 0) continue;
      const Mask need = left ? preimage(nb.edge, other) : image(nb.edge, other);
      if (need == 0) return false;
      out.push_back(need);
    }
    return true;
  }

  static bool hits_all(Mask s, const std::vector<Mask>& reqs) {
    return std::all_of(reqs.begin(), reqs.end(), [s](Mask r) { return (s & r) != 0; });
  }

  /// Smallest cardinality of a set hitting every requirement.
  std::size_t min_hitting(const std::vector<Mask>& reqs) const {
    if (reqs.empty()) return 1;
    for (Mask s : subsets_) {
      if (hits_all(s, reqs)) return static_cast<std::size_t>(std::popcount(s));
    }
    return inst_.sigma() + 1;
  }

  void dfs(std::size_t pos, std::size_t cost) {
    if (aborted_) return;
    if (nodes_ >= budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;

    if (pos == order_.size()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = assigned_;
      }
      return;
    }

    std::size_t rest = 0;
    for (std::size_t k = pos + 1; k < order_.size(); ++k) {
      if (!requirements(order_[k], scratch_)) return;
      rest += min_hitting(scratch_);
    }

    const std::size_t v = order_[pos];
    std::vector<Mask> reqs;
    if (!requirements(v, reqs)) return;
    for (Mask s : subsets_) {
      const auto size = static_cast<std::size_t>(std::popcount(s));
      if (cost + size + rest >= best_cost_) break;
      if (!hits_all(s, reqs)) continue;
      assigned_[v] = s;
      dfs(pos + 1, cost + size);
      assigned_[v] = 0;
      if (aborted_) return;
    }
  }

  const Instance& inst_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t n_total_ = 0;
  std::vector<Mask> subsets_;
  std::vector<std::vector<Neighbour>> neighbours_;
  std::vector<std::size_t> order_;
  std::vector<Mask> assigned_;
  std::vector<Mask> best_;
  std::size_t best_cost_ = 0;
  std::vector<Mask> scratch_;
};

}  // namespace

MinRepResult minrep_exact(const Instance& inst, std::uint64_t budget) {
  if (inst.sigma() > 16) throw std::invalid_argument("minrep_exact: sigma must be at most 16");
  MinRepSearch search(inst, budget);
  search.seed_incumbent(trivial_minrep(inst));
  MinRepResult result;
  result.proved_optimal = search.run();
  result.objective = search.best_cost();
  result.witness = search.witness();
  result.nodes_explored = search.nodes();
  return result;
}

Multilabeling trivial_minrep(const Instance& inst) {
  Multilabeling psi = Multilabeling::empty_for(inst);
  for (std::size_t i = 0; i < inst.edge_count(); ++i) {
    const auto e = inst.edge(i);
    psi.add(Side::a, e.a, 0);
    psi.add(Side::b, e.b, e.project(0));
  }
  return psi;
}

Labeling random_labeling(const Instance& inst, Seed seed) {
  Rng rng(seed, Stream::random_labeling);
  Labeling phi = Labeling::constant(inst, 0);
  for (auto& s : phi.labels_a) s = static_cast<Symbol>(rng.below(inst.sigma()));
  for (auto& s : phi.labels_b) s = static_cast<Symbol>(rng.below(inst.sigma()));
  return phi;
}

Labeling round_multilabeling(const Instance& inst, const Multilabeling& psi, Seed seed) {
  check_conforms(inst, psi);
  Rng rng(seed, Stream::rounding);
  Labeling phi = Labeling::constant(inst, 0);
  const auto pick = [&](const std::vector<Symbol>& set) -> Symbol {
    return set.empty() ? Symbol{0} : set[rng.below(set.size())];
  };
  for (std::size_t v = 0; v < inst.n_a(); ++v) phi.labels_a[v] = pick(psi.set(Side::a, v));
  for (std::size_t v = 0; v < inst.n_b(); ++v) phi.labels_b[v] = pick(psi.set(Side::b, v));
  return phi;
}

Multilabeling repair_multilabeling(const Instance& inst, const Labeling& phi) {
  check_conforms(inst, phi);
  Multilabeling psi = Multilabeling::empty_for(inst);
  const auto da = inst.degrees(Side::a);
  const auto db = inst.degrees(Side::b);
  for (std::size_t v = 0; v < inst.n_a(); ++v) {
    if (da[v] > 0) psi.add(Side::a, v, phi.labels_a[v]);
  }
  for (std::size_t v = 0; v < inst.n_b(); ++v) {
    if (db[v] > 0) psi.add(Side::b, v, phi.labels_b[v]);
  }
  for (std::size_t i = 0; i < inst.edge_count(); ++i) {
    if (satisfies_edge(inst, i, phi)) continue;
    const auto e = inst.edge(i);
    psi.add(Side::a, e.a, 0);
    psi.add(Side::b, e.b, e.project(0));
  }
  return psi;
}

}  // namespace lcsparse
