#include "lcsparse/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lcsparse/reductions.hpp"

namespace lcsparse {

std::optional<GenKind> parse_gen_kind(std::string_view text) {
  if (text == "planted") return GenKind::planted;
  if (text == "corrupted") return GenKind::corrupted;
  if (text == "random") return GenKind::random;
  return std::nullopt;
}

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::planted: return "planted";
    case GenKind::corrupted: return "corrupted";
    case GenKind::random: return "random";
  }
  return "unknown";
}

void GenSpec::validate() const {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (deg > n) throw std::invalid_argument("deg must not exceed n");
  if (sigma == 0) throw std::invalid_argument("sigma must be at least 1");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  if (copies == 0) throw std::invalid_argument("copies must be at least 1");
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct MatchingSearch {
  const std::vector<std::vector<bool>>& used;
  const std::vector<std::vector<std::size_t>>& order;  // per-left-vertex right-vertex visit order
  std::vector<std::size_t>& match_left;
  std::vector<std::size_t>& match_right;
  std::vector<bool> visited;

  bool augment(std::size_t a) {
    for (std::size_t b : order[a]) {
      if (used[a][b] || visited[b]) continue;
      visited[b] = true;
      if (match_right[b] == kUnmatched || augment(match_right[b])) {
        match_left[a] = b;
        match_right[b] = a;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<BipartiteEdge> gen_regular_bipartite(std::size_t n, std::size_t deg, Seed seed) {
  if (deg > n) throw std::invalid_argument("gen_regular_bipartite: deg > n");
  Rng rng(seed, Stream::graph);
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<BipartiteEdge> edges;
  edges.reserve(n * deg);

  for (std::size_t round = 0; round < deg; ++round) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);

    std::vector<std::size_t> match_left(n, kUnmatched);
    std::vector<std::size_t> match_right(n, kUnmatched);
    for (std::size_t a = 0; a < n; ++a) {
      if (!used[a][perm[a]]) {
        match_left[a] = perm[a];
        match_right[perm[a]] = a;
      }
    }

    std::vector<std::vector<std::size_t>> order(n, std::vector<std::size_t>(n));
    for (auto& visit : order) {
      std::iota(visit.begin(), visit.end(), 0);
      shuffle(visit, rng);
    }

    MatchingSearch search{used, order, match_left, match_right, {}};
    for (std::size_t a = 0; a < n; ++a) {
      if (match_left[a] != kUnmatched) continue;
      search.visited.assign(n, false);
      if (!search.augment(a)) throw std::logic_error("gen_regular_bipartite: complement has no perfect matching");
    }
    for (std::size_t a = 0; a < n; ++a) {
      used[a][match_left[a]] = true;
      edges.emplace_back(a, match_left[a]);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

std::vector<Symbol> uniform_symbols(std::size_t count, std::size_t sigma, Rng& rng) {
  std::vector<Symbol> out(count);
  for (auto& s : out) s = static_cast<Symbol>(rng.below(sigma));
  return out;
}

RawInstance skeleton(const GenSpec& spec) {
  RawInstance raw{spec.n, spec.n, spec.sigma, {}};
  for (auto [a, b] : gen_regular_bipartite(spec.n, spec.deg, spec.seed)) raw.edges.push_back({a, b, {}});
  return raw;
}

}  // namespace

Generated gen_planted(const GenSpec& spec) {
  spec.validate();
  RawInstance raw = skeleton(spec);
  Rng label_rng(spec.seed, Stream::planted_labels);
  Labeling phi{uniform_symbols(spec.n, spec.sigma, label_rng), uniform_symbols(spec.n, spec.sigma, label_rng)};

  Rng table_rng(spec.seed, Stream::tables);
  for (auto& e : raw.edges) {
    e.table = uniform_symbols(spec.sigma, spec.sigma, table_rng);
    e.table[phi.labels_a[e.a]] = phi.labels_b[e.b];
  }
  return {Instance::from_raw(std::move(raw)), std::move(phi)};
}

Instance gen_random(const GenSpec& spec) {
  spec.validate();
  RawInstance raw = skeleton(spec);
  Rng table_rng(spec.seed, Stream::tables);
  for (auto& e : raw.edges) e.table = uniform_symbols(spec.sigma, spec.sigma, table_rng);
  return Instance::from_raw(std::move(raw));
}

std::size_t corruption_count(double eps, std::size_t m) {
  const double scaled = eps * static_cast<double>(m);
  const double k = std::ceil(scaled - 1e-9 * std::max(1.0, scaled));
  return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(m)));
}

Instance corrupt(const Instance& inst, const Labeling& phi_star, double eps, Seed seed) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("corrupt: eps must lie in [0, 1]");
  const auto report = eval_labeling(inst, phi_star);
  if (report.satisfied_count != report.total_edges) {
    throw std::invalid_argument("corrupt: phi_star does not satisfy every edge");
  }
  const std::size_t m = inst.edge_count();
  const std::size_t k = corruption_count(eps, m);
  if (k == 0) return inst;
  if (inst.sigma() < 2) throw std::invalid_argument("corrupt: sigma < 2, no edge can be violated");

  Rng rng(seed, Stream::corruption);
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(m - i)]);

  RawInstance raw = inst.to_raw();
  for (std::size_t i = 0; i < k; ++i) {
    auto& e = raw.edges[idx[i]];
    const Symbol correct = phi_star.labels_b[e.b];
    auto r = static_cast<Symbol>(rng.below(inst.sigma() - 1));
    if (r >= correct) ++r;
    e.table[phi_star.labels_a[e.a]] = r;
  }
  return Instance::from_raw(std::move(raw));
}

Generated generate(const GenSpec& spec) {
  spec.validate();
  if (spec.kind == GenKind::random) {
    Instance inst = gen_random(spec);
    if (spec.copies > 1) inst = amplify_copies(inst, spec.copies);
    return {std::move(inst), std::nullopt};
  }
  Generated out = gen_planted(spec);
  if (spec.copies > 1) {
    out.instance = amplify_copies(out.instance, spec.copies);
    out.planted = amplify_labeling(*out.planted, spec.copies);
  }
  if (spec.kind == GenKind::corrupted) out.instance = corrupt(out.instance, *out.planted, spec.eps, spec.seed);
  return out;
}

}  // namespace lcsparse
