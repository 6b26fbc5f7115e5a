#include "lcsparse/reductions.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lcsparse {

double SparsifyParams::trim_markov_bound() const {
  const double d = static_cast<double>(delta);
  return 1.0 / d + p * static_cast<double>(degree) / d;
}

SparsifyParams compute_params(std::size_t sigma, double gamma, const SparsifyOverrides& overrides) {
  if (sigma == 0) throw std::invalid_argument("compute_params: sigma must be at least 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("compute_params: gamma must lie in (0, 1)");

  SparsifyParams params;
  params.gamma = gamma;
  params.c_delta = overrides.c_delta.value_or(kDefaultDeltaConstant);
  params.c_p = overrides.c_p.value_or(kDefaultSamplingConstant);
  params.guard_ratio = overrides.guard_ratio.value_or(kDefaultGuardRatio);
  params.trim_slack = overrides.trim_slack.value_or(kDefaultTrimSlack);
  if (!(params.c_delta > 0.0) || !(params.c_p > 0.0) || !(params.guard_ratio >= 0.0)) {
    throw std::invalid_argument("compute_params: constants must be positive");
  }

  if (overrides.delta) {
    params.delta = *overrides.delta;
  } else {
    const long double raw = static_cast<long double>(params.c_delta) * 2.0L *
                            std::log(2.0L * static_cast<long double>(sigma)) /
                            std::sqrt(static_cast<long double>(gamma));
    params.delta = static_cast<std::size_t>(std::ceil(raw));
  }
  if (params.delta == 0) throw std::invalid_argument("compute_params: delta must be at least 1");
  return params;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t base = n;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      base = f;
      break;
    }
  }
  while (n % base == 0) n /= base;
  return n == 1;
}

GapParams instantiate_gap_params(std::uint64_t g, double big_c) {
  if (g < 2) throw std::invalid_argument("instantiate_gap_params: g must be at least 2");
  if (!(big_c > 0.0)) throw std::invalid_argument("instantiate_gap_params: C must be positive");

  const double gd = static_cast<double>(g);
  const double target = 1e5 * big_c * gd * gd;
  const auto ratio = [](std::uint64_t x) { return static_cast<double>(x) / std::log(static_cast<double>(x)); };

  // x / ln x dips below its value at 2 on [2, e] and increases from 3 on.
  std::uint64_t start = 2;
  if (!(ratio(2) > target)) {
    std::uint64_t lo = 3, hi = 4;
    while (!(ratio(hi) > target)) {
      lo = hi;
      hi *= 2;
    }
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (ratio(mid) > target) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    start = lo;
  }
  std::uint64_t q = start;
  while (!is_prime_power(q)) ++q;

  GapParams out;
  out.g = g;
  out.big_c = big_c;
  out.q = q;
  out.sigma = q * q;
  const double lq = std::log(static_cast<double>(q));
  out.gamma = 2.0 * big_c * lq / static_cast<double>(q);
  out.delta = compute_params(out.sigma, out.gamma).delta;
  out.eps = 1.0 / static_cast<double>(out.delta);
  out.pcp_delta = std::min(out.eps, big_c * lq / static_cast<double>(q));
  out.within_growth_band = static_cast<double>(q) <= 1e7 * big_c * gd * gd * std::log(gd * gd + 2.0);
  return out;
}

Instance amplify_copies(const Instance& inst, std::size_t t) {
  if (t == 0) throw std::invalid_argument("amplify_copies: t must be at least 1");
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  const std::size_t m = inst.edge_count();
  if (t > kMax / t || (m > 0 && t * t > kMax / m) || inst.n_a() > kMax / t || inst.n_b() > kMax / t) {
    throw std::overflow_error("amplify_copies: instance size overflows");
  }
  if (t == 1) return inst;

  RawInstance raw{inst.n_a() * t, inst.n_b() * t, inst.sigma(), {}};
  raw.edges.reserve(m * t * t);
  const auto by_a = inst.incidence(Side::a);
  for (std::size_t a = 0; a < inst.n_a(); ++a) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t e : by_a[a]) {
        const auto view = inst.edge(e);
        for (std::size_t j = 0; j < t; ++j) {
          raw.edges.push_back({a * t + i, view.b * t + j, {view.table.begin(), view.table.end()}});
        }
      }
    }
  }
  return Instance::from_raw(std::move(raw));
}

Labeling amplify_labeling(const Labeling& phi, std::size_t t) {
  if (t == 0) throw std::invalid_argument("amplify_labeling: t must be at least 1");
  Labeling out;
  out.labels_a.reserve(phi.labels_a.size() * t);
  out.labels_b.reserve(phi.labels_b.size() * t);
  for (Symbol s : phi.labels_a) out.labels_a.insert(out.labels_a.end(), t, s);
  for (Symbol s : phi.labels_b) out.labels_b.insert(out.labels_b.end(), t, s);
  return out;
}

std::vector<std::size_t> subsample_indices(std::size_t m, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("subsample: p must lie in [0, 1]");
  std::vector<std::size_t> kept;
  kept.reserve(static_cast<std::size_t>(static_cast<double>(m) * p) + 16);
  for (std::size_t i = 0; i < m; ++i) {
    if (to_unit(mix(seed, Stream::subsample, i)) < p) kept.push_back(i);
  }
  return kept;
}

Instance subsample(const Instance& inst, double p, Seed seed) {
  return inst.subgraph(subsample_indices(inst.edge_count(), p, seed));
}

TrimResult trim(const Instance& inst, std::size_t delta) {
  const auto da = inst.degrees(Side::a);
  const auto db = inst.degrees(Side::b);
  TrimResult result{inst, 0, 0, 0, {}};
  for (auto d : da) result.trimmed_a += d > delta ? 1 : 0;
  for (auto d : db) result.trimmed_b += d > delta ? 1 : 0;

  result.kept.reserve(inst.edge_count());
  for (std::size_t i = 0; i < inst.edge_count(); ++i) {
    const auto e = inst.edge(i);
    if (da[e.a] <= delta && db[e.b] <= delta) result.kept.push_back(i);
  }
  result.removed_edges = inst.edge_count() - result.kept.size();
  if (result.removed_edges > 0) result.instance = inst.subgraph(result.kept);
  return result;
}

SparsifyParams sparsify_params(const Instance& inst, double gamma, const SparsifyOverrides& overrides) {
  const auto profile = degree_profile(inst);
  if (!profile.is_biregular || profile.max_deg_a != profile.max_deg_b) {
    throw SparsifyError(SparsifyError::Kind::not_regular, "sparsify: input instance is not regular");
  }
  const std::size_t degree = profile.max_deg_a;
  if (degree == 0) throw SparsifyError(SparsifyError::Kind::no_edges, "sparsify: input instance has no edges");

  SparsifyParams params = compute_params(inst.sigma(), gamma, overrides);
  params.degree = degree;
  const double required = params.guard_ratio * static_cast<double>(params.delta);
  if (static_cast<double>(degree) < required) {
    const auto need = static_cast<std::size_t>(std::ceil(required));
    throw SparsifyError(SparsifyError::Kind::degree_guard,
                        "sparsify: degree " + std::to_string(degree) + " below guard; need D >= " + std::to_string(need),
                        need);
  }
  params.p = params.c_p * static_cast<double>(params.delta) / static_cast<double>(degree);
  if (!(params.p > 0.0 && params.p <= 1.0)) {
    throw SparsifyError(SparsifyError::Kind::probability_range,
                        "sparsify: sampling probability " + std::to_string(params.p) + " outside (0, 1]");
  }
  return params;
}

SparsifyOutput sparsify(const Instance& inst, double gamma, Seed seed, const SparsifyOverrides& overrides) {
  const SparsifyParams params = sparsify_params(inst, gamma, overrides);
  SparsifyOutput out{inst, inst, params, 0, 0, 0, {}, {}};
  out.intermediate_edges = subsample_indices(inst.edge_count(), params.p, seed);
  out.intermediate = inst.subgraph(out.intermediate_edges);
  auto trimmed = trim(out.intermediate, params.delta);
  out.removed_edges = trimmed.removed_edges;
  out.trimmed_vertices_a = trimmed.trimmed_a;
  out.trimmed_vertices_b = trimmed.trimmed_b;
  out.trimmed_edges.reserve(trimmed.kept.size());
  for (std::size_t k : trimmed.kept) out.trimmed_edges.push_back(out.intermediate_edges[k]);
  out.trimmed = std::move(trimmed.instance);
  return out;
}

}  // namespace lcsparse
