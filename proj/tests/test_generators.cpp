#include <doctest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "lcsparse/generators.hpp"
#include "lcsparse/io.hpp"
#include "lcsparse/solvers.hpp"

using namespace lcsparse;
using namespace fixtures;

namespace {

void check_regular(const std::vector<BipartiteEdge>& edges, std::size_t n, std::size_t deg) {
  CHECK(edges.size() == n * deg);
  std::set<BipartiteEdge> unique(edges.begin(), edges.end());
  CHECK(unique.size() == edges.size());
  std::vector<std::size_t> da(n, 0), db(n, 0);
  for (const auto& [a, b] : edges) {
    REQUIRE(a < n);
    REQUIRE(b < n);
    ++da[a];
    ++db[b];
  }
  for (std::size_t v = 0; v < n; ++v) {
    CHECK(da[v] == deg);
    CHECK(db[v] == deg);
  }
}

}  // namespace

TEST_CASE("regular bipartite graphs") {
  check_regular(gen_regular_bipartite(4, 2, 99), 4, 2);
  CHECK(gen_regular_bipartite(1, 1, 5) == std::vector<BipartiteEdge>{{0, 0}});
  const auto k66 = gen_regular_bipartite(6, 6, 3);
  check_regular(k66, 6, 6);
  CHECK(k66.size() == 36);
  CHECK(gen_regular_bipartite(5, 0, 1).empty());
  CHECK_THROWS_AS(gen_regular_bipartite(3, 4, 1), std::invalid_argument);
}

TEST_CASE("property: every (n, deg) yields a simple regular graph") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::size_t deg = 0; deg <= n; ++deg) {
      for (Seed seed = 0; seed < 3; ++seed) check_regular(gen_regular_bipartite(n, deg, seed * 7919 + n), n, deg);
    }
  }
  check_regular(gen_regular_bipartite(64, 50, 17), 64, 50);
}

TEST_CASE("generators are deterministic in the seed") {
  const GenSpec spec{6, 3, 4, GenKind::corrupted, 0.2, 42, 1};
  const Generated x = generate(spec);
  const Generated y = generate(spec);
  CHECK(serialize_instance(x.instance) == serialize_instance(y.instance));
  CHECK(x.planted == y.planted);
  GenSpec other = spec;
  other.seed = 43;
  CHECK(serialize_instance(generate(other).instance) != serialize_instance(x.instance));
}

TEST_CASE("planted instances are satisfied by their labeling") {
  for (Seed seed = 0; seed < 50; ++seed) {
    const GenSpec spec{5, 3, 1 + seed % 5, GenKind::planted, 0.0, seed, 1};
    const Generated gen = gen_planted(spec);
    REQUIRE(gen.planted);
    CHECK(eval_labeling(gen.instance, *gen.planted).value() == Fraction(1, 1));
    CHECK(degree_profile(gen.instance).is_biregular);
  }
}

TEST_CASE("planted n=4 deg=2 sigma=3 seed=7 has Min-Rep cost N") {
  const Instance inst = gen_planted({4, 2, 3, GenKind::planted, 0.0, 7, 1}).instance;
  CHECK(brute_minrep(inst) == 8);
}

TEST_CASE("unary alphabet is always satisfiable") {
  const Instance planted = gen_planted({4, 2, 1, GenKind::planted, 0.0, 1, 1}).instance;
  const Instance random = gen_random({4, 2, 1, GenKind::random, 0.0, 1, 1});
  CHECK(eval_labeling(planted, Labeling::constant(planted, 0)).value() == Fraction(1, 1));
  CHECK(eval_labeling(random, Labeling::constant(random, 0)).value() == Fraction(1, 1));
}

TEST_CASE("corruption") {
  const Generated base = gen_planted({4, 2, 3, GenKind::planted, 0.0, 5, 1});
  const Instance& inst = base.instance;
  const Labeling& phi = *base.planted;
  REQUIRE(inst.edge_count() == 8);

  CHECK(serialize_instance(corrupt(inst, phi, 0.0, 1)) == serialize_instance(inst));
  CHECK(eval_labeling(corrupt(inst, phi, 0.25, 1), phi).satisfied_count == 6);
  CHECK(eval_labeling(corrupt(inst, phi, 1.0, 1), phi).value() == Fraction(0, 1));
  CHECK(corruption_count(0.1, 30) == 3);
  CHECK(corruption_count(0.3, 10) == 3);
  CHECK(corruption_count(0.01, 10) == 1);

  const Instance unary = gen_planted({4, 2, 1, GenKind::planted, 0.0, 5, 1}).instance;
  CHECK_THROWS_AS(corrupt(unary, Labeling::constant(unary, 0), 0.5, 1), std::invalid_argument);
  const Instance broken = corrupt(inst, phi, 0.5, 2);
  CHECK_THROWS_AS(corrupt(broken, phi, 0.5, 3), std::invalid_argument);
}

TEST_CASE("property: corrupted planted value is exactly 1 - ceil(eps |E|)/|E|") {
  for (Seed seed = 0; seed < 60; ++seed) {
    const double eps = static_cast<double>(seed % 11) / 10.0;
    const GenSpec spec{6, 1 + seed % 4, 2 + seed % 3, GenKind::corrupted, eps, seed, 1 + seed % 2};
    const Generated gen = generate(spec);
    const std::size_t m = gen.instance.edge_count();
    const std::size_t k = static_cast<std::size_t>(std::ceil(eps * static_cast<double>(m) - 1e-9));
    CHECK(eval_labeling(gen.instance, *gen.planted).satisfied_count == m - k);
  }
}

TEST_CASE("copy amplification in generate") {
  const Generated gen = generate({4, 2, 3, GenKind::planted, 0.0, 8, 3});
  CHECK(gen.instance.n_a() == 12);
  CHECK(gen.instance.n_b() == 12);
  const auto profile = degree_profile(gen.instance);
  CHECK(profile.is_biregular);
  CHECK(profile.max_deg_a == 6);
  CHECK(eval_labeling(gen.instance, *gen.planted).value() == Fraction(1, 1));
}

TEST_CASE("random instance regression value at n=3 deg=2 sigma=4 seed=11") {
  const Instance inst = gen_random({3, 2, 4, GenKind::random, 0.0, 11, 1});
  const Fraction brute = brute_maxrep(inst);
  CHECK(maxrep_exact(inst).objective == brute);
  CHECK(brute == Fraction(5, 6));
}

TEST_CASE("random tables satisfy a fixed labeling with frequency 1/sigma") {
  const std::size_t sigma = 4;
  double satisfied = 0.0, total = 0.0;
  for (Seed seed = 0; seed < 400; ++seed) {
    const Instance inst = gen_random({8, 4, sigma, GenKind::random, 0.0, seed, 1});
    const auto r = eval_labeling(inst, Labeling::constant(inst, 1));
    satisfied += static_cast<double>(r.satisfied_count);
    total += static_cast<double>(r.total_edges);
  }
  const double q = 1.0 / static_cast<double>(sigma);
  CHECK(std::abs(satisfied / total - q) <= 3.0 * std::sqrt(q * (1.0 - q) / total));
}

TEST_CASE("random instances at n=4 deg=3 sigma=4 keep value at least 1/sigma") {
  double sum = 0.0;
  for (Seed seed = 0; seed < 200; ++seed) {
    const Instance inst = gen_random({4, 3, 4, GenKind::random, 0.0, seed, 1});
    const Fraction val = maxrep_exact(inst).objective;
    CHECK(val >= Fraction(1, 4));
    sum += val.to_double();
  }
  // Regression value of the mean over these 200 seeds.
  CHECK(sum / 200.0 == doctest::Approx(0.80375).epsilon(1e-12));
}

TEST_CASE("GenSpec validation") {
  CHECK_THROWS_AS(generate({3, 4, 2, GenKind::planted, 0.0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generate({3, 2, 0, GenKind::planted, 0.0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generate({3, 2, 2, GenKind::corrupted, 1.5, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generate({3, 2, 2, GenKind::planted, 0.0, 1, 0}), std::invalid_argument);
  CHECK(parse_gen_kind("corrupted") == GenKind::corrupted);
  CHECK_FALSE(parse_gen_kind("nope"));
  CHECK(to_string(GenKind::random) == "random");
}
