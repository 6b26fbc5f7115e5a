// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance [criterion numbers...]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "lcsparse/cli.hpp"
#include "lcsparse/generators.hpp"
#include "lcsparse/harness.hpp"
#include "lcsparse/io.hpp"
#include "lcsparse/reductions.hpp"
#include "lcsparse/solvers.hpp"

using namespace lcsparse;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::size_t workers() { return std::max(1U, std::thread::hardware_concurrency()); }

std::string fmt(double x, int precision = 4) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

Outcome oracle_agreement() {
  std::size_t mismatches = 0, instances = 0;
  for (Seed seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 5;  // 2..6
    const std::size_t deg = 1 + (seed / 5) % std::min<std::size_t>(3, n);
    const std::size_t sigma = 1 + (seed / 15) % 4;
    const Instance inst = gen_planted({n, deg, sigma, GenKind::planted, 0.0, 1000 + seed, 1}).instance;
    ++instances;
    const auto min = minrep_exact(inst);
    const auto max = maxrep_exact(inst);
    if (!min.proved_optimal || min.objective != inst.n_total() || !max.proved_optimal ||
        max.objective != Fraction(1, 1)) {
      ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(instances) + " planted instances, " + std::to_string(mismatches) + " mismatches"};
}

Outcome tiny_fixtures() {
  const Instance tiny2 = fixtures::tiny2();
  std::set<std::string> maxrep_runs, minrep_runs, trivial_runs;
  bool ok = true;
  for (int rep = 0; rep < 3; ++rep) {
    const auto max = maxrep_exact(tiny2);
    const auto min = minrep_exact(tiny2);
    const auto triv = trivial_minrep(tiny2);
    ok = ok && max.objective == Fraction(3, 4) && min.objective == 5 && triv.cost() == 5 &&
         eval_multilabeling(tiny2, triv).value() == Fraction(1, 1) &&
         eval_multilabeling(tiny2, min.witness).value() == Fraction(1, 1);
    maxrep_runs.insert(max.objective.str() + "\n" + serialize_labeling(max.witness));
    minrep_runs.insert(std::to_string(min.objective) + "\n" + serialize_multilabeling(min.witness));
    trivial_runs.insert(serialize_multilabeling(triv));
  }
  ok = ok && maxrep_runs.size() == 1 && minrep_runs.size() == 1 && trivial_runs.size() == 1;
  return {ok, "maxrep 3/4, minrep 5, trivial cost 5 value 1, identical over 3 runs"};
}

Outcome delta_approximation() {
  constexpr std::uint64_t kBudget = 2'000'000;
  std::size_t completed = 0, skipped = 0, violations = 0;
  for (Seed seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 7;  // 2..8
    const std::size_t deg = 1 + (seed / 7) % std::min<std::size_t>(4, n);
    const std::size_t sigma = 1 + (seed / 35) % 4;
    const Instance inst = gen_random({n, deg, sigma, GenKind::random, 0.0, 5000 + seed, 1});
    const auto opt = minrep_exact(inst, kBudget);
    if (!opt.proved_optimal) {
      ++skipped;
      continue;
    }
    ++completed;
    const Multilabeling triv = trivial_minrep(inst);
    const auto eval = eval_multilabeling(inst, triv);
    const std::size_t big_delta = degree_profile(inst).max_degree();
    if (eval.satisfied_count != eval.total_edges || triv.cost() > big_delta * opt.objective) ++violations;
  }
  return {violations == 0 && completed > 0, std::to_string(completed) + " solved, " + std::to_string(skipped) +
                                                " over budget, " + std::to_string(violations) + " violations"};
}

// n = 64 per side cannot carry D = 200 in a simple graph; a 50-regular graph
// on 64 + 64 vertices amplified by 4 copies gives D = 200 on 256 + 256.
const GenSpec kTrimSpec{64, 50, 2, GenKind::random, 0.0, 2024, 4};

SparsifyOverrides desk_overrides(std::size_t delta, double c_p, double guard_ratio) {
  SparsifyOverrides ov;
  ov.delta = delta;
  ov.c_p = c_p;
  ov.guard_ratio = guard_ratio;
  return ov;
}

Outcome trim_statistics() {
  const TrialReport r = trial_trim(kTrimSpec, 0.5, desk_overrides(20, 0.5, 10), {2000, 41, workers()});
  const bool ok = r.oracle_pass() && r.check("max_degree<=delta")->violations == 0 && *r.detail("degree") == 200 &&
                  *r.detail("p") == 0.05;
  return {ok, "mean removed " + fmt(r.mean) + " vs oracle " + fmt(*r.oracle_value) + " +- " + fmt(r.oracle_radius()) +
                  ", max degree seen " + fmt(*r.detail("max_degree_seen"))};
}

Outcome completeness_chain() {
  bool ok = true;
  std::string detail;
  for (double eps : {0.0, 0.05, 0.1}) {
    GenSpec spec{64, 50, 8, GenKind::corrupted, eps, 3031, 4};
    const TrialReport r = trial_completeness(spec, 0.5, desk_overrides(20, 0.5, 10), {2000, 53, workers()});
    const bool arm = r.oracle_pass() && r.checks_pass() &&
                     (eps > 0.0 || *r.detail("max_repair_cost") <= *r.detail("N"));
    ok = ok && arm;
    if (!detail.empty()) detail += "; ";
    detail += "eps " + fmt(eps) + ": " + fmt(r.mean) + " vs " + fmt(*r.oracle_value) + " +- " +
              fmt(r.oracle_radius()) + (arm ? "" : " FAIL");
  }
  return {ok, detail};
}

Outcome rounding() {
  std::mt19937_64 rng(6060);
  std::size_t exact_mismatch = 0;
  for (int k = 0; k < 50; ++k) {
    const Instance inst = fixtures::random_instance(rng, 3, 3, 0.7);
    const Multilabeling psi = fixtures::random_multilabeling(rng, inst, 0.5);
    if (rounding_expectation(inst, psi) != fixtures::enumerate_roundings(inst, psi)) ++exact_mismatch;
  }
  std::size_t mc_fail = 0;
  for (Seed k = 0; k < 10; ++k) {
    const Instance inst = generate({10 + k, 4, 3 + k % 4, GenKind::corrupted, 0.3, 7000 + k, 1}).instance;
    const Multilabeling psi = fixtures::random_multilabeling(rng, inst, 0.4);
    const TrialReport r = rounding_monte_carlo(inst, psi, {10000, 8000 + k, workers()});
    if (!r.oracle_pass()) ++mc_fail;
  }
  return {exact_mismatch == 0 && mc_fail == 0, "50 exact pairs, " + std::to_string(exact_mismatch) +
                                                   " mismatches; 10 Monte Carlo pairs, " + std::to_string(mc_fail) +
                                                   " outside 3 sigma"};
}

Outcome counting() {
  const auto grid = counting_grid();
  const TrialReport r = counting_report(grid);
  return {r.checks_pass(), std::to_string(grid.size()) + " grid points, " +
                               std::to_string(r.check("ln_binomial<=ln_bound")->violations) + " violations, min log slack " +
                               fmt(*r.detail("min_log_slack"))};
}

Outcome unsat_tail() {
  struct Point {
    std::size_t n, deg;
    double p;
  };
  // 0.5 p D n ranges over 2..5: means where the tail event has visible frequency.
  const std::vector<Point> points{{20, 10, 0.02}, {20, 10, 0.05}, {30, 10, 0.03}, {40, 8, 0.025}, {16, 8, 0.05}};
  std::size_t bound_fail = 0, freq_fail = 0, count = 0;
  double worst_ratio = 0.0;
  for (double f : {0.55, 0.6, 0.75, 0.9}) {
    for (const auto& pt : points) {
      const Generated gen = generate({pt.n, pt.deg, 4, GenKind::corrupted, f, 9000 + count, 1});
      const Multilabeling psi = Multilabeling::singleton_lift(*gen.planted);
      const TrialReport r = trial_unsat_tail(gen.instance, psi, pt.p, {4000, 9100 + count, workers()});
      ++count;
      if (r.check("exact_tail<=chernoff_bound")->violations) ++bound_fail;
      if (!r.oracle_pass()) ++freq_fail;
      worst_ratio = std::max(worst_ratio, *r.detail("exact_tail") / *r.detail("chernoff_bound"));
    }
  }
  return {bound_fail == 0 && freq_fail == 0,
          std::to_string(count) + " points, " + std::to_string(bound_fail) + " bound violations, " +
              std::to_string(freq_fail) + " frequencies outside 3 sigma, max tail/bound " + fmt(worst_ratio)};
}

struct Capture {
  int code;
  std::string out;
};

Capture cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str() + err.str()};
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "lcsparse_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto at = [&](const std::string& name) { return (dir / name).string(); };
  std::size_t compared = 0, differing = 0, failed = 0;
  const auto same = [&](const std::string& x, const std::string& y) {
    ++compared;
    if (x != y) ++differing;
  };
  const auto must = [&](const Capture& c) {
    if (c.code != 0) ++failed;
    return c.out;
  };

  for (const std::string kind : {"planted", "corrupted", "random"}) {
    std::vector<std::string> base{"gen", "--kind", kind, "--n", "12", "--deg", "5", "--sigma", "4", "--eps", "0.1",
                                  "--seed", "99"};
    auto a = base, b = base;
    a.insert(a.end(), {"-o", at(kind + "_a.lc")});
    b.insert(b.end(), {"-o", at(kind + "_b.lc")});
    same(must(cli(a)), must(cli(b)));
    same(read_file(at(kind + "_a.lc")), read_file(at(kind + "_b.lc")));
  }
  must(cli({"gen", "--kind", "corrupted", "--eps", "0.6", "--n", "20", "--deg", "10", "--sigma", "4", "--seed", "5", "-o",
            at("tail.lc"), "--labeling-out", at("tail.lab")}));
  const Instance tail_inst = parse_instance(read_file(at("tail.lc")));
  write_file(at("tail.mlab"),
             serialize_multilabeling(Multilabeling::singleton_lift(parse_labeling(read_file(at("tail.lab")), tail_inst))));

  for (const std::string ext : {"csv", "json"}) {
    std::vector<std::string> base{"sparsify", at("planted_a.lc"), "--gamma", "0.2", "--delta", "3",
                                  "--c-p", "0.5", "--guard-ratio", "1", "--seed", "7"};
    auto a = base, b = base;
    a.insert(a.end(), {"-o", at("sp_a.lc"), "--report", at("sp_a." + ext)});
    b.insert(b.end(), {"-o", at("sp_b.lc"), "--report", at("sp_b." + ext)});
    same(must(cli(a)), must(cli(b)));
    same(read_file(at("sp_a.lc")), read_file(at("sp_b.lc")));
    same(read_file(at("sp_a." + ext)), read_file(at("sp_b." + ext)));
  }

  must(cli({"gen", "--kind", "random", "--n", "4", "--deg", "2", "--sigma", "3", "--seed", "3", "-o", at("small.lc")}));
  for (const auto& mode : std::vector<std::vector<std::string>>{{"--objective", "maxrep"},
                                                                 {"--objective", "minrep", "--exact"},
                                                                 {"--objective", "minrep", "--trivial"},
                                                                 {"--objective", "maxrep", "--random", "--seed", "4"},
                                                                 {"--objective", "minrep", "--random", "--seed", "4"}}) {
    std::vector<std::string> args{"solve", at("small.lc")};
    args.insert(args.end(), mode.begin(), mode.end());
    same(must(cli(args)), must(cli(args)));
  }

  const std::vector<std::vector<std::string>> trials{
      {"--experiment", "trim", "--n", "16", "--deg", "16", "--copies", "2", "--sigma", "2", "--delta", "4", "--c-p", "0.5",
       "--guard-ratio", "1", "--trials", "300"},
      {"--experiment", "completeness", "--kind", "corrupted", "--eps", "0.1", "--n", "16", "--deg", "8", "--sigma", "3",
       "--delta", "4", "--c-p", "0.5", "--guard-ratio", "1", "--trials", "300"},
      {"--experiment", "soundness", "--kind", "random", "--n", "4", "--deg", "3", "--sigma", "4", "--delta", "2", "--c-p",
       "1", "--guard-ratio", "1", "--trials", "40", "--rows"},
      {"--experiment", "unsat-tail", "--instance", at("tail.lc"), "--multilabeling", at("tail.mlab"), "--p", "0.05",
       "--trials", "500"},
      {"--experiment", "rounding", "--instance", at("tail.lc"), "--multilabeling", at("tail.mlab"), "--trials", "200"},
      {"--experiment", "counting"}};
  for (std::size_t k = 0; k < trials.size(); ++k) {
    for (const std::string ext : {"jsonl", "csv"}) {
      std::vector<std::string> reports;
      for (const std::string w : {"1", "4", "1"}) {
        const std::string path = at("trial_" + std::to_string(k) + "_" + w + "_" + std::to_string(reports.size()) + "." + ext);
        std::vector<std::string> args{"trial"};
        args.insert(args.end(), trials[k].begin(), trials[k].end());
        args.insert(args.end(), {"--seed", "17", "--workers", w, "--report", path});
        must(cli(args));
        reports.push_back(read_file(path));
      }
      same(reports[0], reports[1]);
      same(reports[0], reports[2]);
    }
  }
  fs::remove_all(dir);
  return {differing == 0 && failed == 0, std::to_string(compared) + " output pairs compared, " +
                                             std::to_string(differing) + " differ, " + std::to_string(failed) +
                                             " commands failed"};
}

Outcome soundness_trend() {
  const GenSpec spec{4, 3, 4, GenKind::random, 0.0, 0, 1};
  const TrialReport r = trial_soundness_small(spec, 0.5, desk_overrides(2, 1.0, 1), {200, 2718, workers()});
  // Discarded pairs count against the 90% requirement.
  const bool ok = r.success_count * 10 >= 9 * r.trials && r.checks_pass();
  return {ok, std::to_string(r.success_count) + "/" + std::to_string(r.trials) + " pairs with minrep(random) >= " +
                  "minrep(planted), " + std::to_string(r.discarded) + " discarded, strictly greater in " +
                  fmt(*r.detail("strictly_greater_frequency")) + ", mean val(random) " +
                  fmt(*r.detail("mean_val_random"))};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "oracle agreement on planted instances", 60, oracle_agreement},
      {2, "TINY fixtures", 1, tiny_fixtures},
      {3, "Delta-approximation of trivial_minrep", 300, delta_approximation},
      {4, "trim statistics vs exact oracle", 120, trim_statistics},
      {5, "completeness chain", 180, completeness_chain},
      {6, "rounding expectation", 120, rounding},
      {7, "counting bound grid", 10, counting},
      {8, "unsat tail vs exact binomial and Chernoff bound", 120, unsat_tail},
      {9, "determinism of commands and reports", 60, determinism},
      {10, "soundness trend", 600, soundness_trend},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s | %s | %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
