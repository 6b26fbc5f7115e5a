#include "lcsparse/cli.hpp"

#include <cmath>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lcsparse/generators.hpp"
#include "lcsparse/harness.hpp"
#include "lcsparse/io.hpp"
#include "lcsparse/reductions.hpp"
#include "lcsparse/solvers.hpp"

namespace lcsparse {

namespace {

/// Raised after a successful parse when flags are inconsistent.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_csv(const std::string& path) { return std::filesystem::path(path).extension() == ".csv"; }

struct Constants {
  std::optional<double> c_delta, c_p, guard_ratio, trim_slack;
  std::optional<std::size_t> delta;

  void attach(CLI::App* app) {
    app->add_option("--c-delta", c_delta, "Degree-bound constant");
    app->add_option("--c-p", c_p, "Sampling constant");
    app->add_option("--guard-ratio", guard_ratio, "Require D >= ratio * delta");
    app->add_option("--trim-slack", trim_slack, "Slack the trimming analysis is checked against");
    app->add_option("--delta", delta, "Use this degree bound instead of the formula")->check(CLI::PositiveNumber);
  }
  SparsifyOverrides overrides() const { return {c_delta, c_p, guard_ratio, trim_slack, delta}; }
};

struct GenOptions {
  std::string kind;
  std::size_t n = 0, deg = 0, sigma = 0, copies = 1;
  double eps = 0.0;
  Seed seed = 0;
  std::string out_path;
  std::optional<std::string> labeling_out;
};

struct EvalOptions {
  std::string instance;
  std::optional<std::string> labeling, multilabeling;
};

struct SparsifyOptions {
  std::string instance;
  double gamma = 0.0;
  Constants constants;
  Seed seed = 0;
  std::string out_path;
  std::optional<std::string> report;
};

struct SolveOptions {
  std::string instance;
  std::string objective;
  bool exact = false, trivial = false, random = false;
  std::uint64_t budget = kDefaultBudget;
  std::optional<Seed> seed;
  std::optional<std::string> witness_out;
};

struct TrialOptions {
  std::string experiment;
  std::string kind = "planted";
  std::size_t n = 16, deg = 8, sigma = 4, copies = 1;
  double eps = 0.0;
  double gamma = 0.5;
  Constants constants;
  std::optional<double> p;
  std::optional<std::string> instance, multilabeling;
  std::size_t trials = 1000, workers = 1;
  std::optional<Seed> seed;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::string> report;
  bool rows = false;
};

struct ParamsOptions {
  std::optional<std::uint64_t> gap;
  std::optional<double> big_c;
  std::optional<std::size_t> sigma;
  std::optional<double> gamma;
  Constants constants;
};

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

GenKind kind_or_usage(const std::string& text) {
  const auto kind = parse_gen_kind(text);
  if (!kind) throw UsageError("unknown kind '" + text + "' (expected planted, corrupted or random)");
  return *kind;
}

int run_gen(const GenOptions& o, std::ostream& out) {
  GenSpec spec{o.n, o.deg, o.sigma, kind_or_usage(o.kind), o.eps, o.seed, o.copies};
  if (o.labeling_out && spec.kind == GenKind::random) {
    throw UsageError("--labeling-out needs a planted or corrupted instance");
  }
  const Generated gen = generate(spec);
  write_file(o.out_path, serialize_instance(gen.instance));
  if (o.labeling_out) write_file(*o.labeling_out, serialize_labeling(*gen.planted));
  out << "edges " << gen.instance.edge_count() << '\n';
  if (gen.planted) out << "planted_value " << eval_labeling(gen.instance, *gen.planted).value() << '\n';
  return kExitOk;
}

void print_eval(const EvalReport& r, std::ostream& out) {
  out << "satisfied " << r.satisfied_count << '/' << r.total_edges << '\n';
  out << "value " << r.value() << '\n';
  if (r.cost) out << "cost " << *r.cost << '\n';
}

int run_eval(const EvalOptions& o, std::ostream& out) {
  if (!o.labeling && !o.multilabeling) throw UsageError("eval needs --labeling or --multilabeling");
  const Instance inst = load_instance(o.instance);
  if (o.labeling) {
    print_eval(eval_labeling(inst, parse_labeling(read_file(*o.labeling), inst)), out);
  } else {
    print_eval(eval_multilabeling(inst, parse_multilabeling(read_file(*o.multilabeling), inst)), out);
  }
  return kExitOk;
}

int run_sparsify(const SparsifyOptions& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const SparsifyOutput result = sparsify(inst, o.gamma, o.seed, o.constants.overrides());
  write_file(o.out_path, serialize_instance(result.trimmed));
  if (o.report) {
    write_file(*o.report, is_csv(*o.report) ? sparsify_csv(result) : sparsify_to_json(result, true).dump(2) + "\n");
  }
  out << "delta " << result.params.delta << '\n';
  out << "p " << format_number(result.params.p) << '\n';
  out << "intermediate_edges " << result.intermediate.edge_count() << '\n';
  out << "removed " << result.removed_edges << '\n';
  out << "max_degree " << degree_profile(result.trimmed).max_degree() << '\n';
  return kExitOk;
}

int run_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  if (static_cast<int>(o.exact) + static_cast<int>(o.trivial) + static_cast<int>(o.random) > 1) {
    throw UsageError("choose at most one of --exact, --trivial, --random");
  }
  if (o.random && !o.seed) throw UsageError("--random requires --seed");
  const bool maxrep = o.objective == "maxrep";
  if (maxrep && o.trivial) throw UsageError("--trivial applies to --objective minrep only");

  const Instance inst = load_instance(o.instance);
  std::string witness;
  if (maxrep) {
    Labeling phi;
    if (o.random) {
      phi = random_labeling(inst, *o.seed);
    } else {
      const auto result = maxrep_exact(inst, o.budget);
      if (!result.proved_optimal) err << "warning: node budget exhausted; value is a lower bound\n";
      phi = result.witness;
    }
    out << "value " << eval_labeling(inst, phi).value() << '\n';
    witness = serialize_labeling(phi);
  } else {
    Multilabeling psi;
    if (o.trivial) {
      psi = trivial_minrep(inst);
    } else if (o.random) {
      psi = repair_multilabeling(inst, random_labeling(inst, *o.seed));
    } else {
      const auto result = minrep_exact(inst, o.budget);
      if (!result.proved_optimal) err << "warning: node budget exhausted; cost is an upper bound\n";
      psi = result.witness;
    }
    out << "cost " << psi.cost() << '\n';
    witness = serialize_multilabeling(psi);
  }
  out << witness;
  if (o.witness_out) write_file(*o.witness_out, witness);
  return kExitOk;
}

TrialReport make_trial(const TrialOptions& o) {
  if (o.experiment == "counting") return counting_report(counting_grid());
  if (!o.seed) throw UsageError("--seed is required for experiment " + o.experiment);
  const RunConfig run{o.trials, *o.seed, o.workers};
  const GenSpec spec{o.n, o.deg, o.sigma, kind_or_usage(o.kind), o.eps, *o.seed, o.copies};
  const auto ov = o.constants.overrides();

  if (o.experiment == "trim") return trial_trim(spec, o.gamma, ov, run);
  if (o.experiment == "completeness") return trial_completeness(spec, o.gamma, ov, run);
  if (o.experiment == "soundness") return trial_soundness_small(spec, o.gamma, ov, run, o.budget);

  // unsat-tail and rounding take an (instance, multilabeling) pair, from files or generated.
  if (o.instance.has_value() != o.multilabeling.has_value()) {
    throw UsageError("--instance and --multilabeling go together");
  }
  std::optional<Instance> inst;
  std::optional<Multilabeling> psi;
  if (o.instance) {
    inst = load_instance(*o.instance);
    psi = parse_multilabeling(read_file(*o.multilabeling), *inst);
  } else {
    const Generated gen = generate(spec);
    if (!gen.planted) throw UsageError("experiment " + o.experiment + " needs --instance or a planted/corrupted kind");
    inst = gen.instance;
    psi = Multilabeling::singleton_lift(*gen.planted);
  }
  if (o.experiment == "rounding") return rounding_monte_carlo(*inst, *psi, run);
  if (!o.p) throw UsageError("experiment unsat-tail requires --p");
  return trial_unsat_tail(*inst, *psi, *o.p, run);
}

int run_trial(const TrialOptions& o, std::ostream& out) {
  TrialReport report = make_trial(o);
  if (o.report) {
    if (is_csv(*o.report)) {
      write_file(*o.report, report_csv_header() + report_csv_row(report));
    } else {
      if (!o.rows) {
        report.row_columns.clear();
        report.rows.clear();
      }
      write_file(*o.report, report_to_json(report).dump() + "\n");
    }
  }
  out << report_csv_header() << report_csv_row(report);
  for (const auto& c : report.checks) out << "check " << c.name << " violations " << c.violations << '\n';
  for (const auto& note : report.notes) out << "note " << note << '\n';
  return kExitOk;
}

int run_params(const ParamsOptions& o, std::ostream& out) {
  if (o.gap.has_value() == o.sigma.has_value()) throw UsageError("give either --gap with --big-c, or --sigma with --gamma");
  if (o.gap) {
    if (!o.big_c) throw UsageError("--gap requires --big-c");
    const GapParams g = instantiate_gap_params(*o.gap, *o.big_c);
    out << "g " << g.g << "\nC " << format_number(g.big_c) << "\nq " << g.q << "\nsigma " << g.sigma << "\ngamma "
        << format_number(g.gamma) << "\ndelta " << g.delta << "\neps " << format_number(g.eps) << "\npcp_delta "
        << format_number(g.pcp_delta) << "\nwithin_growth_band " << (g.within_growth_band ? "true" : "false") << '\n';
    return kExitOk;
  }
  if (!o.gamma) throw UsageError("--sigma requires --gamma");
  const SparsifyParams p = compute_params(*o.sigma, *o.gamma, o.constants.overrides());
  out << "sigma " << *o.sigma << "\ngamma " << format_number(p.gamma) << "\nc_delta " << format_number(p.c_delta)
      << "\ndelta " << p.delta << "\nc_p " << format_number(p.c_p) << "\nguard_ratio " << format_number(p.guard_ratio)
      << "\nmin_degree " << static_cast<std::size_t>(std::ceil(p.guard_ratio * static_cast<double>(p.delta))) << '\n';
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Label Cover degree-sparsification toolkit", "lcsparse"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance on a random regular bipartite graph");
  gen_cmd->add_option("--kind", gen.kind, "planted, corrupted or random")->required();
  gen_cmd->add_option("--n", gen.n, "Vertices per side")->required();
  gen_cmd->add_option("--deg", gen.deg, "Regular degree")->required();
  gen_cmd->add_option("--sigma", gen.sigma, "Alphabet size")->required();
  gen_cmd->add_option("--eps", gen.eps, "Corrupted fraction of edges");
  gen_cmd->add_option("--copies", gen.copies, "Copy amplification factor");
  gen_cmd->add_option("--seed", gen.seed, "Base seed")->required();
  gen_cmd->add_option("-o,--output", gen.out_path, "Instance file to write")->required();
  gen_cmd->add_option("--labeling-out", gen.labeling_out, "Write the planted labeling here");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a labeling or multilabeling");
  eval_cmd->add_option("instance", eval.instance, "Instance file")->required();
  auto* lab = eval_cmd->add_option("--labeling", eval.labeling, "Labeling file");
  auto* mlab = eval_cmd->add_option("--multilabeling", eval.multilabeling, "Multilabeling file");
  lab->excludes(mlab);

  SparsifyOptions sp;
  auto* sp_cmd = app.add_subcommand("sparsify", "Subsample and trim a regular instance");
  sp_cmd->add_option("instance", sp.instance, "Instance file")->required();
  sp_cmd->add_option("--gamma", sp.gamma, "Soundness parameter in (0, 1)")->required();
  sp.constants.attach(sp_cmd);
  sp_cmd->add_option("--seed", sp.seed, "Base seed")->required();
  sp_cmd->add_option("-o,--output", sp.out_path, "Sparsified instance file")->required();
  sp_cmd->add_option("--report", sp.report, "Report file (.csv summary, otherwise JSON with both instances)");

  SolveOptions so;
  auto* so_cmd = app.add_subcommand("solve", "Solve Max-Rep or Min-Rep");
  so_cmd->add_option("instance", so.instance, "Instance file")->required();
  so_cmd->add_option("--objective", so.objective, "maxrep or minrep")
      ->required()
      ->check(CLI::IsMember({"maxrep", "minrep"}));
  so_cmd->add_flag("--exact", so.exact, "Exact search (default)");
  so_cmd->add_flag("--trivial", so.trivial, "Trivial Min-Rep cover");
  so_cmd->add_flag("--random", so.random, "Uniform random labeling (repaired for minrep)");
  so_cmd->add_option("--budget", so.budget, "Search node budget");
  so_cmd->add_option("--seed", so.seed, "Seed for --random");
  so_cmd->add_option("--witness-out", so.witness_out, "Also write the witness here");

  TrialOptions tr;
  auto* tr_cmd = app.add_subcommand("trial", "Run a Monte Carlo experiment against its exact oracle");
  tr_cmd->add_option("--experiment", tr.experiment, "Experiment name")
      ->required()
      ->check(CLI::IsMember({"trim", "completeness", "soundness", "unsat-tail", "counting", "rounding"}));
  tr_cmd->add_option("--kind", tr.kind, "Generator kind");
  tr_cmd->add_option("--n", tr.n, "Vertices per side of the base graph");
  tr_cmd->add_option("--deg", tr.deg, "Degree of the base graph");
  tr_cmd->add_option("--sigma", tr.sigma, "Alphabet size");
  tr_cmd->add_option("--eps", tr.eps, "Corrupted fraction of edges");
  tr_cmd->add_option("--copies", tr.copies, "Copy amplification factor");
  tr_cmd->add_option("--gamma", tr.gamma, "Soundness parameter in (0, 1)");
  tr.constants.attach(tr_cmd);
  tr_cmd->add_option("--p", tr.p, "Sampling probability (unsat-tail)");
  tr_cmd->add_option("--instance", tr.instance, "Instance file (unsat-tail, rounding)");
  tr_cmd->add_option("--multilabeling", tr.multilabeling, "Multilabeling file (unsat-tail, rounding)");
  tr_cmd->add_option("--trials", tr.trials, "Number of trials");
  tr_cmd->add_option("--workers", tr.workers, "Worker threads")->check(CLI::PositiveNumber);
  tr_cmd->add_option("--seed", tr.seed, "Base seed");
  tr_cmd->add_option("--budget", tr.budget, "Solver node budget (soundness)");
  tr_cmd->add_option("--report", tr.report, "Report file (.csv summary, otherwise one JSON record per line)");
  tr_cmd->add_flag("--rows", tr.rows, "Include per-trial rows in the JSON record");

  ParamsOptions pa;
  auto* pa_cmd = app.add_subcommand("params", "Print derived parameters");
  pa_cmd->add_option("--gap", pa.gap, "Target gap g");
  pa_cmd->add_option("--big-c", pa.big_c, "Soundness constant C");
  pa_cmd->add_option("--sigma", pa.sigma, "Alphabet size");
  pa_cmd->add_option("--gamma", pa.gamma, "Soundness parameter");
  pa.constants.attach(pa_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (eval_cmd->parsed()) return run_eval(eval, out);
    if (sp_cmd->parsed()) return run_sparsify(sp, out);
    if (so_cmd->parsed()) return run_solve(so, out, err);
    if (tr_cmd->parsed()) return run_trial(tr, out);
    return run_params(pa, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const SparsifyError& e) {
    err << "sparsify error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace lcsparse
