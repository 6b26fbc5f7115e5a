#include "lcsparse/harness.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lcsparse/binomial.hpp"

namespace lcsparse {

double TrialReport::frequency() const {
  const std::size_t n = effective_trials();
  return n == 0 ? 0.0 : static_cast<double>(success_count) / static_cast<double>(n);
}

double TrialReport::frequency_radius() const {
  if (!claim_probability || effective_trials() == 0) return 0.0;
  const double c = *claim_probability;
  return kSigmaRadius * std::sqrt(c * (1.0 - c) / static_cast<double>(effective_trials()));
}

double TrialReport::oracle_radius() const {
  const std::size_t n = effective_trials();
  if (n == 0) return 0.0;
  const double var = oracle_variance.value_or(variance);
  return kSigmaRadius * std::sqrt(std::max(0.0, var) / static_cast<double>(n));
}

bool TrialReport::frequency_pass() const {
  if (!claim_probability) return true;
  return frequency() + frequency_radius() >= *claim_probability;
}

bool TrialReport::oracle_pass() const {
  if (!oracle_value) return true;
  const double slack = std::max(oracle_radius(), 1e-9 * std::max(1.0, std::abs(*oracle_value)));
  return std::abs(mean - *oracle_value) <= slack;
}

bool TrialReport::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.violations == 0; });
}

std::optional<double> TrialReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const NamedCheck* TrialReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Seed trial_seed(Seed seed, std::size_t trial) { return mix(seed, Stream::trial, trial); }

namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.variance = ss / static_cast<double>(xs.size() - 1);
  }
  return m;
}

/// Thresholds are products of run parameters; one that lands within rounding
/// error of an integer is taken to be that integer.
double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)) ? r : x;
}

std::size_t regular_degree(const Instance& inst, const char* who) {
  const auto profile = degree_profile(inst);
  if (!profile.is_biregular || profile.max_deg_a != profile.max_deg_b) {
    throw std::invalid_argument(std::string(who) + ": instance must be regular");
  }
  return profile.max_deg_a;
}

void add_params(TrialReport& report, const SparsifyParams& params) {
  report.add_detail("delta", static_cast<double>(params.delta));
  report.add_detail("p", params.p);
  report.add_detail("degree", static_cast<double>(params.degree));
  report.add_detail("c_delta", params.c_delta);
  report.add_detail("c_p", params.c_p);
  report.add_detail("gamma", params.gamma);
  report.add_detail("guard_ratio", params.guard_ratio);
  report.add_detail("trim_markov_bound", params.trim_markov_bound());
}

}  // namespace

double expected_removed_edges(std::size_t m, std::size_t degree, std::size_t delta, double p) {
  if (degree == 0) return 0.0;
  // Endpoint trimmed given the edge is kept: its other D-1 edges bring the degree above delta.
  const double t = binomial_sf(degree - 1, delta, p);
  return static_cast<double>(m) * p * (2.0 * t - t * t);
}

TrialReport trial_trim(const GenSpec& spec, double gamma, const SparsifyOverrides& overrides, const RunConfig& run) {
  const Instance inst = generate(spec).instance;
  const std::size_t degree = regular_degree(inst, "trial_trim");
  const SparsifyParams params = sparsify_params(inst, gamma, overrides);
  const double n = static_cast<double>(inst.n_a());
  const double threshold = snap(0.1 * params.p * static_cast<double>(degree) * n);
  const double threshold_delta = snap(0.1 * params.p * static_cast<double>(params.delta) * n);

  struct Sample {
    double removed;
    std::size_t max_degree;
  };
  const auto samples = run_indexed(run.trials, run.workers, [&](std::size_t i) {
    const auto out = sparsify(inst, gamma, trial_seed(run.seed, i), overrides);
    return Sample{static_cast<double>(out.removed_edges), degree_profile(out.trimmed).max_degree()};
  });

  TrialReport report;
  report.experiment = "trim";
  report.trials = run.trials;
  report.statistic = "removed_edges";
  report.threshold = threshold;
  std::vector<double> removed;
  removed.reserve(samples.size());
  NamedCheck degree_check{"max_degree<=delta", 0};
  std::size_t within_delta_variant = 0;
  std::size_t max_seen = 0;
  for (const auto& s : samples) {
    removed.push_back(s.removed);
    report.success_count += s.removed <= threshold ? 1 : 0;
    within_delta_variant += s.removed <= threshold_delta ? 1 : 0;
    if (s.max_degree > params.delta) ++degree_check.violations;
    max_seen = std::max(max_seen, s.max_degree);
  }
  const auto mom = moments(removed);
  report.mean = mom.mean;
  report.variance = mom.variance;
  report.oracle_value = expected_removed_edges(inst.edge_count(), degree, params.delta, params.p);
  report.checks.push_back(degree_check);
  if (params.trim_chain_holds()) {
    report.claim_probability = 0.99;
  } else {
    report.notes.push_back("trim chain 1/delta + pD/delta <= trim_slack fails at these constants; 0.99 claim not asserted");
  }

  add_params(report, params);
  report.add_detail("n", n);
  report.add_detail("edges", static_cast<double>(inst.edge_count()));
  report.add_detail("endpoint_trim_probability", binomial_sf(degree - 1, params.delta, params.p));
  report.add_detail("threshold_delta_variant", threshold_delta);
  report.add_detail("frequency_delta_variant",
                    run.trials == 0 ? 0.0 : static_cast<double>(within_delta_variant) / static_cast<double>(run.trials));
  report.add_detail("max_degree_seen", static_cast<double>(max_seen));
  return report;
}

TrialReport trial_completeness(const GenSpec& spec, double gamma, const SparsifyOverrides& overrides,
                               const RunConfig& run) {
  const Generated gen = generate(spec);
  if (!gen.planted) throw std::invalid_argument("trial_completeness: generator kind must be planted or corrupted");
  const Instance& inst = gen.instance;
  const Labeling& phi = *gen.planted;
  regular_degree(inst, "trial_completeness");
  const SparsifyParams params = sparsify_params(inst, gamma, overrides);

  std::vector<char> unsat(inst.edge_count(), 0);
  std::size_t unsat_count = 0;
  for (std::size_t i = 0; i < inst.edge_count(); ++i) {
    if (!satisfies_edge(inst, i, phi)) {
      unsat[i] = 1;
      ++unsat_count;
    }
  }

  const double big_n = static_cast<double>(inst.n_total());
  const double delta = static_cast<double>(params.delta);
  const double cost_bound = snap((1.0 + spec.eps * delta) * big_n);
  const double markov_threshold = snap(0.5 * spec.eps * delta * big_n);

  struct Sample {
    std::size_t unsat_interm;
    std::size_t unsat_trimmed;
    std::size_t cost;
    std::size_t non_isolated;
    bool value_one;
  };
  const auto samples = run_indexed(run.trials, run.workers, [&](std::size_t i) {
    const auto out = sparsify(inst, gamma, trial_seed(run.seed, i), overrides);
    Sample s{0, 0, 0, out.trimmed.non_isolated_count(), false};
    for (std::size_t e : out.intermediate_edges) s.unsat_interm += unsat[e];
    for (std::size_t e : out.trimmed_edges) s.unsat_trimmed += unsat[e];
    const auto psi = repair_multilabeling(out.trimmed, phi);
    const auto eval = eval_multilabeling(out.trimmed, psi);
    s.cost = *eval.cost;
    s.value_one = eval.satisfied_count == eval.total_edges;
    return s;
  });

  TrialReport report;
  report.experiment = "completeness";
  report.trials = run.trials;
  report.statistic = "unsat_in_intermediate";
  report.threshold = cost_bound;
  report.claim_probability = 0.9;
  report.oracle_value = params.p * static_cast<double>(unsat_count);
  report.oracle_variance = params.p * (1.0 - params.p) * static_cast<double>(unsat_count);

  NamedCheck repair_bound{"repair_cost<=N+2*unsat_trimmed", 0};
  NamedCheck repair_value{"repair_value==1", 0};
  NamedCheck exact_cover{"eps0_cost==non_isolated", 0};
  std::vector<double> stat;
  std::size_t markov_ok = 0;
  double cost_sum = 0.0, unsat_trimmed_sum = 0.0;
  std::size_t max_cost = 0;
  for (const auto& s : samples) {
    stat.push_back(static_cast<double>(s.unsat_interm));
    report.success_count += static_cast<double>(s.cost) <= cost_bound ? 1 : 0;
    markov_ok += static_cast<double>(s.unsat_interm) <= markov_threshold ? 1 : 0;
    if (s.cost > inst.n_total() + 2 * s.unsat_trimmed) ++repair_bound.violations;
    if (!s.value_one) ++repair_value.violations;
    if (unsat_count == 0 && s.cost != s.non_isolated) ++exact_cover.violations;
    cost_sum += static_cast<double>(s.cost);
    unsat_trimmed_sum += static_cast<double>(s.unsat_trimmed);
    max_cost = std::max(max_cost, s.cost);
  }
  const auto mom = moments(stat);
  report.mean = mom.mean;
  report.variance = mom.variance;
  report.checks = {repair_bound, repair_value};
  if (unsat_count == 0) report.checks.push_back(exact_cover);

  const double trials = std::max<double>(1.0, static_cast<double>(run.trials));
  add_params(report, params);
  report.add_detail("N", big_n);
  report.add_detail("eps", spec.eps);
  report.add_detail("unsat_edges", static_cast<double>(unsat_count));
  report.add_detail("markov_threshold", markov_threshold);
  report.add_detail("markov_frequency", static_cast<double>(markov_ok) / trials);
  report.add_detail("mean_unsat_trimmed", unsat_trimmed_sum / trials);
  report.add_detail("mean_repair_cost", cost_sum / trials);
  report.add_detail("max_repair_cost", static_cast<double>(max_cost));
  return report;
}

TrialReport trial_soundness_small(const GenSpec& spec, double gamma, const SparsifyOverrides& overrides,
                                  const RunConfig& run, std::uint64_t budget) {
  spec.validate();
  struct Sample {
    bool solved;
    double value;
    std::size_t minrep_random;
    std::size_t minrep_planted;
    std::size_t non_isolated;
    std::size_t n_total;
  };
  const auto samples = run_indexed(run.trials, run.workers, [&](std::size_t i) {
    GenSpec trial_spec = spec;
    trial_spec.seed = trial_seed(run.seed, i);
    trial_spec.copies = 1;
    const Instance random = gen_random(trial_spec);
    const Instance planted = gen_planted(trial_spec).instance;
    const Seed sparsify_seed = mix(trial_spec.seed, Stream::subsample, 0);

    const auto val = maxrep_exact(random, budget);
    const auto out_random = sparsify(random, gamma, sparsify_seed, overrides);
    const auto out_planted = sparsify(planted, gamma, sparsify_seed, overrides);
    const auto mr = minrep_exact(out_random.trimmed, budget);
    const auto mp = minrep_exact(out_planted.trimmed, budget);
    return Sample{val.proved_optimal && mr.proved_optimal && mp.proved_optimal,
                  val.objective.to_double(),
                  mr.objective,
                  mp.objective,
                  out_planted.trimmed.non_isolated_count(),
                  random.n_total()};
  });

  TrialReport report;
  report.experiment = "soundness";
  report.trials = run.trials;
  report.statistic = "minrep_random_over_N";
  report.claim_probability = 0.9;
  report.row_columns = {"val_random", "minrep_random_over_N", "minrep_planted_over_N"};
  NamedCheck planted_exact{"planted_minrep==non_isolated", 0};
  std::vector<double> ratios;
  double value_sum = 0.0, planted_sum = 0.0;
  std::size_t strict = 0;
  for (const auto& s : samples) {
    if (!s.solved) {
      ++report.discarded;
      continue;
    }
    const double n = static_cast<double>(s.n_total);
    ratios.push_back(static_cast<double>(s.minrep_random) / n);
    value_sum += s.value;
    planted_sum += static_cast<double>(s.minrep_planted) / n;
    report.success_count += s.minrep_random >= s.minrep_planted ? 1 : 0;
    strict += s.minrep_random > s.minrep_planted ? 1 : 0;
    if (s.minrep_planted != s.non_isolated) ++planted_exact.violations;
    report.rows.push_back({s.value, static_cast<double>(s.minrep_random) / n, static_cast<double>(s.minrep_planted) / n});
  }
  const auto mom = moments(ratios);
  report.mean = mom.mean;
  report.variance = mom.variance;
  report.checks.push_back(planted_exact);

  const double kept = std::max<double>(1.0, static_cast<double>(report.effective_trials()));
  report.add_detail("mean_val_random", value_sum / kept);
  report.add_detail("mean_minrep_planted_over_N", planted_sum / kept);
  report.add_detail("strictly_greater_frequency", static_cast<double>(strict) / kept);
  report.notes.push_back("paired planted-vs-random trend; regression check, not a bound from the analysis");
  return report;
}

TrialReport trial_unsat_tail(const Instance& inst, const Multilabeling& psi, double p, const RunConfig& run) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("trial_unsat_tail: p must lie in [0, 1]");
  const std::size_t degree = regular_degree(inst, "trial_unsat_tail");
  const auto eval = eval_multilabeling(inst, psi);
  if (2 * eval.satisfied_count >= eval.total_edges) {
    throw std::invalid_argument("trial_unsat_tail: multilabeling must have value below 1/2");
  }

  std::vector<char> unsat(inst.edge_count(), 0);
  for (std::size_t i = 0; i < inst.edge_count(); ++i) unsat[i] = satisfies_edge(inst, i, psi) ? 0 : 1;
  const std::size_t unsat_count = eval.total_edges - eval.satisfied_count;

  const double dn = static_cast<double>(degree) * static_cast<double>(inst.n_a());
  const double threshold = snap(0.2 * p * dn);
  const double exact_tail = binomial_below(unsat_count, threshold, p);
  const double chernoff = std::exp(-0.36 * 0.5 * p * dn);

  const auto counts = run_indexed(run.trials, run.workers, [&](std::size_t i) {
    std::size_t c = 0;
    for (std::size_t e : subsample_indices(inst.edge_count(), p, trial_seed(run.seed, i))) c += unsat[e];
    return c;
  });

  TrialReport report;
  report.experiment = "unsat-tail";
  report.trials = run.trials;
  report.statistic = "tail_indicator";
  report.threshold = threshold;
  std::vector<double> indicator;
  double surviving_sum = 0.0;
  for (std::size_t c : counts) {
    const bool below = static_cast<double>(c) < threshold;
    indicator.push_back(below ? 1.0 : 0.0);
    report.success_count += below ? 1 : 0;
    surviving_sum += static_cast<double>(c);
  }
  const auto mom = moments(indicator);
  report.mean = mom.mean;
  report.variance = mom.variance;
  report.oracle_value = exact_tail;
  report.oracle_variance = exact_tail * (1.0 - exact_tail);
  report.checks.push_back({"exact_tail<=chernoff_bound", exact_tail <= chernoff ? 0U : 1U});

  report.add_detail("p", p);
  report.add_detail("degree", static_cast<double>(degree));
  report.add_detail("n", static_cast<double>(inst.n_a()));
  report.add_detail("unsat_edges", static_cast<double>(unsat_count));
  report.add_detail("exact_tail", exact_tail);
  report.add_detail("chernoff_bound", chernoff);
  report.add_detail("mean_surviving_unsat", run.trials == 0 ? 0.0 : surviving_sum / static_cast<double>(run.trials));
  report.add_detail("expected_surviving_unsat", p * static_cast<double>(unsat_count));
  return report;
}

CountingRecord counting_bound(std::size_t n_total, std::size_t sigma, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("counting_bound: gamma must lie in (0, 1]");
  if (!(static_cast<double>(sigma) * gamma > 1.0)) throw std::invalid_argument("counting_bound: requires sigma > 1/gamma");
  CountingRecord rec;
  rec.n_total = n_total;
  rec.sigma = sigma;
  rec.gamma = gamma;
  const double root = std::sqrt(gamma);
  const double n = static_cast<double>(n_total);
  const double raw_t = 0.06 * n / root;
  rec.t = static_cast<std::size_t>(std::floor(raw_t + 1e-9 * std::max(1.0, raw_t)));
  rec.ln_binomial = ln_choose(n * static_cast<double>(sigma), static_cast<double>(rec.t));
  rec.ln_bound = 0.5 * n / root * std::log(2.0 * static_cast<double>(sigma));
  rec.holds = rec.ln_binomial <= rec.ln_bound;
  return rec;
}

std::vector<CountingRecord> counting_grid() {
  std::vector<CountingRecord> out;
  for (std::size_t n = 10; n <= 200; n += 10) {
    for (std::size_t sigma = 2; sigma <= 64; sigma += 2) {
      const double floor_gamma = 1.0 / static_cast<double>(sigma);
      for (int j = 1; j <= 10; ++j) {
        out.push_back(counting_bound(n, sigma, floor_gamma + j * (1.0 - floor_gamma) / 11.0));
      }
    }
  }
  return out;
}

TrialReport counting_report(const std::vector<CountingRecord>& records) {
  TrialReport report;
  report.experiment = "counting";
  report.trials = records.size();
  report.statistic = "log_slack";
  NamedCheck check{"ln_binomial<=ln_bound", 0};
  std::vector<double> slack;
  double min_slack = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    const double s = r.ln_bound - r.ln_binomial;
    slack.push_back(s);
    min_slack = std::min(min_slack, s);
    if (r.holds) {
      ++report.success_count;
    } else {
      ++check.violations;
    }
  }
  const auto mom = moments(slack);
  report.mean = mom.mean;
  report.variance = mom.variance;
  report.checks.push_back(check);
  report.add_detail("min_log_slack", records.empty() ? 0.0 : min_slack);
  report.row_columns = {"N", "sigma", "gamma", "t", "ln_binomial", "ln_bound"};
  for (const auto& r : records) {
    report.rows.push_back({static_cast<double>(r.n_total), static_cast<double>(r.sigma), r.gamma,
                           static_cast<double>(r.t), r.ln_binomial, r.ln_bound});
  }
  return report;
}

Fraction rounding_expectation(const Instance& inst, const Multilabeling& psi) {
  check_conforms(inst, psi);
  if (inst.edge_count() == 0) return Fraction(1, 1);
  static const std::vector<Symbol> kDefault{0};
  const auto effective = [&](Side side, std::size_t v) -> const std::vector<Symbol>& {
    const auto& set = psi.set(side, v);
    return set.empty() ? kDefault : set;
  };
  Fraction total;
  for (std::size_t i = 0; i < inst.edge_count(); ++i) {
    const auto e = inst.edge(i);
    const auto& sa = effective(Side::a, e.a);
    const auto& sb = effective(Side::b, e.b);
    std::uint64_t pairs = 0;
    for (Symbol s : sa) pairs += std::binary_search(sb.begin(), sb.end(), e.project(s)) ? 1 : 0;
    if (pairs > 0) total += Fraction(pairs, sa.size() * sb.size());
  }
  return total * Fraction(1, inst.edge_count());
}

TrialReport rounding_monte_carlo(const Instance& inst, const Multilabeling& psi, const RunConfig& run) {
  const Fraction exact = rounding_expectation(inst, psi);
  const auto values = run_indexed(run.trials, run.workers, [&](std::size_t i) {
    return eval_labeling(inst, round_multilabeling(inst, psi, trial_seed(run.seed, i))).value().to_double();
  });
  TrialReport report;
  report.experiment = "rounding";
  report.trials = run.trials;
  report.statistic = "rounded_value";
  const auto mom = moments(values);
  report.mean = mom.mean;
  report.variance = mom.variance;
  report.oracle_value = exact.to_double();
  report.add_detail("exact_numerator", static_cast<double>(exact.num()));
  report.add_detail("exact_denominator", static_cast<double>(exact.den()));
  report.add_detail("cost", static_cast<double>(psi.cost()));
  return report;
}

}  // namespace lcsparse
