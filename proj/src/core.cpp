#include "lcsparse/core.hpp"

#include <algorithm>
#include <numeric>

namespace lcsparse {

char side_char(Side side) noexcept { return side == Side::a ? 'a' : 'b'; }

namespace {

std::string join_messages(const std::vector<ValidationIssue>& issues) {
  std::string out = "invalid instance:";
  for (const auto& issue : issues) {
    out += "\n  ";
    out += issue.message;
  }
  return out;
}

std::vector<ValidationIssue> find_issues(const RawInstance& raw) {
  using Kind = ValidationIssue::Kind;
  std::vector<ValidationIssue> issues;
  if (raw.n_a == 0) issues.push_back({Kind::empty_side, std::nullopt, "n_a must be at least 1"});
  if (raw.n_b == 0) issues.push_back({Kind::empty_side, std::nullopt, "n_b must be at least 1"});
  if (raw.sigma == 0) issues.push_back({Kind::empty_alphabet, std::nullopt, "sigma must be at least 1"});

  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const auto& e = raw.edges[i];
    const std::string where = "edge " + std::to_string(i) + " (" + std::to_string(e.a) + "," + std::to_string(e.b) + "): ";
    if (e.a >= raw.n_a) issues.push_back({Kind::a_out_of_range, i, where + "a index out of range"});
    if (e.b >= raw.n_b) issues.push_back({Kind::b_out_of_range, i, where + "b index out of range"});
    if (e.table.size() != raw.sigma) {
      issues.push_back({Kind::table_length, i, where + "table length " + std::to_string(e.table.size()) + " != sigma"});
    }
    for (std::size_t s = 0; s < e.table.size(); ++s) {
      if (e.table[s] >= raw.sigma) {
        issues.push_back({Kind::symbol_out_of_range, i, where + "table entry " + std::to_string(s) + " out of alphabet"});
        break;
      }
    }
  }

  std::vector<std::size_t> order(raw.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(raw.edges[x].a, raw.edges[x].b) < std::pair(raw.edges[y].a, raw.edges[y].b);
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& prev = raw.edges[order[k - 1]];
    const auto& cur = raw.edges[order[k]];
    if (prev.a == cur.a && prev.b == cur.b) {
      issues.push_back({Kind::duplicate_edge, order[k],
                        "edge " + std::to_string(order[k]) + " (" + std::to_string(cur.a) + "," + std::to_string(cur.b) +
                            "): duplicate edge"});
    }
  }
  return issues;
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(join_messages(issues)), issues_(std::move(issues)) {}

ValidationResult validate_instance(RawInstance raw) {
  ValidationResult result;
  try {
    result.instance.emplace(Instance::from_raw(std::move(raw)));
  } catch (const ValidationError& err) {
    result.issues = err.issues();
  }
  return result;
}

Instance Instance::from_raw(RawInstance raw) {
  auto issues = find_issues(raw);
  if (!issues.empty()) throw ValidationError(std::move(issues));

  std::sort(raw.edges.begin(), raw.edges.end(),
            [](const RawEdge& x, const RawEdge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });

  Instance inst;
  inst.n_a_ = raw.n_a;
  inst.n_b_ = raw.n_b;
  inst.sigma_ = raw.sigma;
  inst.ends_.reserve(raw.edges.size());
  inst.tables_.reserve(raw.edges.size() * raw.sigma);
  for (const auto& e : raw.edges) {
    inst.ends_.push_back({e.a, e.b});
    inst.tables_.insert(inst.tables_.end(), e.table.begin(), e.table.end());
  }
  return inst;
}

std::vector<std::size_t> Instance::degrees(Side side) const {
  std::vector<std::size_t> deg(side == Side::a ? n_a_ : n_b_, 0);
  for (const auto& e : ends_) ++deg[side == Side::a ? e.a : e.b];
  return deg;
}

std::vector<std::vector<std::size_t>> Instance::incidence(Side side) const {
  std::vector<std::vector<std::size_t>> inc(side == Side::a ? n_a_ : n_b_);
  for (std::size_t i = 0; i < ends_.size(); ++i) inc[side == Side::a ? ends_[i].a : ends_[i].b].push_back(i);
  return inc;
}

std::size_t Instance::non_isolated_count() const {
  const auto da = degrees(Side::a);
  const auto db = degrees(Side::b);
  const auto positive = [](std::size_t d) { return d > 0; };
  return static_cast<std::size_t>(std::count_if(da.begin(), da.end(), positive) +
                                  std::count_if(db.begin(), db.end(), positive));
}

Instance Instance::subgraph(std::span<const std::size_t> kept) const {
  Instance out;
  out.n_a_ = n_a_;
  out.n_b_ = n_b_;
  out.sigma_ = sigma_;
  out.ends_.reserve(kept.size());
  out.tables_.reserve(kept.size() * sigma_);
  std::size_t prev = 0;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    if (i >= ends_.size() || (k > 0 && i <= prev)) throw std::invalid_argument("subgraph: edge indices must be increasing and in range");
    prev = i;
    out.ends_.push_back(ends_[i]);
    const auto first = tables_.begin() + static_cast<std::ptrdiff_t>(i * sigma_);
    out.tables_.insert(out.tables_.end(), first, first + static_cast<std::ptrdiff_t>(sigma_));
  }
  return out;
}

RawInstance Instance::to_raw() const {
  RawInstance raw{n_a_, n_b_, sigma_, {}};
  raw.edges.reserve(ends_.size());
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    const auto view = edge(i);
    raw.edges.push_back({view.a, view.b, {view.table.begin(), view.table.end()}});
  }
  return raw;
}

Labeling Labeling::constant(const Instance& inst, Symbol s) {
  return {std::vector<Symbol>(inst.n_a(), s), std::vector<Symbol>(inst.n_b(), s)};
}

Multilabeling Multilabeling::singleton_lift(const Labeling& phi) {
  Multilabeling psi(phi.labels_a.size(), phi.labels_b.size());
  for (std::size_t v = 0; v < phi.labels_a.size(); ++v) psi.sets_a_[v] = {phi.labels_a[v]};
  for (std::size_t v = 0; v < phi.labels_b.size(); ++v) psi.sets_b_[v] = {phi.labels_b[v]};
  return psi;
}

bool Multilabeling::add(Side side, std::size_t v, Symbol s) {
  auto& set = side == Side::a ? sets_a_.at(v) : sets_b_.at(v);
  const auto it = std::lower_bound(set.begin(), set.end(), s);
  if (it != set.end() && *it == s) return false;
  set.insert(it, s);
  return true;
}

void Multilabeling::assign(Side side, std::size_t v, std::vector<Symbol> symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  (side == Side::a ? sets_a_.at(v) : sets_b_.at(v)) = std::move(symbols);
}

bool Multilabeling::contains(Side side, std::size_t v, Symbol s) const {
  const auto& set = this->set(side, v);
  return std::binary_search(set.begin(), set.end(), s);
}

std::size_t Multilabeling::cost() const noexcept {
  std::size_t total = 0;
  for (const auto& s : sets_a_) total += s.size();
  for (const auto& s : sets_b_) total += s.size();
  return total;
}

Fraction EvalReport::value() const {
  if (total_edges == 0) return Fraction(1, 1);
  return Fraction(satisfied_count, total_edges);
}

void check_conforms(const Instance& inst, const Labeling& phi) {
  if (phi.labels_a.size() != inst.n_a() || phi.labels_b.size() != inst.n_b()) {
    throw std::invalid_argument("labeling dimensions do not match instance");
  }
  const auto bad = [&](Symbol s) { return s >= inst.sigma(); };
  if (std::any_of(phi.labels_a.begin(), phi.labels_a.end(), bad) ||
      std::any_of(phi.labels_b.begin(), phi.labels_b.end(), bad)) {
    throw std::invalid_argument("labeling uses a symbol outside the alphabet");
  }
}

void check_conforms(const Instance& inst, const Multilabeling& psi) {
  if (psi.n_a() != inst.n_a() || psi.n_b() != inst.n_b()) {
    throw std::invalid_argument("multilabeling dimensions do not match instance");
  }
  for (Side side : {Side::a, Side::b}) {
    const std::size_t n = side == Side::a ? psi.n_a() : psi.n_b();
    for (std::size_t v = 0; v < n; ++v) {
      const auto& set = psi.set(side, v);
      if (!set.empty() && set.back() >= inst.sigma()) {
        throw std::invalid_argument("multilabeling uses a symbol outside the alphabet");
      }
    }
  }
}

bool satisfies_edge(const Instance& inst, std::size_t edge, const Labeling& phi) {
  const auto e = inst.edge(edge);
  return e.project(phi.labels_a[e.a]) == phi.labels_b[e.b];
}

bool satisfies_edge(const Instance& inst, std::size_t edge, const Multilabeling& psi) {
  const auto e = inst.edge(edge);
  const auto& target = psi.set(Side::b, e.b);
  if (target.empty()) return false;
  for (Symbol s : psi.set(Side::a, e.a)) {
    if (std::binary_search(target.begin(), target.end(), e.project(s))) return true;
  }
  return false;
}

EvalReport eval_labeling(const Instance& inst, const Labeling& phi) {
  check_conforms(inst, phi);
  EvalReport report;
  report.total_edges = inst.edge_count();
  for (std::size_t i = 0; i < inst.edge_count(); ++i) report.satisfied_count += satisfies_edge(inst, i, phi) ? 1 : 0;
  return report;
}

EvalReport eval_multilabeling(const Instance& inst, const Multilabeling& psi) {
  check_conforms(inst, psi);
  EvalReport report;
  report.total_edges = inst.edge_count();
  for (std::size_t i = 0; i < inst.edge_count(); ++i) report.satisfied_count += satisfies_edge(inst, i, psi) ? 1 : 0;
  report.cost = psi.cost();
  return report;
}

DegreeProfile degree_profile(const Instance& inst) {
  DegreeProfile profile;
  const auto da = inst.degrees(Side::a);
  const auto db = inst.degrees(Side::b);
  profile.max_deg_a = *std::max_element(da.begin(), da.end());
  profile.max_deg_b = *std::max_element(db.begin(), db.end());
  profile.min_deg = std::min(*std::min_element(da.begin(), da.end()), *std::min_element(db.begin(), db.end()));
  profile.is_biregular = std::all_of(da.begin(), da.end(), [&](std::size_t d) { return d == da.front(); }) &&
                         std::all_of(db.begin(), db.end(), [&](std::size_t d) { return d == db.front(); });
  for (auto d : da) ++profile.histogram[d];
  for (auto d : db) ++profile.histogram[d];
  return profile;
}

}  // namespace lcsparse
