#include "lcsparse/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lcsparse {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::size_t to_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed integer '" + std::string(token) + "', line " + std::to_string(line), line);
  }
  return value;
}

std::size_t header_value(const std::vector<Line>& lines, std::size_t k, std::string_view key) {
  if (k >= lines.size()) throw ParseError("missing '" + std::string(key) + "' line", 0);
  const auto& line = lines[k];
  if (line.tokens.size() != 2 || line.tokens[0] != key) {
    throw ParseError("expected '" + std::string(key) + " VALUE', line " + std::to_string(line.number), line.number);
  }
  return to_count(line.tokens[1], line.number);
}

Side parse_side(std::string_view token, std::size_t line) {
  if (token == "a") return Side::a;
  if (token == "b") return Side::b;
  throw ParseError("side must be 'a' or 'b', line " + std::to_string(line), line);
}

std::size_t side_size(const Instance& inst, Side side) { return side == Side::a ? inst.n_a() : inst.n_b(); }

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty instance file", 0);
  const auto& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "labelcover") {
    throw ParseError("expected header 'labelcover 1', line " + std::to_string(head.number), head.number);
  }
  if (head.tokens[1] != "1") {
    throw ParseError("unsupported format version " + std::string(head.tokens[1]) + ", line " + std::to_string(head.number),
                     head.number);
  }

  RawInstance raw;
  raw.sigma = header_value(lines, 1, "sigma");
  raw.n_a = header_value(lines, 2, "na");
  raw.n_b = header_value(lines, 3, "nb");

  std::vector<std::size_t> edge_lines;
  for (std::size_t k = 4; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const std::string where = ", line " + std::to_string(line.number);
    if (line.tokens[0] != "e") throw ParseError("unexpected record '" + std::string(line.tokens[0]) + "'" + where, line.number);
    if (line.tokens.size() != 3 + raw.sigma) {
      throw ParseError("edge line needs 2 indices and " + std::to_string(raw.sigma) + " table entries" + where,
                       line.number);
    }
    RawEdge edge;
    edge.a = to_count(line.tokens[1], line.number);
    edge.b = to_count(line.tokens[2], line.number);
    if (edge.a >= raw.n_a) throw ParseError("a index out of range" + where, line.number);
    if (edge.b >= raw.n_b) throw ParseError("b index out of range" + where, line.number);
    for (std::size_t s = 0; s < raw.sigma; ++s) {
      const std::size_t v = to_count(line.tokens[3 + s], line.number);
      if (v >= raw.sigma) throw ParseError("table entry out of alphabet" + where, line.number);
      edge.table.push_back(static_cast<Symbol>(v));
    }
    raw.edges.push_back(std::move(edge));
    edge_lines.push_back(line.number);
  }

  auto result = validate_instance(std::move(raw));
  if (!result.instance) {
    const auto& issue = result.issues.front();
    const std::size_t line = issue.edge ? edge_lines[*issue.edge] : 0;
    throw ParseError(issue.message + (line ? ", line " + std::to_string(line) : std::string()), line);
  }
  return std::move(*result.instance);
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "labelcover 1\nsigma " + std::to_string(inst.sigma()) + "\nna " + std::to_string(inst.n_a()) +
                    "\nnb " + std::to_string(inst.n_b()) + "\n";
  for (std::size_t i = 0; i < inst.edge_count(); ++i) {
    const auto e = inst.edge(i);
    out += "e " + std::to_string(e.a) + " " + std::to_string(e.b);
    for (Symbol s : e.table) {
      out += ' ';
      out += std::to_string(s);
    }
    out += '\n';
  }
  return out;
}

Labeling parse_labeling(std::string_view text, const Instance& inst) {
  Labeling phi = Labeling::constant(inst, 0);
  std::vector<bool> seen_a(inst.n_a(), false), seen_b(inst.n_b(), false);
  for (const auto& line : content_lines(text)) {
    const std::string where = ", line " + std::to_string(line.number);
    if (line.tokens.size() != 4 || line.tokens[0] != "l") throw ParseError("expected 'l SIDE INDEX SYMBOL'" + where, line.number);
    const Side side = parse_side(line.tokens[1], line.number);
    const std::size_t v = to_count(line.tokens[2], line.number);
    const std::size_t s = to_count(line.tokens[3], line.number);
    if (v >= side_size(inst, side)) throw ParseError("vertex index out of range" + where, line.number);
    if (s >= inst.sigma()) throw ParseError("symbol outside alphabet" + where, line.number);
    auto& seen = side == Side::a ? seen_a : seen_b;
    if (seen[v]) throw ParseError("vertex labeled twice" + where, line.number);
    seen[v] = true;
    phi.at(side, v) = static_cast<Symbol>(s);
  }
  for (Side side : {Side::a, Side::b}) {
    const auto& seen = side == Side::a ? seen_a : seen_b;
    for (std::size_t v = 0; v < seen.size(); ++v) {
      if (!seen[v]) throw ParseError(std::string("missing label for vertex ") + side_char(side) + " " + std::to_string(v), 0);
    }
  }
  return phi;
}

std::string serialize_labeling(const Labeling& phi) {
  std::string out;
  for (std::size_t v = 0; v < phi.labels_a.size(); ++v) out += "l a " + std::to_string(v) + " " + std::to_string(phi.labels_a[v]) + "\n";
  for (std::size_t v = 0; v < phi.labels_b.size(); ++v) out += "l b " + std::to_string(v) + " " + std::to_string(phi.labels_b[v]) + "\n";
  return out;
}

Multilabeling parse_multilabeling(std::string_view text, const Instance& inst) {
  Multilabeling psi = Multilabeling::empty_for(inst);
  std::vector<bool> seen_a(inst.n_a(), false), seen_b(inst.n_b(), false);
  for (const auto& line : content_lines(text)) {
    const std::string where = ", line " + std::to_string(line.number);
    if (line.tokens.size() != 4 || line.tokens[0] != "m") throw ParseError("expected 'm SIDE INDEX S1,S2,...'" + where, line.number);
    const Side side = parse_side(line.tokens[1], line.number);
    const std::size_t v = to_count(line.tokens[2], line.number);
    if (v >= side_size(inst, side)) throw ParseError("vertex index out of range" + where, line.number);
    auto& seen = side == Side::a ? seen_a : seen_b;
    if (seen[v]) throw ParseError("vertex listed twice" + where, line.number);
    seen[v] = true;

    std::vector<Symbol> symbols;
    const std::string_view list = line.tokens[3];
    if (list != "-") {
      std::size_t pos = 0;
      while (pos <= list.size()) {
        const std::size_t comma = std::min(list.find(',', pos), list.size());
        const std::size_t s = to_count(list.substr(pos, comma - pos), line.number);
        if (s >= inst.sigma()) throw ParseError("symbol outside alphabet" + where, line.number);
        symbols.push_back(static_cast<Symbol>(s));
        if (comma == list.size()) break;
        pos = comma + 1;
      }
    }
    psi.assign(side, v, std::move(symbols));
  }
  return psi;
}

std::string serialize_multilabeling(const Multilabeling& psi) {
  std::string out;
  for (Side side : {Side::a, Side::b}) {
    const std::size_t n = side == Side::a ? psi.n_a() : psi.n_b();
    for (std::size_t v = 0; v < n; ++v) {
      out += "m ";
      out += side_char(side);
      out += " " + std::to_string(v) + " ";
      const auto& set = psi.set(side, v);
      if (set.empty()) out += "-";
      for (std::size_t k = 0; k < set.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(set[k]);
      }
      out += '\n';
    }
  }
  return out;
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

nlohmann::ordered_json report_to_json(const TrialReport& report) {
  nlohmann::ordered_json j;
  j["experiment"] = report.experiment;
  j["trials"] = report.trials;
  j["discarded"] = report.discarded;
  j["statistic"] = report.statistic;
  j["mean"] = report.mean;
  j["variance"] = report.variance;
  j["threshold"] = report.threshold;
  j["success_count"] = report.success_count;
  j["frequency"] = report.frequency();
  j["claim_probability"] = report.claim_probability ? nlohmann::ordered_json(*report.claim_probability) : nullptr;
  j["frequency_radius"] = report.frequency_radius();
  j["oracle_value"] = report.oracle_value ? nlohmann::ordered_json(*report.oracle_value) : nullptr;
  j["oracle_variance"] = report.oracle_variance ? nlohmann::ordered_json(*report.oracle_variance) : nullptr;
  j["oracle_radius"] = report.oracle_radius();
  auto checks = nlohmann::ordered_json::object();
  for (const auto& c : report.checks) checks[c.name] = c.violations;
  j["check_violations"] = checks;
  auto details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.details) details[k] = v;
  j["details"] = details;
  j["notes"] = report.notes;
  if (!report.rows.empty()) {
    j["row_columns"] = report.row_columns;
    j["rows"] = report.rows;
  }
  j["frequency_pass"] = report.frequency_pass();
  j["oracle_pass"] = report.oracle_pass();
  j["pass"] = report.pass();
  return j;
}

std::string report_csv_header() { return "experiment,trials,statistic,mean,variance,threshold,frequency,oracle_value,pass\n"; }

std::string report_csv_row(const TrialReport& report) {
  std::ostringstream os;
  os << report.experiment << ',' << report.trials << ',' << report.statistic << ',' << format_number(report.mean) << ','
     << format_number(report.variance) << ',' << format_number(report.threshold) << ','
     << format_number(report.frequency()) << ',' << (report.oracle_value ? format_number(*report.oracle_value) : "") << ','
     << (report.pass() ? "true" : "false") << '\n';
  return os.str();
}

nlohmann::ordered_json sparsify_to_json(const SparsifyOutput& out, bool include_instances) {
  nlohmann::ordered_json j;
  const auto& p = out.params;
  j["params"] = {{"delta", p.delta}, {"p", p.p},         {"c_delta", p.c_delta},         {"c_p", p.c_p},
                 {"gamma", p.gamma}, {"degree", p.degree}, {"guard_ratio", p.guard_ratio}, {"trim_slack", p.trim_slack}};
  j["intermediate_edges"] = out.intermediate.edge_count();
  j["trimmed_edges"] = out.trimmed.edge_count();
  j["removed_edges"] = out.removed_edges;
  j["trimmed_vertices_a"] = out.trimmed_vertices_a;
  j["trimmed_vertices_b"] = out.trimmed_vertices_b;
  j["max_degree"] = degree_profile(out.trimmed).max_degree();
  if (include_instances) {
    j["intermediate"] = serialize_instance(out.intermediate);
    j["trimmed"] = serialize_instance(out.trimmed);
  }
  return j;
}

std::string sparsify_csv(const SparsifyOutput& out) {
  const auto& p = out.params;
  std::ostringstream os;
  os << "delta,p,c_delta,c_p,gamma,degree,guard_ratio,intermediate_edges,trimmed_edges,removed_edges,"
        "trimmed_vertices_a,trimmed_vertices_b,max_degree\n";
  os << p.delta << ',' << format_number(p.p) << ',' << format_number(p.c_delta) << ',' << format_number(p.c_p) << ','
     << format_number(p.gamma) << ',' << p.degree << ',' << format_number(p.guard_ratio) << ','
     << out.intermediate.edge_count() << ',' << out.trimmed.edge_count() << ',' << out.removed_edges << ','
     << out.trimmed_vertices_a << ',' << out.trimmed_vertices_b << ',' << degree_profile(out.trimmed).max_degree() << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace lcsparse
