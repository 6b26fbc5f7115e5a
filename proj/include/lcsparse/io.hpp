#pragma once

// Text formats for instances, labelings and multilabelings, and report writers.
//
// Instance file:
//   labelcover 1
//   sigma K
//   na NA
//   nb NB
//   e A B T0 T1 ... T(K-1)      (one line per edge)
// Lines starting with '#' and blank lines are ignored. Serialization emits
// edges in canonical order, single spaces, newline-terminated lines.
//
// Labeling file:      l SIDE INDEX SYMBOL        (every vertex exactly once)
// Multilabeling file: m SIDE INDEX S1,S2,...     ('-' for the empty set;
//                                                 unlisted vertices are empty)

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lcsparse/core.hpp"
#include "lcsparse/harness.hpp"
#include "lcsparse/reductions.hpp"

namespace lcsparse {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Labeling parse_labeling(std::string_view text, const Instance& inst);
std::string serialize_labeling(const Labeling& phi);

Multilabeling parse_multilabeling(std::string_view text, const Instance& inst);
std::string serialize_multilabeling(const Multilabeling& psi);

/// Shortest decimal text that round-trips the double.
std::string format_number(double x);

nlohmann::ordered_json report_to_json(const TrialReport& report);
std::string report_csv_header();
std::string report_csv_row(const TrialReport& report);

nlohmann::ordered_json sparsify_to_json(const SparsifyOutput& out, bool include_instances);
std::string sparsify_csv(const SparsifyOutput& out);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace lcsparse
