#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "braidcohom/dimension.hpp"
#include "braidcohom/invariant_cycles.hpp"

namespace braidcohom::cli {

enum class OutputFormat { csv, json, latex };

OutputFormat parse_format(std::string const &text);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  /// One line per check, "PASS name: detail" / "FAIL name: detail".
  std::string check_lines() const;
  /// Command echo, parameters, pass/fail totals and duration.
  std::string summary() const;
};

std::string render_table(DimTable const &table, OutputFormat format);
std::string render_basis(int n, int q, int degree, std::vector<FullInvariantSet> const &sets,
                         OutputFormat format);

/// Runs the tool on argv-style arguments (without the program name).
/// Returns 0 when every check passed, 1 on a check failure, 2 on usage
/// errors and refused runs.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace braidcohom::cli
