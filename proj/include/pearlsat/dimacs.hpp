// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pearlsat/cnf.hpp"
#include "pearlsat/sat.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pearlsat {

/// Writes `p cnf <vars> <clauses>` followed by one `lit ... 0` line per
/// clause. `comments` go first as `c <text>` lines. `extra_units` are
/// appended as unit clauses and counted in the header.
void write_dimacs(std::ostream &out, const Cnf &cnf,
                  std::span<const Literal> extra_units = {},
                  std::span<const std::string> comments = {});
std::string emit_dimacs(const Cnf &cnf, std::span<const std::string> comments = {});

/// Strict DIMACS CNF reader. `c` lines may appear anywhere, a `%` line ends
/// the input. The header's variable count is kept as num_vars; literals
/// beyond it, a clause count that disagrees with the header, or a clause
/// missing its terminating 0 are ParseErrors carrying the line number.
Cnf parse_dimacs(std::string_view text);

/// Unweighted partial MaxSAT instance.
struct WcnfProblem {
  std::uint32_t num_vars = 0;
  std::uint64_t top_weight = 0;
  std::vector<Clause> hard;
  std::vector<Clause> soft;
};

/// Reads `p wcnf <vars> <clauses> [<top>]` files, and the header-less
/// format with `h ... 0` hard lines and `<weight> ... 0` soft lines.
/// A clause is hard when its weight reaches top. Soft weights other than 1
/// throw UnsupportedInput.
WcnfProblem parse_wcnf(std::string_view text);

/// What a competition-style solver printed.
struct SolverReport {
  std::optional<SolveStatus> status;
  /// Literals from `v` lines; empty when none were printed.
  std::vector<Literal> values;
  bool has_values = false;
};

/// Parses `s SATISFIABLE` / `s UNSATISFIABLE` and `v` lines; other lines
/// are ignored. `s UNKNOWN` leaves status empty.
SolverReport parse_solver_output(std::string_view text);

/// Inverse of parse_solver_output for our own CLI.
void write_solver_output(std::ostream &out, const SolveResult &result,
                         std::uint32_t num_vars);

/// True when the text carries a `p cnf` header (as opposed to formula DSL).
bool looks_like_dimacs(std::string_view text);
/// True when the text carries a `p wcnf` header or `h` hard-clause lines.
bool looks_like_wcnf(std::string_view text);

} // namespace pearlsat
