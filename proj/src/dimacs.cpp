// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/dimacs.hpp"

#include "pearlsat/errors.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

namespace pearlsat {

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

void write_dimacs(std::ostream &out, const Cnf &cnf,
                  std::span<const Literal> extra_units,
                  std::span<const std::string> comments) {
  for (const auto &c : comments)
    out << "c " << c << '\n';
  std::uint32_t num_vars = cnf.num_vars;
  for (Literal l : extra_units)
    num_vars = std::max(num_vars, l.var().value);
  out << "p cnf " << num_vars << ' ' << cnf.clauses.size() + extra_units.size()
      << '\n';
  for (const auto &clause : cnf.clauses) {
    for (Literal l : clause)
      out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  for (Literal l : extra_units)
    out << l.to_dimacs() << " 0\n";
}

std::string emit_dimacs(const Cnf &cnf, std::span<const std::string> comments) {
  std::ostringstream out;
  write_dimacs(out, cnf, {}, comments);
  return out.str();
}

void write_solver_output(std::ostream &out, const SolveResult &result,
                         std::uint32_t num_vars) {
  if (!result.is_sat()) {
    out << "s UNSATISFIABLE\n";
    return;
  }
  out << "s SATISFIABLE\n";
  constexpr std::uint32_t kPerLine = 20;
  out << 'v';
  for (std::uint32_t v = 1; v <= num_vars; ++v) {
    bool value = result.model.get(VarId{v}).value_or(false);
    out << ' ' << (value ? "" : "-") << v;
    if (v % kPerLine == 0 && v != num_vars)
      out << "\nv";
  }
  out << " 0\n";
}

// ---------------------------------------------------------------------------
// Reading
// ---------------------------------------------------------------------------

namespace {

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  return s;
}

// Calls fn(line, line_number) for every line of text.
template <typename Fn> void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (!fn(text.substr(0, nl), line_no))
      return;
    if (nl == std::string_view::npos)
      return;
    text.remove_prefix(nl + 1);
    ++line_no;
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  line = trim_left(line);
  while (!line.empty()) {
    std::size_t end = 0;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r')
      ++end;
    out.push_back(line.substr(0, end));
    line = trim_left(line.substr(end));
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line, const char *what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'",
                     line, 0);
  return value;
}

Literal checked_literal(std::int64_t code, std::uint32_t num_vars,
                        std::size_t line) {
  std::int64_t index = code < 0 ? -code : code;
  if (index > num_vars)
    throw ParseError("literal " + std::to_string(code) +
                         " exceeds the declared variable count " +
                         std::to_string(num_vars),
                     line, 0);
  return Literal::from_dimacs(static_cast<std::int32_t>(code));
}

bool is_comment(std::string_view trimmed) {
  return trimmed.empty() || trimmed.front() == 'c';
}

} // namespace

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool have_header = false;
  std::size_t header_line = 0;
  std::uint64_t declared_clauses = 0;
  std::vector<Literal> current;
  std::size_t last_line = 0;

  for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
    auto line = trim_left(raw);
    if (is_comment(line))
      return true;
    if (line.front() == '%')
      return false;
    if (line.front() == 'p') {
      if (have_header)
        throw ParseError("duplicate problem header", line_no, 0);
      auto tok = split_ws(line);
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "cnf")
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'",
                         line_no, 0);
      cnf.num_vars = parse_int<std::uint32_t>(tok[2], line_no, "variable count");
      declared_clauses = parse_int<std::uint64_t>(tok[3], line_no, "clause count");
      if (cnf.num_vars > static_cast<std::uint32_t>(
                             std::numeric_limits<std::int32_t>::max()))
        throw ParseError("variable count too large", line_no, 0);
      have_header = true;
      header_line = line_no;
      return true;
    }
    if (!have_header)
      throw ParseError("clause before the 'p cnf' header", line_no, 0);
    for (auto tok : split_ws(line)) {
      auto code = parse_int<std::int64_t>(tok, line_no, "literal");
      if (code == 0) {
        if (cnf.clauses.size() == declared_clauses)
          throw ParseError("more clauses than the " + std::to_string(declared_clauses) +
                               " declared in the header",
                           line_no, 0);
        cnf.clauses.emplace_back(std::move(current));
        current.clear();
      } else {
        current.push_back(checked_literal(code, cnf.num_vars, line_no));
      }
    }
    last_line = line_no;
    return true;
  });

  if (!have_header)
    throw ParseError("missing 'p cnf' header", 1, 0);
  if (!current.empty())
    throw ParseError("clause not terminated by 0", last_line, 0);
  if (cnf.clauses.size() != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(cnf.clauses.size()),
                     header_line, 0);
  return cnf;
}

WcnfProblem parse_wcnf(std::string_view text) {
  WcnfProblem problem;
  bool have_header = false;
  bool headerless = false;
  std::size_t header_line = 0;
  std::uint64_t declared_clauses = 0;
  std::uint32_t num_vars = std::numeric_limits<std::int32_t>::max();

  // Per clause: weight (or "h") first, then literals up to 0.
  bool in_clause = false;
  bool hard = false;
  std::vector<Literal> current;
  std::size_t last_line = 0;
  std::uint32_t max_index = 0;

  for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
    auto line = trim_left(raw);
    if (is_comment(line))
      return true;
    if (line.front() == '%')
      return false;
    if (line.front() == 'p') {
      if (have_header || headerless)
        throw ParseError("unexpected problem header", line_no, 0);
      auto tok = split_ws(line);
      if ((tok.size() != 4 && tok.size() != 5) || tok[0] != "p" || tok[1] != "wcnf")
        throw ParseError(
            "malformed header, expected 'p wcnf <vars> <clauses> [<top>]'",
            line_no, 0);
      num_vars = parse_int<std::uint32_t>(tok[2], line_no, "variable count");
      declared_clauses = parse_int<std::uint64_t>(tok[3], line_no, "clause count");
      problem.top_weight =
          tok.size() == 5 ? parse_int<std::uint64_t>(tok[4], line_no, "top weight")
                          : std::numeric_limits<std::uint64_t>::max();
      have_header = true;
      header_line = line_no;
      return true;
    }
    if (!have_header)
      headerless = true;
    for (auto tok : split_ws(line)) {
      if (!in_clause) {
        if (tok == "h") {
          if (have_header)
            throw ParseError("'h' clause marker in a file with a 'p wcnf' header",
                             line_no, 0);
          hard = true;
        } else {
          auto weight = parse_int<std::uint64_t>(tok, line_no, "weight");
          if (weight == 0)
            throw ParseError("clause weight must be positive", line_no, 0);
          hard = have_header && weight >= problem.top_weight;
          if (!hard && weight != 1)
            throw UnsupportedInput("line " + std::to_string(line_no) +
                                   ": soft clause weight " + std::to_string(weight) +
                                   " is not supported (only weight 1)");
        }
        in_clause = true;
        continue;
      }
      auto code = parse_int<std::int64_t>(tok, line_no, "literal");
      if (code == 0) {
        (hard ? problem.hard : problem.soft).emplace_back(std::move(current));
        current.clear();
        in_clause = false;
      } else {
        Literal l = checked_literal(code, num_vars, line_no);
        max_index = std::max(max_index, l.var().value);
        current.push_back(l);
      }
    }
    last_line = line_no;
    return true;
  });

  if (in_clause)
    throw ParseError("clause not terminated by 0", last_line, 0);
  if (have_header) {
    problem.num_vars = num_vars;
    auto found = problem.hard.size() + problem.soft.size();
    if (found != declared_clauses)
      throw ParseError("header declares " + std::to_string(declared_clauses) +
                           " clauses, found " + std::to_string(found),
                       header_line, 0);
  } else {
    if (!headerless)
      throw ParseError("empty WCNF input", 1, 0);
    problem.num_vars = max_index;
    problem.top_weight = std::numeric_limits<std::uint64_t>::max();
  }
  return problem;
}

SolverReport parse_solver_output(std::string_view text) {
  SolverReport report;
  for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
    auto line = trim_left(raw);
    if (line.starts_with("s ")) {
      auto word = split_ws(line.substr(2));
      if (!word.empty() && word[0] == "SATISFIABLE")
        report.status = SolveStatus::Sat;
      else if (!word.empty() && word[0] == "UNSATISFIABLE")
        report.status = SolveStatus::Unsat;
    } else if (line.starts_with("v ") || line == "v") {
      report.has_values = true;
      for (auto tok : split_ws(line.substr(1))) {
        auto code = parse_int<std::int64_t>(tok, line_no, "model literal");
        if (code == 0)
          break;
        if (code > std::numeric_limits<std::int32_t>::max() ||
            code < -std::numeric_limits<std::int32_t>::max())
          throw ParseError("model literal out of range", line_no, 0);
        report.values.push_back(Literal::from_dimacs(static_cast<std::int32_t>(code)));
      }
    }
    return true;
  });
  return report;
}

namespace {

bool any_line(std::string_view text, bool (*pred)(const std::vector<std::string_view> &)) {
  bool found = false;
  for_each_line(text, [&](std::string_view raw, std::size_t) {
    auto line = trim_left(raw);
    if (!line.empty() && line.front() != 'c' && pred(split_ws(line)))
      found = true;
    return !found;
  });
  return found;
}

} // namespace

bool looks_like_dimacs(std::string_view text) {
  return any_line(text, [](const std::vector<std::string_view> &tok) {
    return tok.size() >= 2 && tok[0] == "p" && tok[1] == "cnf";
  });
}

namespace {

bool is_integer(std::string_view token) {
  std::int64_t value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

} // namespace

bool looks_like_wcnf(std::string_view text) {
  return any_line(text, [](const std::vector<std::string_view> &tok) {
    return (tok.size() >= 2 && tok[0] == "p" && tok[1] == "wcnf") ||
           (tok.size() >= 2 && tok[0] == "h" && is_integer(tok.back()));
  });
}

} // namespace pearlsat
