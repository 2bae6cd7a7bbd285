// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pearlsat {

/// Raised when a caller breaks an operation's precondition (arity mismatch,
/// constant node handed to a CNF transform, mismatched adder widths, ...).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised by `eval` when the assignment does not bind a variable it needs.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `line` and `column` are 1-based; column 0 means
/// the error is attributed to the whole line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string &message, std::size_t line,
                            std::size_t column) {
    std::string where = "line " + std::to_string(line);
    if (column != 0)
      where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that asks for something the toolkit does not do
/// (weighted soft clauses, for instance).
class UnsupportedInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The SAT backend could not produce a verdict: missing executable, crash,
/// unparseable output.
class BackendError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The configured time limit elapsed before a verdict. Never an UNSAT answer.
class SolverTimeout : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pearlsat
