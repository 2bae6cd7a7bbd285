// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pearlsat/cnf.hpp"
#include "pearlsat/formula.hpp"

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pearlsat {

enum class SolveStatus : std::uint8_t { Sat, Unsat };

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  /// Binds every variable 1..num_vars of the queried CNF (and every
  /// assumption variable) when status is Sat; empty otherwise.
  Assignment model;

  bool is_sat() const noexcept { return status == SolveStatus::Sat; }

  static SolveResult sat(Assignment model) {
    return {SolveStatus::Sat, std::move(model)};
  }
  static SolveResult unsat() { return {}; }
};

struct BackendConfig {
  enum class Kind : std::uint8_t { Embedded, External };

  Kind kind = Kind::Embedded;
  /// Solver executable; required for (and only for) External.
  std::string external_path;
  std::optional<std::chrono::duration<double>> time_limit;

  /// Throws ContractViolation if external_path is set inconsistently.
  void validate() const;
};

/// SAT oracle. Every solve-like call is one query and bumps `queries()`.
/// An instance serves one thread at a time; use separate instances for
/// concurrent work.
class Backend {
public:
  virtual ~Backend() = default;

  /// Model-producing query.
  SolveResult solve(const Cnf &cnf);
  /// `cnf` conjoined with the unit clauses of `assumptions`.
  SolveResult solve_assuming(const Cnf &cnf, std::span<const Literal> assumptions);
  /// Verdict only; the model is discarded.
  bool sat(const Cnf &cnf);
  bool sat_assuming(const Cnf &cnf, std::span<const Literal> assumptions);

  std::size_t queries() const noexcept { return queries_; }
  void reset_queries() noexcept { queries_ = 0; }

protected:
  /// Assumptions arrive validated (no variable with both signs).
  virtual SolveResult run(const Cnf &cnf, std::span<const Literal> assumptions) = 0;

private:
  std::size_t queries_ = 0;
};

/// In-process CDCL solver. Deterministic: branches on the most active
/// unassigned variable that occurs in a clause (lowest index on ties, so
/// the first decision is the lowest-numbered one), tries true first,
/// restarts on a Luby schedule, and assigns false to variables that occur
/// nowhere.
class EmbeddedBackend final : public Backend {
public:
  EmbeddedBackend() = default;
  explicit EmbeddedBackend(std::optional<std::chrono::duration<double>> time_limit)
      : time_limit_(time_limit) {}

protected:
  SolveResult run(const Cnf &cnf, std::span<const Literal> assumptions) override;

private:
  std::optional<std::chrono::duration<double>> time_limit_;
};

/// Runs an external DIMACS solver, one child process per query:
/// `<path> <tmpfile.cnf>`. Assumptions become appended unit clauses. The
/// solver must report on stdout with `s`/`v` lines, or at least exit with
/// 10 (SAT) / 20 (UNSAT); a SAT verdict without a model is a BackendError.
class ExternalBackend final : public Backend {
public:
  explicit ExternalBackend(std::string path,
                           std::optional<std::chrono::duration<double>> time_limit = {});

  const std::string &path() const noexcept { return path_; }

protected:
  SolveResult run(const Cnf &cnf, std::span<const Literal> assumptions) override;

private:
  std::string path_;
  std::optional<std::chrono::duration<double>> time_limit_;
};

std::unique_ptr<Backend> make_backend(const BackendConfig &config);

/// The embedded solver's core: complete, deterministic, no time limit.
SolveResult dpll_solve(const Cnf &cnf);

/// Solves independent instances, one embedded solver per instance, spread
/// over OpenMP threads. Results are positionally aligned with `problems`
/// and identical to solve_batch_serial.
std::vector<SolveResult> solve_batch(std::span<const Cnf> problems);
std::vector<SolveResult> solve_batch_serial(std::span<const Cnf> problems);

} // namespace pearlsat
