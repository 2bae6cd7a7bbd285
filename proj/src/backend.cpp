// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/sat.hpp"

#include "cdcl.hpp"
#include "pearlsat/errors.hpp"

#include <algorithm>
#include <string>

namespace pearlsat {
namespace {

void check_assumptions(std::span<const Literal> assumptions) {
  for (std::size_t i = 0; i < assumptions.size(); ++i) {
    if (!assumptions[i].var().valid())
      throw ContractViolation("assumption over variable 0");
    for (std::size_t j = 0; j < i; ++j)
      if (assumptions[j] == ~assumptions[i])
        throw ContractViolation("inconsistent assumptions on variable " +
                                std::to_string(assumptions[i].var().value));
  }
}

// A backend that claims SAT must hand back a model of the query.
void check_model(const SolveResult &r, const Cnf &cnf,
                 std::span<const Literal> assumptions) {
  if (!r.is_sat())
    return;
  const auto &m = r.model;
  for (std::uint32_t v = 1; v <= cnf.num_vars; ++v)
    if (!m.is_bound(VarId{v}))
      throw BackendError("model leaves variable " + std::to_string(v) +
                         " unassigned");
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const auto &c = cnf.clauses[i];
    bool ok = std::any_of(c.begin(), c.end(), [&](Literal l) {
      return m.is_bound(l.var()) && l.holds(m);
    });
    if (!ok)
      throw BackendError("model falsifies clause " + std::to_string(i + 1));
  }
  for (Literal l : assumptions)
    if (!m.is_bound(l.var()) || !l.holds(m))
      throw BackendError("model violates assumption " +
                         std::to_string(l.to_dimacs()));
}

} // namespace

void BackendConfig::validate() const {
  if (kind == Kind::External && external_path.empty())
    throw ContractViolation("external backend requires a solver path");
  if (kind == Kind::Embedded && !external_path.empty())
    throw ContractViolation("solver path given for the embedded backend");
}

SolveResult Backend::solve(const Cnf &cnf) { return solve_assuming(cnf, {}); }

SolveResult Backend::solve_assuming(const Cnf &cnf,
                                    std::span<const Literal> assumptions) {
  check_assumptions(assumptions);
  ++queries_;
  SolveResult r = run(cnf, assumptions);
  check_model(r, cnf, assumptions);
  return r;
}

bool Backend::sat(const Cnf &cnf) { return solve(cnf).is_sat(); }

bool Backend::sat_assuming(const Cnf &cnf, std::span<const Literal> assumptions) {
  return solve_assuming(cnf, assumptions).is_sat();
}

SolveResult EmbeddedBackend::run(const Cnf &cnf,
                                 std::span<const Literal> assumptions) {
  detail::Deadline deadline;
  if (time_limit_)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   *time_limit_);
  return detail::cdcl_solve(cnf, assumptions, deadline);
}

std::unique_ptr<Backend> make_backend(const BackendConfig &config) {
  config.validate();
  if (config.kind == BackendConfig::Kind::External)
    return std::make_unique<ExternalBackend>(config.external_path,
                                             config.time_limit);
  return std::make_unique<EmbeddedBackend>(config.time_limit);
}

SolveResult dpll_solve(const Cnf &cnf) { return detail::cdcl_solve(cnf, {}); }

} // namespace pearlsat
