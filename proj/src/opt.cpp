// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/opt.hpp"

#include "pearlsat/adder.hpp"
#include "pearlsat/errors.hpp"

#include <algorithm>
#include <string>

namespace pearlsat {

std::vector<Literal> OptOutcome::as_assumptions() const {
  std::vector<Literal> out;
  out.reserve(vec.size());
  for (std::size_t i = vec.size(); i-- > 0;)
    out.emplace_back(vec[i], !bits[i]);
  return out;
}

namespace {

void check_objective(std::span<const VarId> vec) {
  if (vec.size() > 64)
    throw ContractViolation("objective vectors are limited to 64 bits");
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (!vec[i].valid())
      throw ContractViolation("objective bit over variable 0");
    if (std::find(vec.begin(), vec.begin() + static_cast<std::ptrdiff_t>(i),
                  vec[i]) != vec.begin() + static_cast<std::ptrdiff_t>(i))
      throw ContractViolation("objective vector repeats variable " +
                              std::to_string(vec[i].value));
  }
}

std::optional<OptOutcome> optimize(std::span<const VarId> vec, const Cnf &cnf,
                                   Backend &backend, bool prefer_one) {
  check_objective(vec);

  SolveResult first = backend.solve(cnf);
  if (!first.is_sat())
    return std::nullopt;

  OptOutcome out;
  out.vec.assign(vec.begin(), vec.end());
  out.bits.assign(vec.size(), false);
  Assignment witness = std::move(first.model);

  std::vector<Literal> fixed;
  fixed.reserve(vec.size());
  for (std::size_t i = vec.size(); i-- > 0;) {
    fixed.emplace_back(vec[i], !prefer_one);
    SolveResult probe = backend.solve_assuming(cnf, fixed);
    if (probe.is_sat()) {
      witness = std::move(probe.model);
    } else {
      fixed.back() = ~fixed.back();
    }
    out.bits[i] = !fixed.back().is_negative();

    // The fixed prefix stays satisfiable: the latest satisfiable probe
    // already agrees with it.
    for (Literal l : fixed)
      if (!witness.is_bound(l.var()) || !l.holds(witness))
        throw BackendError("bit fixing lost satisfiability at bit " +
                           std::to_string(i));
  }

  for (std::size_t i = vec.size(); i-- > 0;)
    out.optimum = (out.optimum << 1) | (out.bits[i] ? 1u : 0u);
  out.model = std::move(witness);
  return out;
}

} // namespace

std::optional<OptOutcome> maximize(std::span<const VarId> vec, const Cnf &cnf,
                                   Backend &backend) {
  return optimize(vec, cnf, backend, true);
}

std::optional<OptOutcome> minimize(std::span<const VarId> vec, const Cnf &cnf,
                                   Backend &backend) {
  return optimize(vec, cnf, backend, false);
}

std::optional<PartialMaxSatResult>
partial_max_sat(const Formula &hard, std::span<const Formula> soft, VarPool &pool,
                Backend &backend, Encoding encoding) {
  PartialMaxSatResult result;

  if (soft.empty()) {
    Cnf cnf = to_cnf(hard, pool, encoding);
    SolveResult r = backend.solve(cnf);
    if (!r.is_sat())
      return std::nullopt;
    result.model = std::move(r.model);
    return result;
  }

  Circuit counter = sum_bits(soft, pool);
  Cnf cnf = to_cnf(hard * counter.constraint, pool, encoding);

  auto best = maximize(counter.outputs, cnf, backend);
  if (!best)
    return std::nullopt;

  SolveResult witness = backend.solve_assuming(cnf, best->as_assumptions());
  if (!witness.is_sat())
    throw BackendError("solver rejected the optimum it had just confirmed");

  result.model = std::move(witness.model);
  result.counter_bits = counter.outputs;
  for (const auto &f : soft)
    result.satisfied_count += eval(f, result.model) ? 1 : 0;

  if (!eval(hard, result.model))
    throw BackendError("witness violates the hard formula");
  if (result.satisfied_count != best->optimum)
    throw BackendError("counter reports " + std::to_string(best->optimum) +
                       " satisfied soft formulas, evaluation finds " +
                       std::to_string(result.satisfied_count));
  return result;
}

} // namespace pearlsat
