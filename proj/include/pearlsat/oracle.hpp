// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exhaustive reference procedures. They share nothing with the CNF
// transforms or the CDCL solver beyond the data types, which is what makes
// them usable as oracles for both.
//
// Each enumeration kernel comes as an OpenMP version and a `_serial`
// reference. Both walk the same index space (assignment number m, bit i of
// m is the value of the i-th listed variable) and must agree exactly.

#include "pearlsat/cnf.hpp"
#include "pearlsat/formula.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pearlsat::oracle {

/// Upper bound on the number of enumerated variables.
inline constexpr std::size_t kMaxEnumVars = 30;

/// Assignment binding vars[i] to bit i of `mask`.
Assignment assignment_from_mask(std::span<const VarId> vars, std::uint64_t mask);

/// Number of assignments over `vars` that satisfy `f`; `vars` must cover
/// vars(f).
std::uint64_t count_models(const Formula &f, std::span<const VarId> vars);
std::uint64_t count_models_serial(const Formula &f, std::span<const VarId> vars);

/// Truth-table satisfiability over variables 1..cnf.num_vars.
bool cnf_satisfiable(const Cnf &cnf);
bool cnf_satisfiable_serial(const Cnf &cnf);

/// Max / min of the LSB-first value of `vec` over all models of `cnf`;
/// nullopt when unsatisfiable. Enumerates 1..cnf.num_vars.
std::optional<std::uint64_t> max_value(const Cnf &cnf, std::span<const VarId> vec);
std::optional<std::uint64_t> max_value_serial(const Cnf &cnf, std::span<const VarId> vec);
std::optional<std::uint64_t> min_value(const Cnf &cnf, std::span<const VarId> vec);
std::optional<std::uint64_t> min_value_serial(const Cnf &cnf, std::span<const VarId> vec);

/// Largest number of `soft` formulas satisfiable together with `hard`,
/// enumerating `vars`; nullopt when `hard` has no model.
std::optional<std::uint64_t> max_satisfied(const Formula &hard,
                                           std::span<const Formula> soft,
                                           std::span<const VarId> vars);
std::optional<std::uint64_t> max_satisfied_serial(const Formula &hard,
                                                  std::span<const Formula> soft,
                                                  std::span<const VarId> vars);

/// Model count of `cnf` under the unit `assumptions`, over variables
/// 1..max(num_vars, assumption vars), by plain recursive splitting with
/// unit propagation. Slow but simple; meant for CNFs with a few dozen
/// variables where most get forced.
std::uint64_t count_cnf_models(const Cnf &cnf, std::span<const Literal> assumptions = {});
/// Same search, stopping at the first model.
bool cnf_satisfiable_by_splitting(const Cnf &cnf,
                                  std::span<const Literal> assumptions = {});

} // namespace pearlsat::oracle
