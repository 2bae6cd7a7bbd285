// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pearlsat/cnf.hpp"
#include "pearlsat/formula.hpp"
#include "pearlsat/sat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pearlsat {

/// Result of maximize / minimize over an LSB-first objective vector.
struct OptOutcome {
  std::vector<VarId> vec;
  /// Fixed value of each objective bit, aligned with `vec`.
  std::vector<bool> bits;
  std::uint64_t optimum = 0;
  /// A model of the CNF agreeing with `bits`: the one returned by the last
  /// satisfiable probe.
  Assignment model;

  /// The fixed bits as unit literals, most significant first.
  std::vector<Literal> as_assumptions() const;
};

/// Greedy bitwise maximization. After one plain satisfiability check, walks
/// the bits from most to least significant, asks whether the bit can be 1
/// together with every bit fixed so far, and fixes 1 on success or 0 on
/// failure. Issues exactly vec.size() + 1 queries and never modifies `cnf`.
/// Returns nullopt when `cnf` is unsatisfiable. vec must be duplicate-free
/// and at most 64 bits wide.
std::optional<OptOutcome> maximize(std::span<const VarId> vec, const Cnf &cnf,
                                   Backend &backend);
/// Dual of maximize: tries 0 first.
std::optional<OptOutcome> minimize(std::span<const VarId> vec, const Cnf &cnf,
                                   Backend &backend);

struct PartialMaxSatResult {
  /// Total over the CNF's variables; satisfies the hard formula.
  Assignment model;
  /// Soft formulas true under `model`, counted by direct evaluation.
  std::uint64_t satisfied_count = 0;
  /// Output bits of the counting circuit (empty when there were no soft
  /// formulas).
  std::vector<VarId> counter_bits;
};

/// Satisfies `hard` while maximizing how many of `soft` hold: counts the
/// soft formulas with sum_bits, converts hard * circuit to CNF, maximizes
/// the counter, then solves once more with the counter fixed to obtain the
/// witness. sum_width(n) + 2 queries for n soft formulas, 1 when `soft` is
/// empty. Returns nullopt when `hard` is unsatisfiable.
std::optional<PartialMaxSatResult>
partial_max_sat(const Formula &hard, std::span<const Formula> soft, VarPool &pool,
                Backend &backend, Encoding encoding = Encoding::PlaistedGreenbaum);

} // namespace pearlsat
