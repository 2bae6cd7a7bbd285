// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pearlsat/formula.hpp"

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <vector>

namespace pearlsat {

/// A variable or its negation, stored as a signed DIMACS index.
class Literal {
public:
  constexpr Literal() = default;
  constexpr Literal(VarId v, bool negative)
      : code_(negative ? -static_cast<std::int32_t>(v.value)
                       : static_cast<std::int32_t>(v.value)) {}

  static constexpr Literal pos(VarId v) { return {v, false}; }
  static constexpr Literal neg(VarId v) { return {v, true}; }
  static Literal from_dimacs(std::int32_t code);

  constexpr VarId var() const noexcept {
    return VarId{static_cast<std::uint32_t>(code_ < 0 ? -code_ : code_)};
  }
  constexpr bool is_negative() const noexcept { return code_ < 0; }
  constexpr std::int32_t to_dimacs() const noexcept { return code_; }
  constexpr Literal operator~() const noexcept {
    Literal l;
    l.code_ = -code_;
    return l;
  }
  /// True when the literal holds under `a`; `a` must bind var().
  bool holds(const Assignment &a) const { return a.value(var()) != is_negative(); }

  friend constexpr auto operator<=>(Literal, Literal) = default;

private:
  std::int32_t code_ = 0;
};

/// Disjunction of literals. Duplicate literals are dropped on construction
/// (first occurrence kept); tautologies are kept and can be queried.
class Clause {
public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits);
  explicit Clause(std::vector<Literal> lits);

  std::span<const Literal> literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }
  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.end(); }
  const Literal &operator[](std::size_t i) const { return lits_[i]; }

  bool is_tautology() const;
  bool satisfied_by(const Assignment &a) const;

  friend bool operator==(const Clause &, const Clause &) = default;

private:
  std::vector<Literal> lits_;
};

struct Cnf {
  std::vector<Clause> clauses;
  /// Every literal's variable id is at most num_vars.
  std::uint32_t num_vars = 0;

  std::size_t literal_count() const noexcept;
  bool satisfied_by(const Assignment &a) const;
  friend bool operator==(const Cnf &, const Cnf &) = default;
};

enum class Polarity : std::uint8_t { Positive, Negative, Both };

constexpr Polarity flip(Polarity p) noexcept {
  return p == Polarity::Positive   ? Polarity::Negative
         : p == Polarity::Negative ? Polarity::Positive
                                   : Polarity::Both;
}

/// Polarity of a node reached under both `a` and `b`.
constexpr Polarity meet(Polarity a, Polarity b) noexcept {
  return a == b ? a : Polarity::Both;
}

enum class GateKind : std::uint8_t { And, Or, Iff, Xor, Ite };

/// Clauses tying the gate output `out` to `kind` applied to `ins`.
/// Positive gives out -> gate(ins), Negative gives gate(ins) -> out, Both the
/// union (positive first). Within a clause the output literal comes first,
/// then inputs in child order. Ite inputs are (cond, then, else).
/// Throws ContractViolation when ins.size() does not match the gate arity.
std::vector<Clause> clause_gate_table(GateKind kind, Polarity polarity,
                                      Literal out, std::span<const Literal> ins);

/// Tseitin transformation: one fresh variable per internal node with the
/// full bi-implication, plus the unit clause asserting the root.
///
/// Negation never allocates a variable; it flips the child's literal. A root
/// that is a literal is asserted directly; root constant 1 gives no clauses,
/// constant 0 a single empty clause. Any other Const node is a
/// ContractViolation, so run simplify_constants first. Fresh variables are
/// allocated in post-order and the root unit clause is listed first.
Cnf transform_tseitin(const Formula &f, VarPool &pool);

/// Polarity-aware (Plaisted-Greenbaum) variant of transform_tseitin: a node
/// only reached positively gets the out -> gate clauses, only negatively the
/// gate -> out clauses. Equisatisfiable with `f`, and every model restricted
/// to vars(f) satisfies `f`.
Cnf transform_pg(const Formula &f, VarPool &pool);

enum class Encoding : std::uint8_t { PlaistedGreenbaum, Tseitin };

/// simplify_constants followed by the chosen transform.
Cnf to_cnf(const Formula &f, VarPool &pool,
           Encoding encoding = Encoding::PlaistedGreenbaum);

} // namespace pearlsat
