// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pearlsat {

/// Identifier of a propositional variable. Valid ids start at 1, which is
/// also the DIMACS index the variable gets on output.
struct VarId {
  std::uint32_t value = 0;

  constexpr bool valid() const noexcept { return value != 0; }
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

/// Allocates variable ids for one pipeline run. Named variables come from the
/// formula text; anonymous ones are Tseitin variables and adder wires.
/// Ids increase strictly and are never reused.
class VarPool {
public:
  /// Returns the id already bound to `name`, or allocates a new one.
  VarId intern(std::string_view name);
  VarId fresh();
  std::optional<VarId> lookup(std::string_view name) const;

  /// Empty for anonymous variables.
  std::string_view name(VarId v) const;
  /// `name(v)` when named, `_<id>` otherwise.
  std::string display_name(VarId v) const;

  /// Number of ids handed out so far; the largest valid id.
  std::uint32_t num_vars() const noexcept { return next_ - 1; }

  /// Named variables sorted by name.
  std::vector<std::pair<std::string, VarId>> named() const;

private:
  std::uint32_t next_ = 1;
  std::map<std::string, VarId, std::less<>> by_name_;
  std::vector<std::string> names_{std::string{}};
};

enum class Kind : std::uint8_t { Const, Var, Neg, And, Or, Iff, Xor, Ite };

/// Immutable propositional formula tree. Copies share structure, so a
/// Formula is cheap to pass by value and safe to hand between threads.
class Formula {
public:
  static Formula constant(bool value);
  static Formula var(VarId v);
  static Formula negation(Formula f);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  static Formula ite(Formula cond, Formula then_f, Formula else_f);

  Kind kind() const noexcept;
  bool is_const() const noexcept { return kind() == Kind::Const; }
  bool is_var() const noexcept { return kind() == Kind::Var; }
  /// Var, or a chain of negations over a Var.
  bool is_literal() const noexcept;

  /// Truth value of a Const node.
  bool value() const;
  /// Variable of a Var node.
  VarId var() const;
  std::size_t arity() const noexcept;
  const Formula &child(std::size_t i) const;
  std::span<const Formula> children() const noexcept;

  /// Structural equality.
  friend bool operator==(const Formula &lhs, const Formula &rhs);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Formula operator-(Formula f);
Formula operator*(Formula lhs, Formula rhs);
Formula operator+(Formula lhs, Formula rhs);
Formula iff(Formula lhs, Formula rhs);
Formula xor_of(Formula lhs, Formula rhs);
Formula ite(Formula cond, Formula then_f, Formula else_f);

/// A partial map from variables to truth values. When every variable of the
/// formula at hand is bound it serves as a total assignment.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::uint32_t num_vars);

  /// Grows the domain as needed.
  void set(VarId v, bool value);
  void unset(VarId v);
  bool is_bound(VarId v) const noexcept;
  /// Throws DomainError when `v` is unbound.
  bool value(VarId v) const;
  std::optional<bool> get(VarId v) const noexcept;

  /// Largest id the assignment has room for.
  std::uint32_t num_vars() const noexcept;

  friend bool operator==(const Assignment &, const Assignment &) = default;

private:
  std::vector<std::int8_t> values_{-1};
};

/// Number of nodes.
std::size_t size(const Formula &f);
/// Distinct variables in first-occurrence (pre-order, left to right) order.
std::vector<VarId> vars(const Formula &f);
/// Standard Boolean semantics. Ite(c,t,e) means c*t + -c*e.
bool eval(const Formula &f, const Assignment &a);

/// Removes every Const node except possibly the root, preserving the truth
/// value under all assignments.
Formula simplify_constants(const Formula &f);

/// Text in the formula DSL; `parse_formula(render(f))` rebuilds `f` exactly.
/// Every binary operand that is itself a binary node is parenthesized.
std::string render(const Formula &f, const VarPool &pool);

/// Balanced conjunction of `parts`; constant 1 when empty. Keeps tree depth
/// logarithmic for long lists (e.g. thousands of WCNF hard clauses).
Formula conjunction(std::span<const Formula> parts);
/// Balanced disjunction; constant 0 when empty.
Formula disjunction(std::span<const Formula> parts);

} // namespace pearlsat
