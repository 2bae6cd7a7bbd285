// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/formula.hpp"

#include "pearlsat/errors.hpp"

#include <algorithm>
#include <cassert>

namespace pearlsat {

// ---------------------------------------------------------------------------
// VarPool
// ---------------------------------------------------------------------------

VarId VarPool::intern(std::string_view name) {
  if (auto it = by_name_.find(name); it != by_name_.end())
    return it->second;
  VarId v = fresh();
  names_[v.value] = std::string(name);
  by_name_.emplace(std::string(name), v);
  return v;
}

VarId VarPool::fresh() {
  VarId v{next_++};
  names_.emplace_back();
  return v;
}

std::optional<VarId> VarPool::lookup(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end())
    return it->second;
  return std::nullopt;
}

std::string_view VarPool::name(VarId v) const {
  if (v.value >= names_.size())
    return {};
  return names_[v.value];
}

std::string VarPool::display_name(VarId v) const {
  auto n = name(v);
  if (!n.empty())
    return std::string(n);
  return "_" + std::to_string(v.value);
}

std::vector<std::pair<std::string, VarId>> VarPool::named() const {
  return {by_name_.begin(), by_name_.end()};
}

// ---------------------------------------------------------------------------
// Formula
// ---------------------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  bool value = false;
  VarId var{};
  std::vector<Formula> children;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::constant(bool value) {
  static const Formula kFalse{
      std::make_shared<const Node>(Node{Kind::Const, false, {}, {}})};
  static const Formula kTrue{
      std::make_shared<const Node>(Node{Kind::Const, true, {}, {}})};
  return value ? kTrue : kFalse;
}

Formula Formula::var(VarId v) {
  if (!v.valid())
    throw ContractViolation("Formula::var: invalid variable id 0");
  return Formula{std::make_shared<const Node>(Node{Kind::Var, false, v, {}})};
}

Formula Formula::negation(Formula f) {
  return Formula{std::make_shared<const Node>(
      Node{Kind::Neg, false, {}, {std::move(f)}})};
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  switch (kind) {
  case Kind::And:
  case Kind::Or:
  case Kind::Iff:
  case Kind::Xor:
    break;
  default:
    throw ContractViolation("Formula::binary: not a binary connective");
  }
  return Formula{std::make_shared<const Node>(
      Node{kind, false, {}, {std::move(lhs), std::move(rhs)}})};
}

Formula Formula::ite(Formula cond, Formula then_f, Formula else_f) {
  return Formula{std::make_shared<const Node>(Node{
      Kind::Ite, false, {}, {std::move(cond), std::move(then_f), std::move(else_f)}})};
}

Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_literal() const noexcept {
  const Formula *f = this;
  while (f->kind() == Kind::Neg)
    f = &f->child(0);
  return f->kind() == Kind::Var;
}

bool Formula::value() const {
  if (node_->kind != Kind::Const)
    throw ContractViolation("Formula::value: not a constant");
  return node_->value;
}

VarId Formula::var() const {
  if (node_->kind != Kind::Var)
    throw ContractViolation("Formula::var: not a variable");
  return node_->var;
}

std::size_t Formula::arity() const noexcept { return node_->children.size(); }

const Formula &Formula::child(std::size_t i) const {
  assert(i < node_->children.size());
  return node_->children[i];
}

std::span<const Formula> Formula::children() const noexcept {
  return node_->children;
}

bool operator==(const Formula &lhs, const Formula &rhs) {
  if (lhs.node_ == rhs.node_)
    return true;
  const auto &a = *lhs.node_;
  const auto &b = *rhs.node_;
  if (a.kind != b.kind)
    return false;
  if (a.kind == Kind::Const)
    return a.value == b.value;
  if (a.kind == Kind::Var)
    return a.var == b.var;
  return std::equal(a.children.begin(), a.children.end(), b.children.begin(),
                    b.children.end());
}

Formula operator-(Formula f) { return Formula::negation(std::move(f)); }
Formula operator*(Formula lhs, Formula rhs) {
  return Formula::binary(Kind::And, std::move(lhs), std::move(rhs));
}
Formula operator+(Formula lhs, Formula rhs) {
  return Formula::binary(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula iff(Formula lhs, Formula rhs) {
  return Formula::binary(Kind::Iff, std::move(lhs), std::move(rhs));
}
Formula xor_of(Formula lhs, Formula rhs) {
  return Formula::binary(Kind::Xor, std::move(lhs), std::move(rhs));
}
Formula ite(Formula cond, Formula then_f, Formula else_f) {
  return Formula::ite(std::move(cond), std::move(then_f), std::move(else_f));
}

// ---------------------------------------------------------------------------
// Assignment
// ---------------------------------------------------------------------------

Assignment::Assignment(std::uint32_t num_vars) : values_(num_vars + 1, -1) {}

void Assignment::set(VarId v, bool value) {
  if (!v.valid())
    throw ContractViolation("Assignment::set: invalid variable id 0");
  if (v.value >= values_.size())
    values_.resize(v.value + 1, -1);
  values_[v.value] = value ? 1 : 0;
}

void Assignment::unset(VarId v) {
  if (v.value < values_.size())
    values_[v.value] = -1;
}

bool Assignment::is_bound(VarId v) const noexcept {
  return v.valid() && v.value < values_.size() && values_[v.value] >= 0;
}

bool Assignment::value(VarId v) const {
  if (!is_bound(v))
    throw DomainError("variable " + std::to_string(v.value) +
                      " is not bound by the assignment");
  return values_[v.value] == 1;
}

std::optional<bool> Assignment::get(VarId v) const noexcept {
  if (!is_bound(v))
    return std::nullopt;
  return values_[v.value] == 1;
}

std::uint32_t Assignment::num_vars() const noexcept {
  return static_cast<std::uint32_t>(values_.size() - 1);
}

// ---------------------------------------------------------------------------
// Traversals
// ---------------------------------------------------------------------------

std::size_t size(const Formula &f) {
  std::size_t n = 1;
  for (const auto &c : f.children())
    n += size(c);
  return n;
}

namespace {

void collect_vars(const Formula &f, std::vector<VarId> &out,
                  std::vector<bool> &seen) {
  if (f.is_var()) {
    VarId v = f.var();
    if (v.value >= seen.size())
      seen.resize(v.value + 1, false);
    if (!seen[v.value]) {
      seen[v.value] = true;
      out.push_back(v);
    }
    return;
  }
  for (const auto &c : f.children())
    collect_vars(c, out, seen);
}

} // namespace

std::vector<VarId> vars(const Formula &f) {
  std::vector<VarId> out;
  std::vector<bool> seen;
  collect_vars(f, out, seen);
  return out;
}

bool eval(const Formula &f, const Assignment &a) {
  switch (f.kind()) {
  case Kind::Const:
    return f.value();
  case Kind::Var:
    return a.value(f.var());
  case Kind::Neg:
    return !eval(f.child(0), a);
  case Kind::And:
    return eval(f.child(0), a) && eval(f.child(1), a);
  case Kind::Or:
    return eval(f.child(0), a) || eval(f.child(1), a);
  case Kind::Iff:
    return eval(f.child(0), a) == eval(f.child(1), a);
  case Kind::Xor:
    return eval(f.child(0), a) != eval(f.child(1), a);
  case Kind::Ite:
    return eval(f.child(0), a) ? eval(f.child(1), a) : eval(f.child(2), a);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Constant simplification
// ---------------------------------------------------------------------------

namespace {

// Smart constructors: operands are already constant-free unless they are
// themselves a Const, so folding one level is enough.

Formula mk_not(const Formula &f) {
  if (f.is_const())
    return Formula::constant(!f.value());
  return -f;
}

Formula mk_and(const Formula &l, const Formula &r) {
  if (l.is_const())
    return l.value() ? r : l;
  if (r.is_const())
    return r.value() ? l : r;
  return l * r;
}

Formula mk_or(const Formula &l, const Formula &r) {
  if (l.is_const())
    return l.value() ? l : r;
  if (r.is_const())
    return r.value() ? r : l;
  return l + r;
}

Formula mk_iff(const Formula &l, const Formula &r) {
  if (l.is_const() && r.is_const())
    return Formula::constant(l.value() == r.value());
  if (l.is_const())
    return l.value() ? r : mk_not(r);
  if (r.is_const())
    return r.value() ? l : mk_not(l);
  return iff(l, r);
}

Formula mk_xor(const Formula &l, const Formula &r) {
  if (l.is_const() && r.is_const())
    return Formula::constant(l.value() != r.value());
  if (l.is_const())
    return l.value() ? mk_not(r) : r;
  if (r.is_const())
    return r.value() ? mk_not(l) : l;
  return xor_of(l, r);
}

Formula mk_ite(const Formula &c, const Formula &t, const Formula &e) {
  if (c.is_const())
    return c.value() ? t : e;
  if (t.is_const())
    return t.value() ? mk_or(c, e) : mk_and(mk_not(c), e);
  if (e.is_const())
    return e.value() ? mk_or(mk_not(c), t) : mk_and(c, t);
  return ite(c, t, e);
}

} // namespace

Formula simplify_constants(const Formula &f) {
  switch (f.kind()) {
  case Kind::Const:
  case Kind::Var:
    return f;
  case Kind::Neg:
    return mk_not(simplify_constants(f.child(0)));
  case Kind::And:
    return mk_and(simplify_constants(f.child(0)), simplify_constants(f.child(1)));
  case Kind::Or:
    return mk_or(simplify_constants(f.child(0)), simplify_constants(f.child(1)));
  case Kind::Iff:
    return mk_iff(simplify_constants(f.child(0)), simplify_constants(f.child(1)));
  case Kind::Xor:
    return mk_xor(simplify_constants(f.child(0)), simplify_constants(f.child(1)));
  case Kind::Ite:
    return mk_ite(simplify_constants(f.child(0)), simplify_constants(f.child(1)),
                  simplify_constants(f.child(2)));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

bool is_binary(Kind k) {
  return k == Kind::And || k == Kind::Or || k == Kind::Iff || k == Kind::Xor;
}

void render_into(const Formula &f, const VarPool &pool, std::string &out);

void render_operand(const Formula &f, const VarPool &pool, std::string &out) {
  if (is_binary(f.kind())) {
    out += '(';
    render_into(f, pool, out);
    out += ')';
  } else {
    render_into(f, pool, out);
  }
}

void render_into(const Formula &f, const VarPool &pool, std::string &out) {
  switch (f.kind()) {
  case Kind::Const:
    out += f.value() ? '1' : '0';
    return;
  case Kind::Var:
    out += pool.display_name(f.var());
    return;
  case Kind::Neg:
    out += '-';
    render_operand(f.child(0), pool, out);
    return;
  case Kind::Ite:
    out += "ite(";
    render_into(f.child(0), pool, out);
    out += ", ";
    render_into(f.child(1), pool, out);
    out += ", ";
    render_into(f.child(2), pool, out);
    out += ')';
    return;
  default:
    break;
  }
  const char *op = f.kind() == Kind::And   ? " * "
                   : f.kind() == Kind::Or  ? " + "
                   : f.kind() == Kind::Xor ? " xor "
                                           : " == ";
  render_operand(f.child(0), pool, out);
  out += op;
  render_operand(f.child(1), pool, out);
}

template <typename Combine>
Formula balanced(std::span<const Formula> parts, Combine combine) {
  if (parts.size() == 1)
    return parts.front();
  auto mid = parts.size() / 2;
  return combine(balanced(parts.first(mid), combine),
                 balanced(parts.subspan(mid), combine));
}

} // namespace

std::string render(const Formula &f, const VarPool &pool) {
  std::string out;
  render_into(f, pool, out);
  return out;
}

Formula conjunction(std::span<const Formula> parts) {
  if (parts.empty())
    return Formula::constant(true);
  return balanced(parts, [](Formula l, Formula r) { return l * r; });
}

Formula disjunction(std::span<const Formula> parts) {
  if (parts.empty())
    return Formula::constant(false);
  return balanced(parts, [](Formula l, Formula r) { return l + r; });
}

} // namespace pearlsat
