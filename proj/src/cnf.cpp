// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/cnf.hpp"

#include "pearlsat/errors.hpp"

#include <algorithm>
#include <string>

namespace pearlsat {

Literal Literal::from_dimacs(std::int32_t code) {
  if (code == 0)
    throw ContractViolation("Literal::from_dimacs: 0 is not a literal");
  Literal l;
  l.code_ = code;
  return l;
}

Clause::Clause(std::initializer_list<Literal> lits)
    : Clause(std::vector<Literal>(lits)) {}

Clause::Clause(std::vector<Literal> lits) {
  lits_.reserve(lits.size());
  for (Literal l : lits) {
    if (!l.var().valid())
      throw ContractViolation("Clause: literal over variable 0");
    if (std::find(lits_.begin(), lits_.end(), l) == lits_.end())
      lits_.push_back(l);
  }
}

bool Clause::is_tautology() const {
  return std::any_of(lits_.begin(), lits_.end(), [&](Literal l) {
    return std::find(lits_.begin(), lits_.end(), ~l) != lits_.end();
  });
}

bool Clause::satisfied_by(const Assignment &a) const {
  return std::any_of(lits_.begin(), lits_.end(),
                     [&](Literal l) { return l.holds(a); });
}

std::size_t Cnf::literal_count() const noexcept {
  std::size_t n = 0;
  for (const auto &c : clauses)
    n += c.size();
  return n;
}

bool Cnf::satisfied_by(const Assignment &a) const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const Clause &c) { return c.satisfied_by(a); });
}

// ---------------------------------------------------------------------------
// Gate clauses
// ---------------------------------------------------------------------------

namespace {

std::size_t gate_arity(GateKind kind) { return kind == GateKind::Ite ? 3 : 2; }

// out -> gate(ins)
void positive_clauses(GateKind kind, Literal a, std::span<const Literal> in,
                      std::vector<Clause> &out) {
  switch (kind) {
  case GateKind::And:
    out.push_back({~a, in[0]});
    out.push_back({~a, in[1]});
    break;
  case GateKind::Or:
    out.push_back({~a, in[0], in[1]});
    break;
  case GateKind::Iff:
    out.push_back({~a, ~in[0], in[1]});
    out.push_back({~a, in[0], ~in[1]});
    break;
  case GateKind::Xor:
    out.push_back({~a, in[0], in[1]});
    out.push_back({~a, ~in[0], ~in[1]});
    break;
  case GateKind::Ite:
    out.push_back({~a, ~in[0], in[1]});
    out.push_back({~a, in[0], in[2]});
    break;
  }
}

// gate(ins) -> out
void negative_clauses(GateKind kind, Literal a, std::span<const Literal> in,
                      std::vector<Clause> &out) {
  switch (kind) {
  case GateKind::And:
    out.push_back({a, ~in[0], ~in[1]});
    break;
  case GateKind::Or:
    out.push_back({a, ~in[0]});
    out.push_back({a, ~in[1]});
    break;
  case GateKind::Iff:
    out.push_back({a, in[0], in[1]});
    out.push_back({a, ~in[0], ~in[1]});
    break;
  case GateKind::Xor:
    out.push_back({a, ~in[0], in[1]});
    out.push_back({a, in[0], ~in[1]});
    break;
  case GateKind::Ite:
    out.push_back({a, ~in[0], ~in[1]});
    out.push_back({a, in[0], ~in[2]});
    break;
  }
}

} // namespace

std::vector<Clause> clause_gate_table(GateKind kind, Polarity polarity,
                                      Literal out, std::span<const Literal> ins) {
  if (ins.size() != gate_arity(kind))
    throw ContractViolation("clause_gate_table: gate expects " +
                            std::to_string(gate_arity(kind)) + " inputs, got " +
                            std::to_string(ins.size()));
  std::vector<Clause> clauses;
  if (polarity != Polarity::Negative)
    positive_clauses(kind, out, ins, clauses);
  if (polarity != Polarity::Positive)
    negative_clauses(kind, out, ins, clauses);
  return clauses;
}

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

namespace {

GateKind gate_of(Kind k) {
  switch (k) {
  case Kind::And: return GateKind::And;
  case Kind::Or: return GateKind::Or;
  case Kind::Iff: return GateKind::Iff;
  case Kind::Xor: return GateKind::Xor;
  case Kind::Ite: return GateKind::Ite;
  default: break;
  }
  throw ContractViolation("not a gate node");
}

class Encoder {
public:
  Encoder(VarPool &pool, bool polarity_aware)
      : pool_(pool), polarity_aware_(polarity_aware) {}

  Literal encode(const Formula &f, Polarity pol) {
    if (!polarity_aware_)
      pol = Polarity::Both;
    switch (f.kind()) {
    case Kind::Const:
      throw ContractViolation(
          "CNF transform: constant below the root; run simplify_constants first");
    case Kind::Var:
      return Literal::pos(f.var());
    case Kind::Neg:
      return ~encode(f.child(0), flip(pol));
    default:
      break;
    }

    Literal ins[3];
    const std::size_t n = f.arity();
    for (std::size_t i = 0; i < n; ++i)
      ins[i] = encode(f.child(i), child_polarity(f.kind(), i, pol));

    Literal out = Literal::pos(pool_.fresh());
    auto gate = clause_gate_table(gate_of(f.kind()), pol, out,
                                  std::span<const Literal>(ins, n));
    std::move(gate.begin(), gate.end(), std::back_inserter(clauses_));
    return out;
  }

  std::vector<Clause> take_clauses() { return std::move(clauses_); }

private:
  static Polarity child_polarity(Kind parent, std::size_t index, Polarity pol) {
    switch (parent) {
    case Kind::And:
    case Kind::Or:
      return pol;
    case Kind::Ite:
      return index == 0 ? Polarity::Both : pol;
    default:
      return Polarity::Both;
    }
  }

  VarPool &pool_;
  bool polarity_aware_;
  std::vector<Clause> clauses_;
};

Cnf transform(const Formula &f, VarPool &pool, bool polarity_aware) {
  Cnf cnf;
  if (f.is_const()) {
    if (!f.value())
      cnf.clauses.emplace_back();
  } else if (f.is_literal()) {
    Encoder enc(pool, polarity_aware);
    cnf.clauses.push_back({enc.encode(f, Polarity::Positive)});
  } else {
    Encoder enc(pool, polarity_aware);
    Literal root = enc.encode(f, Polarity::Positive);
    cnf.clauses.push_back({root});
    auto gates = enc.take_clauses();
    std::move(gates.begin(), gates.end(), std::back_inserter(cnf.clauses));
  }
  cnf.num_vars = pool.num_vars();
  for (const auto &c : cnf.clauses)
    for (Literal l : c)
      cnf.num_vars = std::max(cnf.num_vars, l.var().value);
  return cnf;
}

} // namespace

Cnf transform_tseitin(const Formula &f, VarPool &pool) {
  return transform(f, pool, false);
}

Cnf transform_pg(const Formula &f, VarPool &pool) {
  return transform(f, pool, true);
}

Cnf to_cnf(const Formula &f, VarPool &pool, Encoding encoding) {
  return transform(simplify_constants(f), pool,
                   encoding == Encoding::PlaistedGreenbaum);
}

} // namespace pearlsat
