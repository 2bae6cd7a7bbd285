// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/cnf.hpp"
#include "pearlsat/errors.hpp"
#include "pearlsat/oracle.hpp"
#include "pearlsat/parser.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace pearlsat;
using namespace pearlsat::testing;

namespace {

Literal lit(int code) { return Literal::from_dimacs(code); }

bool gate_value(GateKind kind, const std::vector<bool> &in) {
  switch (kind) {
  case GateKind::And: return in[0] && in[1];
  case GateKind::Or: return in[0] || in[1];
  case GateKind::Iff: return in[0] == in[1];
  case GateKind::Xor: return in[0] != in[1];
  case GateKind::Ite: return in[0] ? in[1] : in[2];
  }
  return false;
}

std::size_t gate_arity(GateKind kind) { return kind == GateKind::Ite ? 3 : 2; }

using Transform = Cnf (*)(const Formula &, VarPool &);

// Checks projection soundness and completeness of `cnf` against `f` for every
// assignment of `inputs`. With `unique` the extension must be unique.
// Pool variables that f does not mention are pinned to 0 via `unused`.
void check_projection(const Formula &f, const Cnf &cnf, const std::vector<VarId> &inputs,
                      const std::vector<VarId> &unused, bool unique,
                      const std::string &label) {
  const std::uint64_t total = std::uint64_t{1} << inputs.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    Assignment a = oracle::assignment_from_mask(inputs, m);
    auto fixed = fix_literals(inputs, a);
    for (VarId v : unused)
      fixed.push_back(Literal::neg(v));
    bool expected = eval(f, a);
    if (unique) {
      ASSERT_EQ(oracle::count_cnf_models(cnf, fixed), expected ? 1u : 0u) << label;
    } else {
      ASSERT_EQ(oracle::cnf_satisfiable_by_splitting(cnf, fixed), expected) << label;
    }
  }
}

} // namespace

TEST(LiteralTest, NegationIsAnInvolution) {
  for (int code : {1, -1, 7, -42}) {
    Literal l = lit(code);
    EXPECT_EQ(~~l, l);
    EXPECT_NE(~l, l);
    EXPECT_EQ((~l).var(), l.var());
  }
  EXPECT_THROW(Literal::from_dimacs(0), ContractViolation);
}

TEST(ClauseTest, DropsDuplicatesAndFlagsTautologies) {
  Clause c{lit(1), lit(-2), lit(1)};
  EXPECT_EQ(c.size(), 2u);
  EXPECT_FALSE(c.is_tautology());
  Clause t{lit(3), lit(-3)};
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.is_tautology());
  EXPECT_TRUE(Clause{}.empty());
}

TEST(GateTableTest, Examples) {
  Literal a = lit(1), b = lit(2), c = lit(3);
  std::vector<Literal> ins{b, c};
  EXPECT_EQ(clause_gate_table(GateKind::Or, Polarity::Positive, a, ins),
            (std::vector<Clause>{{~a, b, c}}));
  EXPECT_EQ(clause_gate_table(GateKind::Or, Polarity::Both, a, ins),
            (std::vector<Clause>{{~a, b, c}, {a, ~b}, {a, ~c}}));
  EXPECT_EQ(clause_gate_table(GateKind::And, Polarity::Positive, a, ins),
            (std::vector<Clause>{{~a, b}, {~a, c}}));
}

TEST(GateTableTest, ArityMismatchIsContractViolation) {
  std::vector<Literal> two{lit(2), lit(3)};
  std::vector<Literal> three{lit(2), lit(3), lit(4)};
  EXPECT_THROW(clause_gate_table(GateKind::Ite, Polarity::Both, lit(1), two),
               ContractViolation);
  EXPECT_THROW(clause_gate_table(GateKind::And, Polarity::Both, lit(1), three),
               ContractViolation);
}

TEST(GateTableTest, EveryGateAndPolarityMatchesItsTruthTable) {
  for (GateKind kind : {GateKind::And, GateKind::Or, GateKind::Iff, GateKind::Xor,
                        GateKind::Ite}) {
    const std::size_t n = gate_arity(kind);
    std::vector<Literal> ins;
    for (std::size_t i = 0; i < n; ++i)
      ins.push_back(lit(static_cast<int>(i) + 2));
    for (Polarity pol : {Polarity::Positive, Polarity::Negative, Polarity::Both}) {
      auto clauses = clause_gate_table(kind, pol, lit(1), ins);
      for (std::uint32_t m = 0; m < (1u << (n + 1)); ++m) {
        Assignment a(static_cast<std::uint32_t>(n + 1));
        for (std::uint32_t v = 1; v <= n + 1; ++v)
          a.set(VarId{v}, ((m >> (v - 1)) & 1u) != 0);
        std::vector<bool> in;
        for (std::size_t i = 0; i < n; ++i)
          in.push_back(a.value(VarId{static_cast<std::uint32_t>(i) + 2}));
        bool out = a.value(VarId{1});
        bool g = gate_value(kind, in);
        bool expected = pol == Polarity::Positive   ? (!out || g)
                        : pol == Polarity::Negative ? (!g || out)
                                                    : (out == g);
        bool actual = std::all_of(clauses.begin(), clauses.end(),
                                  [&](const Clause &c) { return c.satisfied_by(a); });
        ASSERT_EQ(actual, expected) << static_cast<int>(kind) << "/" << static_cast<int>(pol)
                                    << " row " << m;
      }
    }
  }
}

TEST(PolarityTest, FlipAndMeet) {
  EXPECT_EQ(flip(Polarity::Positive), Polarity::Negative);
  EXPECT_EQ(flip(flip(Polarity::Negative)), Polarity::Negative);
  EXPECT_EQ(flip(Polarity::Both), Polarity::Both);
  EXPECT_EQ(meet(Polarity::Positive, Polarity::Both), Polarity::Both);
  EXPECT_EQ(meet(Polarity::Positive, Polarity::Negative), Polarity::Both);
  EXPECT_EQ(meet(Polarity::Negative, Polarity::Negative), Polarity::Negative);
}

TEST(TransformPgTest, IffExampleMatchesUnderBijection) {
  VarPool pool;
  Cnf cnf = transform_pg(parse_formula("x == y", pool), pool);
  EXPECT_EQ(cnf.num_vars, 3u);
  ASSERT_EQ(cnf.clauses.size(), 3u);
  // Reference layout with X=1, Y=2, T=3.
  EXPECT_TRUE(equal_under_bijection(to_ints(cnf), {{3}, {-1, 2, -3}, {1, -2, -3}}));
  // Canonical layout: output literal first, inputs in child order.
  EXPECT_EQ(to_ints(cnf), (IntClauses{{3}, {-3, -1, 2}, {-3, 1, -2}}));
}

TEST(TransformPgTest, MuxExampleMatchesUnderBijection) {
  VarPool pool;
  Cnf cnf = transform_pg(parse_formula("(x*y)+(-x*z)", pool), pool);
  ASSERT_EQ(cnf.clauses.size(), 6u);
  // X=1, Y=2, Z=3, T=4, T1=5, T2=6.
  IntClauses reference{{4}, {-4, 5, 6}, {-6, -1}, {-6, 3}, {-5, 1}, {-5, 2}};
  EXPECT_TRUE(equal_under_bijection(to_ints(cnf), reference));
}

TEST(TransformPgTest, LiteralRoots) {
  VarPool pool;
  EXPECT_EQ(to_ints(transform_pg(parse_formula("x", pool), pool)), (IntClauses{{1}}));
  EXPECT_EQ(to_ints(transform_pg(parse_formula("-x", pool), pool)), (IntClauses{{-1}}));
  EXPECT_EQ(to_ints(transform_pg(parse_formula("---x", pool), pool)), (IntClauses{{-1}}));
  EXPECT_EQ(pool.num_vars(), 1u);
}

TEST(TransformPgTest, NegatedRootGetsNegativeClausesOnly) {
  VarPool pool;
  Cnf cnf = transform_pg(parse_formula("-(x * y)", pool), pool);
  EXPECT_EQ(to_ints(cnf), (IntClauses{{-3}, {3, -1, -2}}));
}

TEST(TransformTest, ConstantRoots) {
  for (Transform t : {&transform_pg, &transform_tseitin}) {
    VarPool pool;
    Cnf yes = t(Formula::constant(true), pool);
    EXPECT_TRUE(yes.clauses.empty());
    Cnf no = t(Formula::constant(false), pool);
    ASSERT_EQ(no.clauses.size(), 1u);
    EXPECT_TRUE(no.clauses[0].empty());
    EXPECT_EQ(pool.num_vars(), 0u);
  }
}

TEST(TransformTest, InnerConstantIsContractViolation) {
  VarPool pool;
  Formula f = parse_formula("x * 1", pool);
  EXPECT_THROW(transform_pg(f, pool), ContractViolation);
  EXPECT_THROW(transform_tseitin(f, pool), ContractViolation);
  Cnf cnf = to_cnf(f, pool);
  EXPECT_EQ(to_ints(cnf), (IntClauses{{1}}));
}

TEST(TransformTseitinTest, IffHasTwoProjectedModels) {
  VarPool pool;
  Formula f = parse_formula("x == y", pool);
  Cnf cnf = transform_tseitin(f, pool);
  ASSERT_EQ(cnf.num_vars, 3u);
  EXPECT_EQ(cnf.clauses.size(), 5u);
  int projected = 0;
  for (std::uint32_t m = 0; m < 8; ++m) {
    Assignment a(3);
    for (std::uint32_t v = 1; v <= 3; ++v)
      a.set(VarId{v}, ((m >> (v - 1)) & 1u) != 0);
    if (cnf.satisfied_by(a)) {
      EXPECT_EQ(a.value(VarId{1}), a.value(VarId{2}));
      ++projected;
    }
  }
  EXPECT_EQ(projected, 2);
}

TEST(TransformTest, XorOfVariableWithItselfIsUnsatisfiable) {
  for (Transform t : {&transform_pg, &transform_tseitin}) {
    VarPool pool;
    Cnf cnf = t(parse_formula("x xor x", pool), pool);
    EXPECT_FALSE(oracle::cnf_satisfiable_serial(cnf));
  }
}

TEST(TransformTest, ProjectionSoundAndCompleteOnRandomFormulas) {
  std::vector<VarId> ids;
  VarPool base = named_pool(8, &ids);
  FormulaGen gen(31337, ids, {.max_depth = 6});
  for (int i = 0; i < 150; ++i) {
    Formula f = gen();
    std::vector<VarId> inputs = vars(f);
    std::vector<VarId> unused;
    for (VarId v : ids)
      if (std::find(inputs.begin(), inputs.end(), v) == inputs.end())
        unused.push_back(v);
    {
      VarPool pool = base;
      Cnf cnf = transform_pg(f, pool);
      check_projection(f, cnf, inputs, unused, false, "pg #" + std::to_string(i));
    }
    {
      VarPool pool = base;
      Cnf cnf = transform_tseitin(f, pool);
      check_projection(f, cnf, inputs, unused, true, "tseitin #" + std::to_string(i));
    }
  }
}

TEST(TransformTest, EquisatisfiableByTruthTableOnSmallInstances) {
  std::vector<VarId> ids;
  VarPool base = named_pool(5, &ids);
  FormulaGen gen(99, ids, {.max_depth = 4, .early_leaf_prob = 0.35});
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    Formula f = gen();
    bool sat = oracle::count_models_serial(f, ids) > 0;
    for (Transform t : {&transform_pg, &transform_tseitin}) {
      VarPool pool = base;
      Cnf cnf = t(f, pool);
      if (cnf.num_vars > 16)
        continue;
      ++checked;
      ASSERT_EQ(oracle::cnf_satisfiable_serial(cnf), sat) << render(f, base);
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(TransformTest, SizeIsLinear) {
  std::vector<VarId> ids;
  VarPool base = named_pool(8, &ids);
  FormulaGen gen(4242, ids, {.max_depth = 7});
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen();
    VarPool p1 = base, p2 = base;
    Cnf pg = transform_pg(f, p1);
    Cnf ts = transform_tseitin(f, p2);
    const std::size_t n = size(f);
    ASSERT_LE(pg.clauses.size(), ts.clauses.size());
    ASSERT_LE(ts.clauses.size(), 4 * n + 1);
    ASSERT_LE(ts.literal_count(), 12 * n);
    ASSERT_LE(pg.literal_count(), ts.literal_count());
  }
}

TEST(TransformTest, DeterministicAndFreshIdsAboveInputs) {
  std::vector<VarId> ids;
  VarPool base = named_pool(6, &ids);
  FormulaGen gen(7, ids);
  for (int i = 0; i < 100; ++i) {
    Formula f = gen();
    for (Transform t : {&transform_pg, &transform_tseitin}) {
      VarPool p1 = base, p2 = base;
      Cnf a = t(f, p1);
      Cnf b = t(f, p2);
      ASSERT_EQ(a, b);
      ASSERT_EQ(a.num_vars, p1.num_vars());
      for (const auto &c : a.clauses)
        for (Literal l : c) {
          VarId v = l.var();
          bool input = std::find(ids.begin(), ids.end(), v) != ids.end();
          ASSERT_TRUE(input || v.value > base.num_vars());
        }
    }
  }
}

TEST(TransformTest, SatisfiedByChecksEveryClause) {
  VarPool pool;
  Cnf cnf = transform_pg(parse_formula("x * -y", pool), pool);
  Assignment good(3), bad(3);
  good.set(VarId{1}, true);
  good.set(VarId{2}, false);
  good.set(VarId{3}, true);
  bad = good;
  bad.set(VarId{2}, true);
  EXPECT_TRUE(cnf.satisfied_by(good));
  EXPECT_FALSE(cnf.satisfied_by(bad));
}
