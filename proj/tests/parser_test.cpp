// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/errors.hpp"
#include "pearlsat/parser.hpp"

#include <gtest/gtest.h>

using namespace pearlsat;

namespace {

Formula v(VarPool &pool, const char *name) { return Formula::var(pool.intern(name)); }

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column) {
  VarPool pool;
  try {
    parse_formula(text, pool);
    FAIL() << "no error for: " << text;
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), line) << text << ": " << e.what();
    EXPECT_EQ(e.column(), column) << text << ": " << e.what();
  }
}

} // namespace

TEST(ParserTest, Examples) {
  VarPool pool;
  Formula f = parse_formula("x == y", pool);
  EXPECT_EQ(f, iff(v(pool, "x"), v(pool, "y")));
  Formula g = parse_formula("(x * y) + (-x * z)", pool);
  EXPECT_EQ(g, v(pool, "x") * v(pool, "y") + (-v(pool, "x")) * v(pool, "z"));
  Formula h = parse_formula("ite(c, a + b, a * b)", pool);
  auto a = v(pool, "a"), b = v(pool, "b"), c = v(pool, "c");
  EXPECT_EQ(h, ite(c, a + b, a * b));
}

TEST(ParserTest, InternsInFirstOccurrenceOrder) {
  VarPool pool;
  parse_formula("zeta + alpha * zeta", pool);
  EXPECT_EQ(pool.lookup("zeta")->value, 1u);
  EXPECT_EQ(pool.lookup("alpha")->value, 2u);
}

TEST(ParserTest, Precedence) {
  VarPool pool;
  auto a = v(pool, "a"), b = v(pool, "b"), c = v(pool, "c"), d = v(pool, "d");
  EXPECT_EQ(parse_formula("a + b * c", pool), a + b * c);
  EXPECT_EQ(parse_formula("-a * b", pool), (-a) * b);
  EXPECT_EQ(parse_formula("a xor b + c", pool), xor_of(a, b + c));
  EXPECT_EQ(parse_formula("a == b xor c", pool), iff(a, xor_of(b, c)));
  EXPECT_EQ(parse_formula("a == b + c * -d", pool), iff(a, b + c * (-d)));
  EXPECT_EQ(parse_formula("-(a + b)", pool), -(a + b));
  EXPECT_EQ(parse_formula("--a", pool), -(-a));
}

TEST(ParserTest, LeftAssociative) {
  VarPool pool;
  auto a = v(pool, "a"), b = v(pool, "b"), c = v(pool, "c");
  EXPECT_EQ(parse_formula("a * b * c", pool), (a * b) * c);
  EXPECT_EQ(parse_formula("a + b + c", pool), (a + b) + c);
  EXPECT_EQ(parse_formula("a xor b xor c", pool), xor_of(xor_of(a, b), c));
  EXPECT_EQ(parse_formula("a == b == c", pool), iff(iff(a, b), c));
}

TEST(ParserTest, ConstantsCommentsAndWhitespace) {
  VarPool pool;
  auto x = v(pool, "x");
  EXPECT_EQ(parse_formula("  # leading comment\n x * 1 # trailing\n", pool),
            x * Formula::constant(true));
  EXPECT_EQ(parse_formula("0", pool), Formula::constant(false));
  EXPECT_EQ(parse_formula("x_1B", pool), v(pool, "x_1B"));
}

TEST(ParserTest, ErrorsCarryPositions) {
  expect_parse_error("x +", 1, 4);
  expect_parse_error("x + * y", 1, 5);
  expect_parse_error("(x * y", 1, 7);
  expect_parse_error("x\n  & y", 2, 3);
  expect_parse_error("x = y", 1, 3);
  expect_parse_error("X + y", 1, 1);
  expect_parse_error("x + 2", 1, 5);
  expect_parse_error("x y", 1, 3);
  expect_parse_error("", 1, 1);
  expect_parse_error("ite(x, y)", 1, 9);
}

TEST(ParserTest, ReservedWords) {
  expect_parse_error("xor + y", 1, 1);
  expect_parse_error("ite * y", 1, 1);
  VarPool pool;
  EXPECT_NO_THROW(parse_formula("xory + itex", pool));
}

TEST(ParserTest, FormulaLines) {
  VarPool pool;
  auto fs = parse_formula_lines("# soft\nx\n\n  -y  \nx == y # c\n", pool);
  ASSERT_EQ(fs.size(), 3u);
  auto x = v(pool, "x"), y = v(pool, "y");
  EXPECT_EQ(fs[0], x);
  EXPECT_EQ(fs[1], -y);
  EXPECT_EQ(fs[2], iff(x, y));
  EXPECT_TRUE(parse_formula_lines("\n# only comments\n", pool).empty());
  try {
    parse_formula_lines("x\ny +\n", pool);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
