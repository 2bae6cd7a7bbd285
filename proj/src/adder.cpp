// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/adder.hpp"

#include "pearlsat/errors.hpp"

#include <string>

namespace pearlsat {

std::pair<std::vector<Formula>, std::vector<Formula>> split(std::span<const Formula> xs) {
  std::vector<Formula> left, right;
  left.reserve((xs.size() + 1) / 2);
  right.reserve((xs.size() + 1) / 2);
  for (std::size_t i = 0; i < xs.size(); ++i)
    (i % 2 == 0 ? left : right).push_back(xs[i]);
  if (xs.size() % 2 == 1)
    right.push_back(Formula::constant(false));
  return {std::move(left), std::move(right)};
}

AdderBits halfadder(Formula x, Formula y) {
  return {xor_of(x, y), x * y};
}

AdderBits fulladder(Formula x, Formula y, Formula c) {
  return {xor_of(xor_of(x, y), c), ite(c, x + y, x * y)};
}

std::vector<Formula> Circuit::output_formulas() const {
  std::vector<Formula> out;
  out.reserve(outputs.size());
  for (VarId v : outputs)
    out.push_back(Formula::var(v));
  return out;
}

Circuit add(std::span<const Formula> xs, std::span<const Formula> ys, VarPool &pool) {
  if (xs.size() != ys.size())
    throw ContractViolation("add: operand widths differ (" +
                            std::to_string(xs.size()) + " vs " +
                            std::to_string(ys.size()) + ")");
  if (xs.empty())
    throw ContractViolation("add: operands must have at least one bit");

  // Position i contributes (carry_i == carry expr) * (z_i == sum expr); the
  // chain ends with top == last carry and nests to the right.
  Circuit out;
  std::vector<Formula> stage_eqs;
  stage_eqs.reserve(xs.size());
  Formula carry_in = Formula::constant(false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    AdderBits bits = i == 0 ? halfadder(xs[0], ys[0])
                            : fulladder(xs[i], ys[i], carry_in);
    VarId z = pool.fresh();
    VarId carry = pool.fresh();
    out.outputs.push_back(z);
    stage_eqs.push_back(iff(Formula::var(carry), bits.carry) *
                        iff(Formula::var(z), bits.sum));
    carry_in = Formula::var(carry);
  }
  VarId top = pool.fresh();
  out.outputs.push_back(top);

  Formula rest = iff(Formula::var(top), carry_in);
  for (std::size_t i = stage_eqs.size(); i-- > 0;)
    rest = stage_eqs[i] * rest;
  out.constraint = std::move(rest);
  return out;
}

namespace {

Circuit sum_raw(std::span<const Formula> unary, VarPool &pool) {
  if (unary.size() == 1) {
    VarId s = pool.fresh();
    return {{s}, iff(Formula::var(s), unary[0])};
  }
  auto [xs, ys] = split(unary);
  Circuit left = sum_raw(xs, pool);
  Circuit right = sum_raw(ys, pool);
  Circuit total = add(left.output_formulas(), right.output_formulas(), pool);
  total.constraint = (left.constraint * right.constraint) * total.constraint;
  return total;
}

} // namespace

Circuit sum_bits(std::span<const Formula> unary, VarPool &pool) {
  if (unary.empty())
    throw ContractViolation("sum_bits: needs at least one input");
  Circuit c = sum_raw(unary, pool);
  c.constraint = simplify_constants(c.constraint);
  return c;
}

std::size_t sum_width(std::size_t n) {
  if (n == 0)
    throw ContractViolation("sum_width: needs at least one input");
  std::size_t w = 1;
  while (n > 1) {
    n = (n + 1) / 2;
    ++w;
  }
  return w;
}

std::uint64_t binary_value(std::span<const VarId> bits, const Assignment &a) {
  std::uint64_t value = 0;
  for (std::size_t i = bits.size(); i-- > 0;)
    value = (value << 1) | (a.value(bits[i]) ? 1u : 0u);
  return value;
}

} // namespace pearlsat
