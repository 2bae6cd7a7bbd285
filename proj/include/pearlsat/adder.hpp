// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pearlsat/formula.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pearlsat {

// Numbers as bit lists. Unary: the count of true bits. Binary: least
// significant bit first.

/// Deinterleaves: even positions left, odd positions right. An odd-length
/// input pads the right half with a trailing constant 0.
std::pair<std::vector<Formula>, std::vector<Formula>> split(std::span<const Formula> xs);

struct AdderBits {
  Formula sum;
  Formula carry;
};

/// sum = x xor y, carry = x * y.
AdderBits halfadder(Formula x, Formula y);
/// sum = (x xor y) xor c, carry = ite(c, x + y, x * y).
AdderBits fulladder(Formula x, Formula y, Formula c);

/// Output wires of a circuit together with the formula that defines them.
struct Circuit {
  /// Fresh variables, least significant first.
  std::vector<VarId> outputs;
  /// Conjunction of `wire == expression` equations. Under any assignment
  /// of the inputs it has exactly one extension over the fresh wires.
  Formula constraint = Formula::constant(true);

  std::vector<Formula> output_formulas() const;
};

/// Ripple-carry addition of two equal-width binary numbers: a half adder on
/// the lowest pair, full adders above it, the last carry as the extra top
/// bit. outputs.size() == xs.size() + 1. Every sum bit and internal carry
/// gets a fresh wire.
Circuit add(std::span<const Formula> xs, std::span<const Formula> ys, VarPool &pool);

/// Binary count of the true formulas in `unary`, by splitting, counting both
/// halves recursively and adding. The returned constraint has its constant
/// padding folded away.
Circuit sum_bits(std::span<const Formula> unary, VarPool &pool);

/// Output width of sum_bits for n inputs: 1 for n = 1, else
/// sum_width(ceil(n / 2)) + 1.
std::size_t sum_width(std::size_t n);

/// Value of an LSB-first bit vector under `a`.
std::uint64_t binary_value(std::span<const VarId> bits, const Assignment &a);

} // namespace pearlsat
