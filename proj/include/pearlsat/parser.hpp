// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pearlsat/formula.hpp"

#include <string_view>
#include <vector>

namespace pearlsat {

// Formula DSL, tightest binding first:
//
//   -f            negation
//   f * g         conjunction
//   f + g         disjunction
//   f xor g       exclusive or
//   f == g        bi-implication
//
// Binary operators are left-associative. `ite(c, t, e)` is if-then-else,
// `0` and `1` are the constants, variables match [a-z][a-zA-Z0-9_]* and are
// interned into the pool in first-occurrence order. `xor` and `ite` are
// reserved. `#` starts a comment that runs to the end of the line.

/// Parses exactly one formula; anything after it is an error.
/// Throws ParseError with the line and column of the offending token.
Formula parse_formula(std::string_view text, VarPool &pool);

/// One formula per non-blank, non-comment line (the soft-formula file
/// layout). Line numbers in errors refer to `text`.
std::vector<Formula> parse_formula_lines(std::string_view text, VarPool &pool);

} // namespace pearlsat
