// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pearlsat/cnf.hpp"
#include "pearlsat/sat.hpp"

#include <chrono>
#include <optional>
#include <span>

namespace pearlsat::detail {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// One-shot CDCL run over `cnf` under `assumptions`. Throws SolverTimeout
/// once `deadline` has passed.
SolveResult cdcl_solve(const Cnf &cnf, std::span<const Literal> assumptions,
                       Deadline deadline = {});

} // namespace pearlsat::detail
