// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/sat.hpp"

#include "cdcl.hpp"

#include <exception>

namespace pearlsat {

std::vector<SolveResult> solve_batch_serial(std::span<const Cnf> problems) {
  std::vector<SolveResult> results;
  results.reserve(problems.size());
  for (const auto &cnf : problems)
    results.push_back(detail::cdcl_solve(cnf, {}));
  return results;
}

std::vector<SolveResult> solve_batch(std::span<const Cnf> problems) {
  std::vector<SolveResult> results(problems.size());
  const auto n = static_cast<std::ptrdiff_t>(problems.size());
  std::exception_ptr failure;

  // Instances vary wildly in difficulty, hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[i] = detail::cdcl_solve(problems[i], {});
    } catch (...) {
#pragma omp critical(pearlsat_batch_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return results;
}

} // namespace pearlsat
