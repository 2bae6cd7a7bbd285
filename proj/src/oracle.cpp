// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/oracle.hpp"

#include "pearlsat/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace pearlsat::oracle {
namespace {

void check_width(std::size_t n) {
  if (n > kMaxEnumVars)
    throw ContractViolation("enumeration over " + std::to_string(n) +
                            " variables exceeds the limit of " +
                            std::to_string(kMaxEnumVars));
}

// Clause as bit masks over variables 1..63 (bit v-1).
struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

std::vector<MaskClause> to_masks(const Cnf &cnf) {
  check_width(cnf.num_vars);
  std::vector<MaskClause> out;
  out.reserve(cnf.clauses.size());
  for (const auto &c : cnf.clauses) {
    MaskClause m;
    for (Literal l : c) {
      if (l.var().value > cnf.num_vars)
        throw ContractViolation("literal beyond num_vars");
      std::uint64_t bit = std::uint64_t{1} << (l.var().value - 1);
      (l.is_negative() ? m.neg : m.pos) |= bit;
    }
    out.push_back(m);
  }
  return out;
}

bool satisfies(const std::vector<MaskClause> &clauses, std::uint64_t m) {
  for (const auto &c : clauses)
    if (((m & c.pos) | (~m & c.neg)) == 0)
      return false;
  return true;
}

std::uint64_t value_of(std::span<const VarId> vec, std::uint64_t m) {
  std::uint64_t value = 0;
  for (std::size_t i = vec.size(); i-- > 0;)
    value = (value << 1) | ((m >> (vec[i].value - 1)) & 1u);
  return value;
}

void check_vec(const Cnf &cnf, std::span<const VarId> vec) {
  for (VarId v : vec)
    if (!v.valid() || v.value > cnf.num_vars)
      throw ContractViolation("objective variable outside the CNF");
}

void fill(Assignment &a, std::span<const VarId> vars, std::uint64_t mask) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    a.set(vars[i], ((mask >> i) & 1u) != 0);
}

std::uint32_t max_id(std::span<const VarId> vars) {
  std::uint32_t n = 0;
  for (VarId v : vars)
    n = std::max(n, v.value);
  return n;
}

std::uint64_t count_satisfied(std::span<const Formula> soft, const Assignment &a) {
  std::uint64_t n = 0;
  for (const auto &f : soft)
    n += eval(f, a) ? 1 : 0;
  return n;
}

} // namespace

Assignment assignment_from_mask(std::span<const VarId> vars, std::uint64_t mask) {
  Assignment a(max_id(vars));
  fill(a, vars, mask);
  return a;
}

// ---------------------------------------------------------------------------
// Formula truth tables
// ---------------------------------------------------------------------------

std::uint64_t count_models_serial(const Formula &f, std::span<const VarId> vars) {
  check_width(vars.size());
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  Assignment a(max_id(vars));
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    fill(a, vars, m);
    count += eval(f, a) ? 1 : 0;
  }
  return count;
}

std::uint64_t count_models(const Formula &f, std::span<const VarId> vars) {
  check_width(vars.size());
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << vars.size());
  const std::uint32_t width = max_id(vars);
  std::uint64_t count = 0;
#pragma omp parallel
  {
    Assignment a(width);
#pragma omp for schedule(static) reduction(+ : count)
    for (std::int64_t m = 0; m < total; ++m) {
      fill(a, vars, static_cast<std::uint64_t>(m));
      count += eval(f, a) ? 1 : 0;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// CNF truth tables
// ---------------------------------------------------------------------------

bool cnf_satisfiable_serial(const Cnf &cnf) {
  auto clauses = to_masks(cnf);
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t m = 0; m < total; ++m)
    if (satisfies(clauses, m))
      return true;
  return false;
}

bool cnf_satisfiable(const Cnf &cnf) {
  auto clauses = to_masks(cnf);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << cnf.num_vars);
  std::uint64_t found = 0;
#pragma omp parallel for schedule(static) reduction(| : found)
  for (std::int64_t m = 0; m < total; ++m)
    found |= satisfies(clauses, static_cast<std::uint64_t>(m)) ? 1u : 0u;
  return found != 0;
}

namespace {

template <bool Maximize>
std::optional<std::uint64_t> extreme_serial(const Cnf &cnf, std::span<const VarId> vec) {
  check_vec(cnf, vec);
  auto clauses = to_masks(cnf);
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  std::optional<std::uint64_t> best;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!satisfies(clauses, m))
      continue;
    std::uint64_t v = value_of(vec, m);
    if (!best || (Maximize ? v > *best : v < *best))
      best = v;
  }
  return best;
}

template <bool Maximize>
std::optional<std::uint64_t> extreme_parallel(const Cnf &cnf, std::span<const VarId> vec) {
  check_vec(cnf, vec);
  auto clauses = to_masks(cnf);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << cnf.num_vars);
  // Shifted by one so that 0 means "no model" under a max reduction; the min
  // case runs on the complement.
  std::uint64_t best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t m = 0; m < total; ++m) {
    auto mask = static_cast<std::uint64_t>(m);
    if (!satisfies(clauses, mask))
      continue;
    std::uint64_t v = value_of(vec, mask);
    std::uint64_t key = Maximize ? v + 1 : (~v);
    best = std::max(best, key);
  }
  if (best == 0)
    return std::nullopt;
  return Maximize ? best - 1 : ~best;
}

} // namespace

std::optional<std::uint64_t> max_value_serial(const Cnf &cnf, std::span<const VarId> vec) {
  return extreme_serial<true>(cnf, vec);
}
std::optional<std::uint64_t> max_value(const Cnf &cnf, std::span<const VarId> vec) {
  return extreme_parallel<true>(cnf, vec);
}
std::optional<std::uint64_t> min_value_serial(const Cnf &cnf, std::span<const VarId> vec) {
  return extreme_serial<false>(cnf, vec);
}
std::optional<std::uint64_t> min_value(const Cnf &cnf, std::span<const VarId> vec) {
  return extreme_parallel<false>(cnf, vec);
}

// ---------------------------------------------------------------------------
// Partial MaxSAT by enumeration
// ---------------------------------------------------------------------------

std::optional<std::uint64_t> max_satisfied_serial(const Formula &hard,
                                                  std::span<const Formula> soft,
                                                  std::span<const VarId> vars) {
  check_width(vars.size());
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  Assignment a(max_id(vars));
  std::optional<std::uint64_t> best;
  for (std::uint64_t m = 0; m < total; ++m) {
    fill(a, vars, m);
    if (!eval(hard, a))
      continue;
    best = std::max(best.value_or(0), count_satisfied(soft, a));
  }
  return best;
}

std::optional<std::uint64_t> max_satisfied(const Formula &hard,
                                           std::span<const Formula> soft,
                                           std::span<const VarId> vars) {
  check_width(vars.size());
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << vars.size());
  const std::uint32_t width = max_id(vars);
  std::uint64_t best = 0; // count + 1; 0 means no model of `hard`
#pragma omp parallel
  {
    Assignment a(width);
#pragma omp for schedule(static) reduction(max : best)
    for (std::int64_t m = 0; m < total; ++m) {
      fill(a, vars, static_cast<std::uint64_t>(m));
      if (eval(hard, a))
        best = std::max(best, count_satisfied(soft, a) + 1);
    }
  }
  if (best == 0)
    return std::nullopt;
  return best - 1;
}

// ---------------------------------------------------------------------------
// Counting by splitting
// ---------------------------------------------------------------------------

namespace {

class SplittingCounter {
public:
  SplittingCounter(const Cnf &cnf, std::span<const Literal> assumptions,
                   bool stop_at_first)
      : stop_at_first_(stop_at_first) {
    std::uint32_t n = cnf.num_vars;
    for (Literal l : assumptions)
      n = std::max(n, l.var().value);
    for (const auto &c : cnf.clauses)
      for (Literal l : c)
        n = std::max(n, l.var().value);
    num_vars_ = n;
    clauses_ = cnf.clauses;
    for (Literal l : assumptions)
      clauses_.push_back({l});
  }

  std::uint64_t count() {
    std::vector<std::int8_t> values(num_vars_ + 1, -1);
    return count(values);
  }

private:
  // -1 unassigned, 0 false, 1 true.
  static int lit_value(const std::vector<std::int8_t> &values, Literal l) {
    int v = values[l.var().value];
    return v < 0 ? -1 : (l.is_negative() ? 1 - v : v);
  }

  std::uint64_t count(std::vector<std::int8_t> &values) {
    // Unit propagation to fixpoint.
    const Clause *open_clause = nullptr;
    bool changed = true;
    while (changed) {
      changed = false;
      open_clause = nullptr;
      for (const auto &c : clauses_) {
        bool sat = false;
        std::size_t free = 0;
        Literal last{};
        for (Literal l : c) {
          int v = lit_value(values, l);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v < 0) {
            ++free;
            last = l;
          }
        }
        if (sat)
          continue;
        if (free == 0)
          return 0;
        if (free == 1) {
          values[last.var().value] = last.is_negative() ? 0 : 1;
          changed = true;
        } else if (!open_clause) {
          open_clause = &c;
        }
      }
    }

    if (!open_clause) {
      std::uint32_t unassigned = 0;
      for (std::uint32_t v = 1; v <= num_vars_; ++v)
        unassigned += values[v] < 0 ? 1 : 0;
      if (stop_at_first_)
        return 1;
      if (unassigned >= 64)
        throw ContractViolation("model count overflows 64 bits");
      return std::uint64_t{1} << unassigned;
    }

    VarId branch{};
    for (Literal l : *open_clause)
      if (lit_value(values, l) < 0) {
        branch = l.var();
        break;
      }
    std::uint64_t total = 0;
    for (std::int8_t choice : {1, 0}) {
      auto copy = values;
      copy[branch.value] = choice;
      total += count(copy);
      if (stop_at_first_ && total > 0)
        break;
    }
    return total;
  }

  bool stop_at_first_;
  std::uint32_t num_vars_ = 0;
  std::vector<Clause> clauses_;
};

} // namespace

std::uint64_t count_cnf_models(const Cnf &cnf, std::span<const Literal> assumptions) {
  return SplittingCounter(cnf, assumptions, false).count();
}

bool cnf_satisfiable_by_splitting(const Cnf &cnf, std::span<const Literal> assumptions) {
  return SplittingCounter(cnf, assumptions, true).count() > 0;
}

} // namespace pearlsat::oracle
