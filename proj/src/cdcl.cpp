// SPDX-License-Identifier: Apache-2.0
#include "cdcl.hpp"

#include "pearlsat/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace pearlsat::detail {
namespace {

// Internal literal: 2*var + (negative ? 1 : 0).
using Lit = std::uint32_t;

constexpr Lit to_lit(Literal l) {
  return 2 * l.var().value + (l.is_negative() ? 1u : 0u);
}
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }
constexpr Lit negate(Lit l) { return l ^ 1u; }

constexpr std::int8_t kUndef = -1;
constexpr std::int32_t kNoReason = -1;

class Solver {
public:
  Solver(const Cnf &cnf, std::span<const Literal> assumptions, Deadline deadline)
      : deadline_(deadline) {
    std::uint32_t n = cnf.num_vars;
    for (const auto &c : cnf.clauses)
      for (Literal l : c)
        n = std::max(n, l.var().value);
    for (Literal l : assumptions)
      n = std::max(n, l.var().value);
    num_vars_ = n;

    assigns_.assign(n + 1, kUndef);
    level_.assign(n + 1, 0);
    reason_.assign(n + 1, kNoReason);
    occurs_.assign(n + 1, false);
    seen_.assign(n + 1, false);
    watches_.resize(2 * (n + 1));

    for (Literal l : assumptions)
      assumptions_.push_back(to_lit(l));

    for (const auto &c : cnf.clauses) {
      add_problem_clause(c);
      if (inconsistent_)
        break;
    }

    activity_.assign(n + 1, 0.0);
    heap_pos_.assign(n + 1, -1);
    for (std::uint32_t v = 1; v <= n; ++v)
      if (assigns_[v] == kUndef)
        heap_insert(v);
  }

  SolveResult run() {
    if (inconsistent_)
      return SolveResult::unsat();

    std::uint64_t ticks = 0;
    std::uint64_t conflicts_left = restart_budget();
    for (;;) {
      if (deadline_ && (++ticks & 0x3ff) == 0 &&
          std::chrono::steady_clock::now() > *deadline_)
        throw SolverTimeout("embedded solver exceeded its time limit");

      std::int32_t confl = propagate();
      if (confl != kNoReason) {
        if (decision_level() == 0)
          return SolveResult::unsat();
        --conflicts_left;
        auto [learnt, bt_level] = analyze(confl);
        decay_activity();
        cancel_until(bt_level);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          auto idx = static_cast<std::int32_t>(clauses_.size());
          clauses_.push_back(std::move(learnt));
          attach(idx);
          enqueue(clauses_[idx][0], idx);
        }
        continue;
      }

      if (conflicts_left == 0) {
        cancel_until(0);
        conflicts_left = restart_budget();
        continue;
      }

      if (decision_level() < assumptions_.size()) {
        Lit p = assumptions_[decision_level()];
        std::int8_t v = value(p);
        if (v == 0)
          return SolveResult::unsat();
        trail_lim_.push_back(trail_.size());
        if (v == kUndef)
          enqueue(p, kNoReason);
        continue;
      }

      std::uint32_t next = pick_branch_var();
      if (next == 0)
        return SolveResult::sat(model());
      trail_lim_.push_back(trail_.size());
      enqueue(2 * next, kNoReason);
    }
  }

private:
  std::int8_t value(Lit l) const {
    std::int8_t a = assigns_[var_of(l)];
    return a == kUndef ? kUndef : static_cast<std::int8_t>(a ^ (l & 1u));
  }

  std::size_t decision_level() const { return trail_lim_.size(); }

  void enqueue(Lit l, std::int32_t reason) {
    std::uint32_t v = var_of(l);
    assigns_[v] = static_cast<std::int8_t>((l & 1u) ^ 1u);
    level_[v] = static_cast<std::uint32_t>(decision_level());
    reason_[v] = reason;
    trail_.push_back(l);
  }

  void add_problem_clause(const Clause &c) {
    std::vector<Lit> lits;
    lits.reserve(c.size());
    for (Literal l : c) {
      lits.push_back(to_lit(l));
      occurs_[l.var().value] = true;
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i)
      if (lits[i] == negate(lits[i - 1]))
        return; // tautology

    if (lits.empty()) {
      inconsistent_ = true;
    } else if (lits.size() == 1) {
      std::int8_t v = value(lits[0]);
      if (v == 0)
        inconsistent_ = true;
      else if (v == kUndef)
        enqueue(lits[0], kNoReason);
    } else {
      auto idx = static_cast<std::int32_t>(clauses_.size());
      clauses_.push_back(std::move(lits));
      attach(idx);
    }
  }

  void attach(std::int32_t idx) {
    const auto &c = clauses_[idx];
    watches_[c[0]].push_back(idx);
    watches_[c[1]].push_back(idx);
  }

  // Watches are indexed by the watched literal and visited when it turns
  // false. The implied literal of a reason clause sits at position 0.
  std::int32_t propagate() {
    while (qhead_ < trail_.size()) {
      Lit false_lit = negate(trail_[qhead_++]);
      auto &ws = watches_[false_lit];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        std::int32_t cidx = ws[i++];
        auto &c = clauses_[cidx];
        if (c[0] == false_lit)
          std::swap(c[0], c[1]);
        if (value(c[0]) == 1) {
          ws[j++] = cidx;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(cidx);
            moved = true;
            break;
          }
        }
        if (moved)
          continue;
        ws[j++] = cidx;
        if (value(c[0]) == 0) {
          while (i < ws.size())
            ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return cidx;
        }
        enqueue(c[0], cidx);
      }
      ws.resize(j);
    }
    return kNoReason;
  }

  // First-UIP learning. Returns the learnt clause (asserting literal first,
  // a literal of the backjump level second) and the backjump level.
  std::pair<std::vector<Lit>, std::size_t> analyze(std::int32_t confl) {
    std::vector<Lit> learnt{0};
    std::size_t path = 0;
    bool have_p = false;
    Lit p = 0;
    std::size_t index = trail_.size();

    do {
      const auto &c = clauses_[confl];
      for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
        Lit q = c[k];
        std::uint32_t v = var_of(q);
        if (seen_[v] || level_[v] == 0)
          continue;
        seen_[v] = true;
        bump(v);
        if (level_[v] == decision_level())
          ++path;
        else
          learnt.push_back(q);
      }
      while (!seen_[var_of(trail_[--index])]) {
      }
      p = trail_[index];
      have_p = true;
      confl = reason_[var_of(p)];
      seen_[var_of(p)] = false;
      --path;
    } while (path > 0);
    learnt[0] = negate(p);

    std::size_t bt_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level_[var_of(learnt[k])] > level_[var_of(learnt[max_i])])
          max_i = k;
      std::swap(learnt[1], learnt[max_i]);
      bt_level = level_[var_of(learnt[1])];
    }
    for (Lit l : learnt)
      seen_[var_of(l)] = false;
    return {std::move(learnt), bt_level};
  }

  void cancel_until(std::size_t level) {
    if (decision_level() <= level)
      return;
    for (std::size_t k = trail_.size(); k > trail_lim_[level]; --k) {
      std::uint32_t v = var_of(trail_[k - 1]);
      assigns_[v] = kUndef;
      reason_[v] = kNoReason;
      heap_insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
  }

  std::uint32_t pick_branch_var() {
    while (!heap_.empty()) {
      std::uint32_t v = heap_pop();
      if (assigns_[v] == kUndef)
        return v;
    }
    return 0;
  }

  // Luby sequence scaled by kRestartUnit conflicts.
  std::uint64_t restart_budget() {
    constexpr std::uint64_t kRestartUnit = 100;
    std::uint64_t i = ++restarts_;
    std::uint64_t size = 1, seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != i) {
      size = (size - 1) >> 1;
      --seq;
      i = i % size;
    }
    return kRestartUnit << seq;
  }

  // Variable activity. The heap orders by activity, then by lower index,
  // so the search is deterministic and starts at the lowest variable.
  void bump(std::uint32_t v) {
    activity_[v] += bump_;
    if (activity_[v] > 1e100) {
      for (auto &a : activity_)
        a *= 1e-100;
      bump_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0)
      sift_up(static_cast<std::size_t>(heap_pos_[v]));
  }

  void decay_activity() { bump_ /= 0.95; }

  bool before(std::uint32_t a, std::uint32_t b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }

  void heap_insert(std::uint32_t v) {
    if (heap_pos_[v] >= 0 || !occurs_[v])
      return;
    heap_pos_[v] = static_cast<std::int32_t>(heap_.size());
    heap_.push_back(v);
    sift_up(heap_.size() - 1);
  }

  std::uint32_t heap_pop() {
    std::uint32_t top = heap_.front();
    heap_pos_[top] = -1;
    std::uint32_t last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_pos_[last] = 0;
      sift_down(0);
    }
    return top;
  }

  void sift_up(std::size_t i) {
    std::uint32_t v = heap_[i];
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!before(v, heap_[parent]))
        break;
      heap_[i] = heap_[parent];
      heap_pos_[heap_[i]] = static_cast<std::int32_t>(i);
      i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int32_t>(i);
  }

  void sift_down(std::size_t i) {
    std::uint32_t v = heap_[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size())
        break;
      if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child]))
        ++child;
      if (!before(heap_[child], v))
        break;
      heap_[i] = heap_[child];
      heap_pos_[heap_[i]] = static_cast<std::int32_t>(i);
      i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int32_t>(i);
  }

  Assignment model() const {
    Assignment m(num_vars_);
    for (std::uint32_t v = 1; v <= num_vars_; ++v)
      m.set(VarId{v}, assigns_[v] == 1);
    return m;
  }

  Deadline deadline_;
  std::uint32_t num_vars_ = 0;
  bool inconsistent_ = false;

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::int32_t>> watches_;
  std::vector<std::int8_t> assigns_;
  std::vector<std::uint32_t> level_;
  std::vector<std::int32_t> reason_;
  std::vector<bool> occurs_;
  std::vector<bool> seen_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::vector<Lit> assumptions_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double bump_ = 1.0;
  std::vector<std::uint32_t> heap_;
  std::vector<std::int32_t> heap_pos_;
  std::uint64_t restarts_ = 0;
};

} // namespace

SolveResult cdcl_solve(const Cnf &cnf, std::span<const Literal> assumptions,
                       Deadline deadline) {
  return Solver(cnf, assumptions, deadline).run();
}

} // namespace pearlsat::detail
