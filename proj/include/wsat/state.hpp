#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "wsat/cnf.hpp"
#include "wsat/rng.hpp"

namespace wsat {

// Complete truth assignment, one value per variable.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(uint32_t num_vars, bool value = false)
      : values_(num_vars, value ? 1 : 0) {}

  uint32_t num_vars() const { return static_cast<uint32_t>(values_.size()); }
  bool value(Var v) const { return values_[v] != 0; }
  void set(Var v, bool value) { values_[v] = value ? 1 : 0; }
  void flip(Var v) { values_[v] ^= 1; }
  bool satisfies(Lit l) const { return value(l.var()) == l.positive(); }

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<uint8_t> values_;
};

// No-op flip observer; inlines away entirely in the plain flip path.
struct NullFlipHook {
  void on_nt_zero_to_one(uint32_t, Var) {}
  void on_nt_one_to_two(uint32_t, Var) {}
  void on_nt_one_to_zero(uint32_t, Var) {}
  void on_nt_two_to_one(uint32_t, Var) {}
};

// Mutable search state over an immutable Formula: the assignment, the
// per-clause true-literal count nt, and the unsatisfied-clause set as a
// dense array with per-clause back-pointers (O(1) sample/insert/remove).
// A flip touches only the flipped variable's occurrence lists; no break or
// make values are computed or cached here.
//
// Confined to a single thread; multiple states over one shared Formula may
// run in parallel.
class SolverState {
 public:
  SolverState(const Formula& f, Assignment a);

  const Formula& formula() const { return *formula_; }
  const Assignment& assignment() const { return assignment_; }
  uint32_t true_count(uint32_t c) const { return nt_[c]; }
  std::span<const uint32_t> unsat_clauses() const {
    return {unsat_.data(), unsat_.size()};
  }
  uint32_t unsat_count() const { return static_cast<uint32_t>(unsat_.size()); }
  bool is_satisfied() const { return unsat_.empty(); }
  uint64_t flips() const { return flips_; }

  // Clauses in which v's literal is currently true: a view of the occurrence
  // list selected by v's assignment, never a rebuilt list. Exactly the
  // clauses whose nt == 1 entries contribute to break(v).
  std::span<const uint32_t> tlc(Var v) const {
    return formula_->occurrences(Lit::make(v, assignment_.value(v)));
  }

  void flip(Var v) {
    NullFlipHook hook;
    flip_with_hook(v, hook);
  }

  // Flip with an observer notified of the nt transitions (0->1, 1->2, 1->0,
  // 2->1) that critical-literal bookkeeping needs. The hook runs after the
  // clause's own counters are updated; the assignment already carries v's
  // new value.
  template <typename Hook>
  void flip_with_hook(Var v, Hook& hook) {
    const bool was = assignment_.value(v);
    assignment_.flip(v);
    const Lit gained = Lit::make(v, !was);
    for (uint32_t c : formula_->occurrences(gained)) {
      const uint32_t before = nt_[c]++;
      if (before == 0) {
        unsat_remove(c);
        hook.on_nt_zero_to_one(c, v);
      } else if (before == 1) {
        hook.on_nt_one_to_two(c, v);
      }
    }
    const Lit lost = Lit::make(v, was);
    for (uint32_t c : formula_->occurrences(lost)) {
      const uint32_t after = --nt_[c];
      if (after == 0) {
        unsat_insert(c);
        hook.on_nt_one_to_zero(c, v);
      } else if (after == 1) {
        hook.on_nt_two_to_one(c, v);
      }
    }
    ++flips_;
  }

  // Uniform over the unsatisfied clauses, O(1). Callers must check
  // is_satisfied() first.
  uint32_t pick_random_unsat(Rng& rng) const {
    if (unsat_.empty())
      throw std::logic_error("pick_random_unsat on satisfied state");
    return unsat_[rng.below(static_cast<uint32_t>(unsat_.size()))];
  }

  // Reference break/make computation: evaluates every clause under the
  // current and the hypothetically flipped assignment and counts the
  // satisfied->unsatisfied (resp. unsatisfied->satisfied) transitions.
  // Reads only the formula and the assignment, never the incremental
  // counters, so tests can cross-check those against it. O(formula size).
  uint32_t break_oracle(Var v) const;
  uint32_t make_oracle(Var v) const;

 private:
  static constexpr uint32_t kNotInUnsat = std::numeric_limits<uint32_t>::max();

  void unsat_insert(uint32_t c) {
    unsat_pos_[c] = static_cast<uint32_t>(unsat_.size());
    unsat_.push_back(c);
  }

  void unsat_remove(uint32_t c) {
    const uint32_t pos = unsat_pos_[c];
    const uint32_t last = unsat_.back();
    unsat_[pos] = last;
    unsat_pos_[last] = pos;
    unsat_.pop_back();
    unsat_pos_[c] = kNotInUnsat;
  }

  const Formula* formula_;
  Assignment assignment_;
  std::vector<uint32_t> nt_;
  std::vector<uint32_t> unsat_;
  std::vector<uint32_t> unsat_pos_;
  uint64_t flips_ = 0;
};

}  // namespace wsat
