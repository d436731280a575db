#include "wsat/state.hpp"

namespace wsat {

SolverState::SolverState(const Formula& f, Assignment a)
    : formula_(&f), assignment_(std::move(a)) {
  if (assignment_.num_vars() != f.num_vars())
    throw std::invalid_argument(
        "assignment covers " + std::to_string(assignment_.num_vars()) +
        " variables, formula has " + std::to_string(f.num_vars()));

  const uint32_t m = f.num_clauses();
  nt_.assign(m, 0);
  unsat_pos_.assign(m, kNotInUnsat);
  for (uint32_t c = 0; c < m; ++c) {
    uint32_t count = 0;
    for (Lit l : f.clause(c)) count += assignment_.satisfies(l) ? 1 : 0;
    nt_[c] = count;
    if (count == 0) unsat_insert(c);
  }
}

uint32_t SolverState::break_oracle(Var v) const {
  Assignment flipped = assignment_;
  flipped.flip(v);
  uint32_t count = 0;
  for (uint32_t c = 0; c < formula_->num_clauses(); ++c) {
    bool before = false, after = false;
    for (Lit l : formula_->clause(c)) {
      before = before || assignment_.satisfies(l);
      after = after || flipped.satisfies(l);
    }
    if (before && !after) ++count;
  }
  return count;
}

uint32_t SolverState::make_oracle(Var v) const {
  Assignment flipped = assignment_;
  flipped.flip(v);
  uint32_t count = 0;
  for (uint32_t c = 0; c < formula_->num_clauses(); ++c) {
    bool before = false, after = false;
    for (Lit l : formula_->clause(c)) {
      before = before || assignment_.satisfies(l);
      after = after || flipped.satisfies(l);
    }
    if (!before && after) ++count;
  }
  return count;
}

}  // namespace wsat
