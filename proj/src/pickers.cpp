#include "wsat/pickers.hpp"

#include <limits>

namespace wsat {

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "separated") return Strategy::kSeparated;
  if (name == "noncaching") return Strategy::kSkcNonCaching;
  if (name == "caching") return Strategy::kSkcCaching;
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kSeparated:
      return "separated";
    case Strategy::kSkcNonCaching:
      return "noncaching";
    case Strategy::kSkcCaching:
      return "caching";
  }
  return "?";
}

void BreakCache::attach(const SolverState& state) {
  state_ = &state;
  breaks_.assign(state.formula().num_vars(), 0);
  const Formula& f = state.formula();
  for (uint32_t c = 0; c < f.num_clauses(); ++c) {
    if (state.true_count(c) != 1) continue;
    for (Lit l : f.clause(c)) {
      if (state.assignment().satisfies(l)) {
        ++breaks_[l.var()];
        break;
      }
    }
  }
}

Var BreakCache::other_true_var(uint32_t c, Var flipped) const {
  // Exactly one satisfied literal with a variable other than `flipped`
  // exists in both transition cases that need it.
  for (Lit l : state_->formula().clause(c)) {
    if (l.var() != flipped && state_->assignment().satisfies(l)) return l.var();
  }
  throw std::logic_error("break cache out of sync with state");
}

namespace {
constexpr uint32_t kNoBreak = std::numeric_limits<uint32_t>::max();

void check_unsat(const SolverState& state, uint32_t c) {
  if (state.true_count(c) != 0)
    throw std::logic_error("pick from satisfied clause " + std::to_string(c));
}
}  // namespace

Var pick_separated(PickContext& ctx, uint32_t c) {
  const SolverState& state = ctx.state;
  check_unsat(state, c);
  const auto lits = state.formula().clause(c);
  const size_t width = lits.size();
  ++ctx.stats.picks;

  auto& order = ctx.order;
  order.resize(width);
  for (size_t i = 0; i < width; ++i) order[i] = lits[i].var();
  ctx.rng.shuffle(std::span<Var>(order));

  // Phase 1: find a zero-break variable, remembering how far each scan got.
  auto& resume = ctx.resume;
  resume.resize(width);
  for (size_t i = 0; i < width; ++i) {
    const auto clauses = state.tlc(order[i]);
    size_t j = 0;
    bool zero = true;
    for (; j < clauses.size(); ++j) {
      ++ctx.stats.visited_clauses;
      if (state.true_count(clauses[j]) == 1) {
        zero = false;
        ++j;  // resume just past the critical clause found
        break;
      }
    }
    if (zero) {
      // The random order makes the first zero-break candidate uniform
      // among all zero-break variables of c.
      ++ctx.stats.zero_break_hits;
      return order[i];
    }
    resume[i] = static_cast<uint32_t>(j);
  }

  if (ctx.rng.chance(ctx.noise)) {
    ++ctx.stats.noise_picks;
    return lits[ctx.rng.below(static_cast<uint32_t>(width))].var();
  }

  // Phase 2: resume the scans to find a minimum-break variable. Every
  // candidate's break starts at 1 for the critical clause phase 1 already
  // found. A candidate is abandoned as soon as its count reaches the
  // incumbent's, so the incumbent only ever changes on strict improvement
  // and ties keep the earliest candidate in the random order.
  Var best = order[0];
  uint32_t best_break = kNoBreak;
  for (size_t i = 0; i < width; ++i) {
    uint32_t brk = 1;
    if (brk >= best_break) continue;
    const auto clauses = state.tlc(order[i]);
    bool pruned = false;
    for (size_t j = resume[i]; j < clauses.size(); ++j) {
      ++ctx.stats.visited_clauses;
      if (state.true_count(clauses[j]) == 1 && ++brk >= best_break) {
        pruned = true;
        break;
      }
    }
    if (!pruned) {
      best = order[i];
      best_break = brk;
    }
  }
  return best;
}

namespace {

// Shared SKC selection rule over precomputed break values (ctx.breaks,
// aligned with the clause's literals).
Var select_skc(PickContext& ctx, std::span<const Lit> lits) {
  const auto& breaks = ctx.breaks;
  const size_t width = lits.size();

  uint32_t min_break = kNoBreak;
  uint32_t zero_count = 0;
  for (size_t i = 0; i < width; ++i) {
    if (breaks[i] < min_break) min_break = breaks[i];
    if (breaks[i] == 0) ++zero_count;
  }

  if (zero_count > 0) {
    ++ctx.stats.zero_break_hits;
    uint32_t target = ctx.rng.below(zero_count);
    for (size_t i = 0; i < width; ++i)
      if (breaks[i] == 0 && target-- == 0) return lits[i].var();
  }

  if (ctx.rng.chance(ctx.noise)) {
    ++ctx.stats.noise_picks;
    return lits[ctx.rng.below(static_cast<uint32_t>(width))].var();
  }

  uint32_t ties = 0;
  for (size_t i = 0; i < width; ++i)
    if (breaks[i] == min_break) ++ties;
  uint32_t target = ctx.rng.below(ties);
  for (size_t i = 0; i < width; ++i)
    if (breaks[i] == min_break && target-- == 0) return lits[i].var();
  throw std::logic_error("unreachable");
}

}  // namespace

Var pick_skc_noncaching(PickContext& ctx, uint32_t c) {
  const SolverState& state = ctx.state;
  check_unsat(state, c);
  const auto lits = state.formula().clause(c);
  ++ctx.stats.picks;

  ctx.breaks.resize(lits.size());
  for (size_t i = 0; i < lits.size(); ++i) {
    uint32_t brk = 0;
    for (uint32_t cl : state.tlc(lits[i].var())) {
      ++ctx.stats.visited_clauses;
      if (state.true_count(cl) == 1) ++brk;
    }
    ctx.breaks[i] = brk;
  }
  return select_skc(ctx, lits);
}

Var pick_skc_caching(PickContext& ctx, const BreakCache& cache, uint32_t c) {
  const SolverState& state = ctx.state;
  check_unsat(state, c);
  const auto lits = state.formula().clause(c);
  ++ctx.stats.picks;

  ctx.breaks.resize(lits.size());
  for (size_t i = 0; i < lits.size(); ++i)
    ctx.breaks[i] = cache.value(lits[i].var());
  return select_skc(ctx, lits);
}

}  // namespace wsat
