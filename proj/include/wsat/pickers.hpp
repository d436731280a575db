#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wsat/state.hpp"

namespace wsat {

// Break-value computation schemes for the WalkSAT/SKC pick rule.
//
//   kSeparated     two-phase on-demand scheme: a cheap zero-break scan over
//                  TLC prefixes first, then a resumed, pruned minimum-break
//                  count only when no zero-break variable exists.
//   kSkcNonCaching baseline: full break recomputation for every candidate
//                  at pick time.
//   kSkcCaching    baseline: break values maintained incrementally on every
//                  flip, read in O(1) at pick time.
//
// All three induce the same selection distribution; they differ only in
// where the work happens.
enum class Strategy { kSeparated, kSkcNonCaching, kSkcCaching };

// Names used on the CLI: "separated", "noncaching", "caching".
std::optional<Strategy> strategy_from_name(std::string_view name);
std::string_view strategy_name(Strategy s);

struct PickStats {
  uint64_t picks = 0;
  uint64_t visited_clauses = 0;  // TLC entries examined at pick time
  uint64_t zero_break_hits = 0;  // picks resolved by a zero-break variable
  uint64_t noise_picks = 0;      // picks resolved by the random-walk branch

  double mean_visited_per_pick() const {
    return picks == 0 ? 0.0
                      : static_cast<double>(visited_clauses) / picks;
  }

  PickStats& operator+=(const PickStats& o) {
    picks += o.picks;
    visited_clauses += o.visited_clauses;
    zero_break_hits += o.zero_break_hits;
    noise_picks += o.noise_picks;
    return *this;
  }
};

// Per-walk pick context: bound to one state and one RNG stream, therefore
// single-threaded. The scratch vectors are reused across picks so the hot
// path never allocates.
struct PickContext {
  PickContext(const SolverState& s, Rng& r, double noise_p = 0.567)
      : state(s), rng(r), noise(noise_p) {}

  const SolverState& state;
  Rng& rng;
  double noise;  // probability of a random in-clause pick when no 0-break
  PickStats stats;

  // scratch
  std::vector<Var> order;
  std::vector<uint32_t> resume;
  std::vector<uint32_t> breaks;
};

// Incrementally maintained break values, one per variable: the number of
// clauses a flip would falsify. Attach to a state, then route every flip
// through SolverState::flip_with_hook with this as the hook.
class BreakCache {
 public:
  void attach(const SolverState& state);
  uint32_t value(Var v) const { return breaks_[v]; }

  // Flip-hook interface (critical-literal bookkeeping).
  void on_nt_zero_to_one(uint32_t, Var flipped) { ++breaks_[flipped]; }
  void on_nt_one_to_two(uint32_t c, Var flipped) {
    --breaks_[other_true_var(c, flipped)];
  }
  void on_nt_one_to_zero(uint32_t, Var flipped) { --breaks_[flipped]; }
  void on_nt_two_to_one(uint32_t c, Var flipped) {
    ++breaks_[other_true_var(c, flipped)];
  }

 private:
  Var other_true_var(uint32_t c, Var flipped) const;

  const SolverState* state_ = nullptr;
  std::vector<uint32_t> breaks_;
};

// Two-phase separated pick from an unsatisfied clause c:
//
//   1. Shuffle c's variables into a uniformly random candidate order.
//   2. Phase 1: scan each candidate's TLC in list order, stopping at the
//      first critical (nt == 1) clause; a candidate whose scan exhausts the
//      list has break 0 and is returned immediately.
//   3. Otherwise, with probability noise return a uniformly random variable
//      of c.
//   4. Phase 2: resume each scan just past its phase-1 stop with the break
//      count started at 1 (the critical clause phase 1 found), abandoning a
//      candidate as soon as its count reaches the incumbent minimum; a
//      candidate whose scan completes strictly below it becomes the
//      incumbent.
//
// Phase 2 never re-examines a phase-1-visited clause, so at most
// sum over v in c of |TLC(v)| clauses are visited per pick.
//
// RNG draws per pick, in order: |c|-1 shuffle draws, then one Bernoulli
// draw if phase 1 found no zero-break variable, then one uniform index if
// the noise branch was taken.
Var pick_separated(PickContext& ctx, uint32_t c);

// Baseline SKC rule with full recomputation: break(v) for every v in c by
// scanning all of TLC(v); zero-break variables win (uniformly), otherwise
// noise, otherwise minimum break with uniform tie-breaking.
//
// RNG draws per pick, in order: one uniform index among the zero-break
// variables if any exist; otherwise one Bernoulli draw, then one uniform
// index (over c in the noise branch, among the tied minimum otherwise).
Var pick_skc_noncaching(PickContext& ctx, uint32_t c);

// Same selection rule reading cached break values; O(|c|) per pick and the
// same draw discipline as pick_skc_noncaching.
Var pick_skc_caching(PickContext& ctx, const BreakCache& cache, uint32_t c);

// Bundles a strategy with the per-walk machinery it needs: the caching
// strategy hooks every flip to keep its break values current.
class Picker {
 public:
  explicit Picker(Strategy s) : strategy_(s) {}

  void bind(const SolverState& state) {
    if (strategy_ == Strategy::kSkcCaching) cache_.attach(state);
  }

  Var pick(PickContext& ctx, uint32_t c) {
    switch (strategy_) {
      case Strategy::kSeparated:
        return pick_separated(ctx, c);
      case Strategy::kSkcNonCaching:
        return pick_skc_noncaching(ctx, c);
      case Strategy::kSkcCaching:
        return pick_skc_caching(ctx, cache_, c);
    }
    throw std::logic_error("unreachable");
  }

  void apply_flip(SolverState& state, Var v) {
    if (strategy_ == Strategy::kSkcCaching)
      state.flip_with_hook(v, cache_);
    else
      state.flip(v);
  }

  const BreakCache& cache() const { return cache_; }

 private:
  Strategy strategy_;
  BreakCache cache_;
};

}  // namespace wsat
