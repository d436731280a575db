#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wsat/cnf.hpp"
#include "wsat/pickers.hpp"
#include "wsat/state.hpp"

namespace wsat {

struct SolverConfig {
  Strategy strategy = Strategy::kSeparated;
  double noise = 0.567;
  uint64_t max_flips = 1'000'000'000;
  std::optional<double> timeout_s;  // wall clock; none by default
  uint64_t seed = 0;
  uint32_t restarts = 1;  // independent tries, each with max_flips/restarts
};

enum class SolveStatus { kSat, kUnknown };

std::string_view status_name(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Assignment> model;  // present iff status == kSat
  uint64_t flips = 0;               // total across restarts
  double elapsed_s = 0.0;
  PickStats pick_stats;             // merged across restarts
  std::string note;                 // reason when no search was attempted
};

// Each variable independently TRUE with probability 1/2; one draw per
// variable in ascending order.
Assignment random_assignment(uint32_t num_vars, Rng& rng);

// Focused random walk: per restart, draw a random assignment and loop —
// return the assignment once it satisfies the formula, otherwise flip the
// variable the configured strategy picks from a uniformly random
// unsatisfied clause. The RNG stream of restart r derives from
// seed_combine(cfg.seed, r), so a given (formula, config) replays the exact
// flip sequence; timing is the only nondeterministic output.
//
// A returned model is always re-verified against the raw clause list.
// The timeout is polled every 2^16 flips.
SolveOutcome solve(const Formula& f, const SolverConfig& cfg);

}  // namespace wsat
