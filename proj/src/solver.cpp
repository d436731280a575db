#include "wsat/solver.hpp"

#include <chrono>
#include <stdexcept>

#include "wsat/bench.hpp"

namespace wsat {

namespace {
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate(const SolverConfig& cfg) {
  if (cfg.max_flips < 1) throw std::invalid_argument("max_flips must be >= 1");
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!(cfg.noise >= 0.0 && cfg.noise <= 1.0))
    throw std::invalid_argument("noise must be in [0, 1]");
}
}  // namespace

std::string_view status_name(SolveStatus s) {
  return s == SolveStatus::kSat ? "SAT" : "UNKNOWN";
}

Assignment random_assignment(uint32_t num_vars, Rng& rng) {
  Assignment a(num_vars);
  for (Var v = 0; v < num_vars; ++v) a.set(v, (rng.next() & 1) != 0);
  return a;
}

SolveOutcome solve(const Formula& f, const SolverConfig& cfg) {
  validate(cfg);
  const auto start = Clock::now();

  SolveOutcome out;
  if (f.has_empty_clause()) {
    out.note = "formula contains an empty clause: trivially unsatisfiable";
    out.elapsed_s = seconds_since(start);
    return out;
  }

  const uint64_t flips_per_try = cfg.max_flips / cfg.restarts;
  // Timeout granularity: polled when the global flip count crosses a
  // multiple of 2^16, keeping the hot loop branch-light.
  constexpr uint64_t kTimeoutMask = (1ull << 16) - 1;

  for (uint32_t try_idx = 0; try_idx < cfg.restarts; ++try_idx) {
    Rng rng(seed_combine(cfg.seed, try_idx));
    SolverState state(f, random_assignment(f.num_vars(), rng));
    Picker picker(cfg.strategy);
    picker.bind(state);
    PickContext ctx(state, rng, cfg.noise);

    uint64_t try_flips = 0;
    bool timed_out = false;
    while (true) {
      if (state.is_satisfied()) {
        out.pick_stats += ctx.stats;
        out.flips += try_flips;
        if (!verify_model(f, state.assignment()))
          throw std::logic_error("model failed verification");
        out.status = SolveStatus::kSat;
        out.model = state.assignment();
        out.elapsed_s = seconds_since(start);
        return out;
      }
      if (try_flips >= flips_per_try) break;
      if (((out.flips + try_flips) & kTimeoutMask) == 0 && cfg.timeout_s &&
          seconds_since(start) >= *cfg.timeout_s) {
        timed_out = true;
        break;
      }
      const uint32_t c = state.pick_random_unsat(rng);
      const Var v = picker.pick(ctx, c);
      picker.apply_flip(state, v);
      ++try_flips;
    }

    out.pick_stats += ctx.stats;
    out.flips += try_flips;
    if (timed_out) {
      out.note = "timeout";
      break;
    }
  }

  out.elapsed_s = seconds_since(start);
  return out;
}

}  // namespace wsat
