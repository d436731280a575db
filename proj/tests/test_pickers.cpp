#include "wsat/pickers.hpp"

#include <array>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "wsat/cnf.hpp"
#include "wsat/state.hpp"

using namespace wsat;
using namespace wsat::test;

namespace {

Assignment random_full(uint32_t n, Rng& rng) {
  Assignment a(n);
  for (Var v = 0; v < n; ++v) a.set(v, (rng.next() & 1) != 0);
  return a;
}

// Selection histogram over the clause's variables for one strategy on a
// frozen state.
std::vector<uint64_t> histogram(Strategy strategy, const SolverState& state,
                                uint32_t clause, uint64_t draws,
                                uint64_t seed, double noise = 0.567) {
  Picker picker(strategy);
  picker.bind(state);
  Rng rng(seed);
  PickContext ctx(state, rng, noise);

  const auto lits = state.formula().clause(clause);
  std::vector<uint64_t> counts(lits.size(), 0);
  for (uint64_t i = 0; i < draws; ++i) {
    const Var v = picker.pick(ctx, clause);
    bool found = false;
    for (size_t j = 0; j < lits.size(); ++j) {
      if (lits[j].var() == v) {
        ++counts[j];
        found = true;
      }
    }
    REQUIRE(found);  // picked variable always comes from the clause
  }
  return counts;
}

}  // namespace

TEST_CASE("zero-break variable is returned regardless of order") {
  Formula f = formula_f2();
  SolverState s(f, Assignment(2, false));
  REQUIRE(s.break_oracle(1) == 0);

  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    PickContext ctx(s, rng);
    CHECK(pick_separated(ctx, 0) == 1);
    CHECK(pick_skc_noncaching(ctx, 0) == 1);
    BreakCache cache;
    cache.attach(s);
    CHECK(pick_skc_caching(ctx, cache, 0) == 1);
    CHECK(ctx.stats.zero_break_hits == ctx.stats.picks);
  }
}

TEST_CASE("tied break values resolve uniformly across both branches") {
  // Picking from c1 of the fixture: x1 and x2 both have break 1, so the
  // noise branch and the min-break branch must each split 50/50 overall.
  Formula f = formula_f1();
  SolverState s(f, assignment_tff());
  REQUIRE(s.break_oracle(0) == 1);
  REQUIRE(s.break_oracle(1) == 1);

  constexpr uint64_t kDraws = 20000;
  for (Strategy strategy : {Strategy::kSeparated, Strategy::kSkcNonCaching,
                            Strategy::kSkcCaching}) {
    CAPTURE(strategy_name(strategy));
    auto counts = histogram(strategy, s, 1, kDraws, 9001);
    CHECK(binomial_sigmas(counts[0], kDraws, 0.5) < 5.0);
  }
}

TEST_CASE("noise forced off still splits a tie uniformly") {
  Formula f = formula_f1();
  SolverState s(f, assignment_tff());
  constexpr uint64_t kDraws = 20000;
  auto counts = histogram(Strategy::kSkcNonCaching, s, 1, kDraws, 5, 0.0);
  CHECK(binomial_sigmas(counts[0], kDraws, 0.5) < 5.0);
}

TEST_CASE("pure noise picks uniformly over the clause") {
  Formula f = formula_f1();
  SolverState s(f, assignment_tff());
  constexpr uint64_t kDraws = 20000;
  auto counts = histogram(Strategy::kSkcNonCaching, s, 1, kDraws, 6, 1.0);
  CHECK(binomial_sigmas(counts[0], kDraws, 0.5) < 5.0);
}

TEST_CASE("single-variable clause returns its only candidate") {
  Formula f = Formula::from_dimacs_ints(2, {{1}, {-1}, {2}});
  Assignment a(2);
  a.set(0, true);   // c1 = -x1 unsat; flipping x1 breaks c0
  a.set(1, true);
  SolverState s(f, a);
  REQUIRE(s.true_count(1) == 0);
  REQUIRE(s.break_oracle(0) == 1);

  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    PickContext ctx(s, rng);
    CHECK(pick_separated(ctx, 1) == 0);
    CHECK(pick_skc_noncaching(ctx, 1) == 0);
  }
}

TEST_CASE("picking from a satisfied clause is rejected") {
  Formula f = formula_f1();
  SolverState s(f, assignment_tff());
  Rng rng(1);
  PickContext ctx(s, rng);
  CHECK_THROWS_AS(pick_separated(ctx, 0), std::logic_error);
  CHECK_THROWS_AS(pick_skc_noncaching(ctx, 0), std::logic_error);
}

TEST_CASE("separated agrees with the oracle over random states") {
  // With noise 0, the returned variable attains the minimum break value,
  // and a zero-break variable is returned exactly when one exists.
  Rng meta(31337);
  uint64_t samples = 0;
  while (samples < 10000) {
    const uint32_t n = 10 + meta.below(41);
    const uint32_t m = static_cast<uint32_t>(4.2 * n + 0.5);
    Formula f = generate_uniform_ksat(n, 3, m, meta.next());
    SolverState s(f, random_full(n, meta));
    Rng walk(meta.next());
    for (int step = 0; step < 200 && !s.is_satisfied(); ++step) {
      const uint32_t c = s.pick_random_unsat(walk);

      Rng pick_rng(walk.next());
      PickContext ctx(s, pick_rng, 0.0);
      const Var picked = pick_separated(ctx, c);

      uint32_t min_break = UINT32_MAX;
      bool any_zero = false;
      for (Lit l : f.clause(c)) {
        const uint32_t brk = s.break_oracle(l.var());
        min_break = std::min(min_break, brk);
        any_zero = any_zero || brk == 0;
      }
      REQUIRE(s.break_oracle(picked) == min_break);
      REQUIRE((s.break_oracle(picked) == 0) == any_zero);
      ++samples;

      PickContext walk_ctx(s, walk);
      s.flip(pick_separated(walk_ctx, c));
    }
  }
}

TEST_CASE("zero-break choice is uniform among zero-break variables") {
  // Frozen state with two zero-break candidates in the picked clause.
  Rng meta(4242);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const uint32_t n = 20;
    Formula f = generate_uniform_ksat(n, 3, 84, meta.next());
    SolverState s(f, random_full(n, meta));
    if (s.is_satisfied()) continue;
    Rng scan(1);
    const uint32_t c = s.pick_random_unsat(scan);
    std::vector<size_t> zero_positions;
    const auto lits = f.clause(c);
    for (size_t i = 0; i < lits.size(); ++i)
      if (s.break_oracle(lits[i].var()) == 0) zero_positions.push_back(i);
    if (zero_positions.size() != 2) continue;

    constexpr uint64_t kDraws = 10000;
    auto counts = histogram(Strategy::kSeparated, s, c, kDraws, 2718);
    const uint64_t first = counts[zero_positions[0]];
    const uint64_t second = counts[zero_positions[1]];
    CHECK(first + second == kDraws);
    std::vector<uint64_t> pair = {first, second};
    CHECK(chi2_uniform(pair) < chi2_critical_001(1));
    return;
  }
  FAIL("no frozen state with exactly two zero-break candidates found");
}

TEST_CASE("three strategies induce the same selection distribution") {
  Rng meta(5150);
  int tested = 0;
  for (int attempt = 0; attempt < 200 && tested < 5; ++attempt) {
    const uint32_t n = 30;
    Formula f = generate_uniform_ksat(n, 3, 126, meta.next());
    SolverState s(f, random_full(n, meta));
    if (s.is_satisfied()) continue;
    Rng scan(2);
    const uint32_t c = s.pick_random_unsat(scan);

    constexpr uint64_t kDraws = 10000;
    auto sep = histogram(Strategy::kSeparated, s, c, kDraws, 100 + tested);
    auto non = histogram(Strategy::kSkcNonCaching, s, c, kDraws, 200 + tested);
    auto cache = histogram(Strategy::kSkcCaching, s, c, kDraws, 300 + tested);

    for (const auto& [a, b] : {std::pair{sep, non}, std::pair{sep, cache},
                               std::pair{non, cache}}) {
      const auto r = chi2_two_sample(a, b);
      if (r.dof == 0) continue;
      CHECK(r.stat < chi2_critical_001(r.dof));
    }
    ++tested;
  }
  CHECK(tested == 5);
}

TEST_CASE("cached break values stay exact through flips") {
  Formula f = generate_uniform_ksat(60, 3, 252, 808);
  Rng rng(809);
  SolverState s(f, random_full(60, rng));
  BreakCache cache;
  cache.attach(s);

  for (Var v = 0; v < 60; ++v) CHECK(cache.value(v) == s.break_oracle(v));

  for (int step = 0; step < 10000; ++step)
    s.flip_with_hook(rng.below(60), cache);

  for (Var v = 0; v < 60; ++v) CHECK(cache.value(v) == s.break_oracle(v));
}

TEST_CASE("visit accounting: bounded by TLC sizes, phase 2 never re-visits") {
  Rng meta(616);
  uint64_t checked = 0;
  while (checked < 2000) {
    const uint32_t n = 25;
    Formula f = generate_uniform_ksat(n, 3, 105, meta.next());
    SolverState s(f, random_full(n, meta));
    Rng walk(meta.next());
    for (int step = 0; step < 100 && !s.is_satisfied(); ++step) {
      const uint32_t c = s.pick_random_unsat(walk);
      uint64_t tlc_total = 0;
      for (Lit l : f.clause(c)) tlc_total += s.tlc(l.var()).size();

      Rng pick_rng(walk.next());
      PickContext ctx(s, pick_rng, 0.0);  // noise off: phase 2 always runs
      pick_separated(ctx, c);
      REQUIRE(ctx.stats.visited_clauses <= tlc_total);
      ++checked;

      PickContext walk_ctx(s, walk);
      s.flip(pick_separated(walk_ctx, c));
    }
  }
}

TEST_CASE("separated visits fewer clauses than the full recomputation") {
  Formula f = generate_uniform_ksat(500, 3, 2100, 14);
  Rng init(15);
  SolverState walker(f, random_full(500, init));

  // Both pickers probe the same (state, clause) sequence along one walk.
  PickStats sep, non;
  Rng walk(17), rng_sep(16), rng_non(16);
  PickContext walk_ctx(walker, walk);
  for (int step = 0; step < 2000 && !walker.is_satisfied(); ++step) {
    const uint32_t c = walker.pick_random_unsat(walk);
    PickContext probe_sep(walker, rng_sep, 0.567);
    PickContext probe_non(walker, rng_non, 0.567);
    pick_separated(probe_sep, c);
    pick_skc_noncaching(probe_non, c);
    sep += probe_sep.stats;
    non += probe_non.stats;
    walker.flip(pick_skc_noncaching(walk_ctx, c));
  }
  REQUIRE(sep.picks == non.picks);
  CHECK(sep.mean_visited_per_pick() < non.mean_visited_per_pick());
  CHECK(sep.mean_visited_per_pick() < 18.9);
}

TEST_CASE("strategy names round-trip") {
  for (Strategy s : {Strategy::kSeparated, Strategy::kSkcNonCaching,
                     Strategy::kSkcCaching})
    CHECK(strategy_from_name(strategy_name(s)) == s);
  CHECK_FALSE(strategy_from_name("probsat").has_value());
}
