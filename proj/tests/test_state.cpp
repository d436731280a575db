#include "wsat/state.hpp"

#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "wsat/cnf.hpp"
#include "wsat/rng.hpp"

using namespace wsat;
using namespace wsat::test;

TEST_CASE("init: counts and unsat set from scratch") {
  Formula f = formula_f1();

  SUBCASE("x1=T x2=F x3=F") {
    SolverState s(f, assignment_tff());
    CHECK(s.true_count(0) == 1);
    CHECK(s.true_count(1) == 0);
    CHECK(s.true_count(2) == 1);
    CHECK(sorted_unsat(s) == std::vector<uint32_t>{1});
    CHECK(s.flips() == 0);
  }

  SUBCASE("all true") {
    SolverState s(f, Assignment(3, true));
    CHECK(s.true_count(0) == 2);
    CHECK(s.true_count(1) == 1);
    CHECK(s.true_count(2) == 1);
    CHECK(s.is_satisfied());
  }

  SUBCASE("single falsified unit clause") {
    Formula unit = Formula::from_dimacs_ints(1, {{1}});
    SolverState s(unit, Assignment(1, false));
    CHECK(s.true_count(0) == 0);
    CHECK(sorted_unsat(s) == std::vector<uint32_t>{0});
  }

  SUBCASE("arity mismatch") {
    CHECK_THROWS_AS(SolverState(f, Assignment(2)), std::invalid_argument);
  }
}

TEST_CASE("flip: incremental updates match the examples") {
  Formula f = formula_f1();
  SolverState s(f, assignment_tff());

  SUBCASE("flip x2") {
    s.flip(1);
    CHECK(s.assignment().value(0));
    CHECK(s.assignment().value(1));
    CHECK_FALSE(s.assignment().value(2));
    CHECK(s.true_count(0) == 2);
    CHECK(s.true_count(1) == 1);
    CHECK(s.true_count(2) == 0);
    CHECK(sorted_unsat(s) == std::vector<uint32_t>{2});
    CHECK(s.flips() == 1);
  }

  SUBCASE("flip x2 twice restores everything") {
    const Assignment before = s.assignment();
    const auto unsat_before = sorted_unsat(s);
    s.flip(1);
    s.flip(1);
    CHECK(s.assignment() == before);
    CHECK(sorted_unsat(s) == unsat_before);
    CHECK(s.true_count(0) == 1);
    CHECK(s.true_count(1) == 0);
    CHECK(s.true_count(2) == 1);
  }

  SUBCASE("flip x3 leaves the falsified clause untouched") {
    s.flip(2);
    CHECK(s.true_count(0) == 1);
    CHECK(s.true_count(1) == 0);
    CHECK(s.true_count(2) == 2);
    CHECK(sorted_unsat(s) == std::vector<uint32_t>{1});
  }
}

TEST_CASE("tlc: view of the currently-true occurrence list") {
  Formula f = formula_f1();
  SolverState s(f, assignment_tff());

  auto t1 = s.tlc(0);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0] == 0);

  // x2 is false, so its TLC lists the clauses containing -x2.
  auto t2 = s.tlc(1);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == 2);

  CHECK(s.tlc(2).empty());  // no clause contains -x3
}

TEST_CASE("break and make oracles on the fixture") {
  Formula f = formula_f1();
  SolverState s(f, assignment_tff());

  CHECK(s.break_oracle(0) == 1);
  CHECK(s.break_oracle(1) == 1);
  CHECK(s.break_oracle(2) == 0);  // empty TLC forces 0

  CHECK(s.make_oracle(1) == 1);
  CHECK(s.make_oracle(2) == 0);

  SolverState sat(f, Assignment(3, true));
  for (Var v = 0; v < 3; ++v) CHECK(sat.make_oracle(v) == 0);
}

TEST_CASE("pick_random_unsat") {
  Formula f = formula_f1();

  SUBCASE("singleton set") {
    SolverState s(f, assignment_tff());
    Rng rng(1);
    for (int i = 0; i < 10; ++i) CHECK(s.pick_random_unsat(rng) == 1);
  }

  SUBCASE("uniform over two unsatisfied clauses") {
    Formula g = Formula::from_dimacs_ints(2, {{1}, {2}});
    SolverState s(g, Assignment(2, false));
    REQUIRE(s.unsat_count() == 2);
    Rng rng(42);
    uint64_t first = 0;
    constexpr uint64_t kDraws = 10000;
    for (uint64_t i = 0; i < kDraws; ++i)
      if (s.pick_random_unsat(rng) == 0) ++first;
    CHECK(binomial_sigmas(first, kDraws, 0.5) < 5.0);
  }

  SUBCASE("error on satisfied state") {
    SolverState s(f, Assignment(3, true));
    Rng rng(3);
    CHECK_THROWS_AS(s.pick_random_unsat(rng), std::logic_error);
  }
}

TEST_CASE("is_satisfied") {
  Formula f = formula_f1();
  CHECK_FALSE(SolverState(f, assignment_tff()).is_satisfied());
  CHECK(SolverState(f, Assignment(3, true)).is_satisfied());

  Formula empty = Formula::from_dimacs_ints(2, {});
  CHECK(SolverState(empty, Assignment(2)).is_satisfied());
}

TEST_CASE("incremental consistency over a long random walk") {
  Formula f = generate_uniform_ksat(200, 3, 840, 11);
  Rng rng(12);
  Assignment a(200);
  for (Var v = 0; v < 200; ++v) a.set(v, (rng.next() & 1) != 0);
  SolverState s(f, a);

  for (int step = 0; step < 10000; ++step) s.flip(rng.below(200));

  Recount fresh = recount(f, s.assignment());
  for (uint32_t c = 0; c < f.num_clauses(); ++c)
    REQUIRE(s.true_count(c) == fresh.nt[c]);
  CHECK(sorted_unsat(s) == fresh.unsat_sorted);
}

TEST_CASE("oracle cross-checks on random states") {
  // Two independent routes agree: the recount-based oracle and the
  // TLC-scan formula; and a flip changes the unsat count by
  // break(v) - make(v).
  Rng rng(77);
  for (int round = 0; round < 20; ++round) {
    const uint32_t n = 10 + rng.below(40);
    Formula f = generate_uniform_ksat(n, 3, 4 * n, rng.next());
    Assignment a(n);
    for (Var v = 0; v < n; ++v) a.set(v, (rng.next() & 1) != 0);
    SolverState s(f, a);

    for (Var v = 0; v < n; ++v) {
      const uint32_t brk = s.break_oracle(v);
      const uint32_t mk = s.make_oracle(v);
      CHECK(brk == break_by_tlc(s, v));

      const uint32_t before = s.unsat_count();
      s.flip(v);
      CHECK(s.unsat_count() == before + brk - mk);
      s.flip(v);  // restore
      CHECK(s.unsat_count() == before);
    }
  }
}
