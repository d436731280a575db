#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wsat/cnf.hpp"
#include "wsat/solver.hpp"
#include "wsat/state.hpp"

namespace wsat {

struct RunRecord {
  std::string instance;
  uint64_t seed = 0;
  SolveStatus status = SolveStatus::kUnknown;
  double elapsed_s = 0.0;
  uint64_t flips = 0;
  double flips_per_sec = 0.0;
  double mean_visited_per_pick = 0.0;
};

struct ClassSummary {
  uint64_t runs = 0;
  uint64_t successes = 0;
  double suc = 0.0;    // percent of successful runs
  double par10 = 0.0;  // mean runtime, failures charged 10x the cutoff
};

// True iff the assignment satisfies every clause; reads the raw clause
// list only, independent of any search state. Throws on arity mismatch.
bool verify_model(const Formula& f, const Assignment& a);

// Percent of successful (SAT) runs. Throws on an empty record set.
double compute_suc(std::span<const RunRecord> records);

// Mean over records of elapsed time for runs solved within the cutoff,
// with every other run charged 10 * cutoff seconds.
double compute_par10(std::span<const RunRecord> records, double cutoff_s);

ClassSummary summarize(std::span<const RunRecord> records, double cutoff_s);

// The seed a benchmark run uses: derived from the base seed, the instance
// path, and the run index, so a record set is reproducible without a seed
// file.
uint64_t run_seed(uint64_t base_seed, std::string_view instance_path,
                  uint32_t run_index);

struct BenchResult {
  std::vector<RunRecord> records;  // instance-major, run-index order
  ClassSummary summary;
};

// Runs every instance runs_per_instance times under cfg (per-run seeds from
// run_seed, timeout set to the cutoff), spread over `workers` threads.
// Records are keyed by (instance, run index), so results are independent of
// worker count and completion order. Timing covers the solve call only.
// Throws ParseError if any instance fails to parse (the class is aborted).
BenchResult run_benchmark(const std::vector<std::string>& instance_paths,
                          const SolverConfig& cfg, uint32_t runs_per_instance,
                          double cutoff_s, uint32_t workers);

// CSV with fixed columns: instance,seed,status,elapsed_s,flips,
// flips_per_sec,mean_visited_per_pick. Doubles are written with enough
// digits to round-trip exactly.
void write_records_csv(std::span<const RunRecord> records, std::ostream& out);
std::vector<RunRecord> read_records_csv(std::istream& in);

// Reads a solver model file: 'v' lines of DIMACS literals ending with 0
// ('c' and 's' lines are skipped). Requires a complete, conflict-free
// assignment over num_vars variables.
Assignment parse_model(std::istream& in, uint32_t num_vars);

}  // namespace wsat
