#include "wsat/bench.hpp"

#include <atomic>
#include <mutex>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wsat {

bool verify_model(const Formula& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars())
    throw std::invalid_argument("model covers " +
                                std::to_string(a.num_vars()) +
                                " variables, formula has " +
                                std::to_string(f.num_vars()));
  for (uint32_t c = 0; c < f.num_clauses(); ++c) {
    bool satisfied = false;
    for (Lit l : f.clause(c)) {
      if (a.satisfies(l)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

namespace {
bool successful(const RunRecord& r, double cutoff_s) {
  return r.status == SolveStatus::kSat && r.elapsed_s <= cutoff_s;
}
}  // namespace

double compute_suc(std::span<const RunRecord> records) {
  if (records.empty()) throw std::invalid_argument("no records");
  uint64_t successes = 0;
  for (const auto& r : records)
    if (r.status == SolveStatus::kSat) ++successes;
  return 100.0 * static_cast<double>(successes) / records.size();
}

double compute_par10(std::span<const RunRecord> records, double cutoff_s) {
  if (records.empty()) throw std::invalid_argument("no records");
  if (!(cutoff_s > 0.0)) throw std::invalid_argument("cutoff must be > 0");
  double total = 0.0;
  for (const auto& r : records)
    total += successful(r, cutoff_s) ? r.elapsed_s : 10.0 * cutoff_s;
  return total / records.size();
}

ClassSummary summarize(std::span<const RunRecord> records, double cutoff_s) {
  ClassSummary s;
  s.runs = records.size();
  for (const auto& r : records)
    if (r.status == SolveStatus::kSat) ++s.successes;
  s.suc = compute_suc(records);
  s.par10 = compute_par10(records, cutoff_s);
  return s;
}

uint64_t run_seed(uint64_t base_seed, std::string_view instance_path,
                  uint32_t run_index) {
  return seed_combine(seed_combine(base_seed, hash_bytes(instance_path)),
                      run_index);
}

BenchResult run_benchmark(const std::vector<std::string>& instance_paths,
                          const SolverConfig& cfg, uint32_t runs_per_instance,
                          double cutoff_s, uint32_t workers) {
  if (instance_paths.empty()) throw std::invalid_argument("no instances");
  if (runs_per_instance < 1)
    throw std::invalid_argument("runs_per_instance must be >= 1");
  if (!(cutoff_s > 0.0)) throw std::invalid_argument("cutoff must be > 0");
  if (workers < 1) workers = 1;

  std::vector<Formula> formulas;
  formulas.reserve(instance_paths.size());
  for (const auto& path : instance_paths) {
    try {
      formulas.push_back(parse_dimacs_file(path));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  const size_t total = instance_paths.size() * runs_per_instance;
  std::vector<RunRecord> records(total);

  std::atomic<size_t> next{0};
  std::atomic<bool> aborted{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!aborted.load(std::memory_order_relaxed)) {
      const size_t task = next.fetch_add(1);
      if (task >= total) return;
      const size_t inst = task / runs_per_instance;
      const uint32_t run = static_cast<uint32_t>(task % runs_per_instance);

      SolverConfig run_cfg = cfg;
      run_cfg.seed = run_seed(cfg.seed, instance_paths[inst], run);
      run_cfg.timeout_s = cutoff_s;

      try {
        const SolveOutcome outcome = solve(formulas[inst], run_cfg);
        RunRecord& rec = records[task];
        rec.instance = instance_paths[inst];
        rec.seed = run_cfg.seed;
        rec.status = outcome.status;
        rec.elapsed_s = outcome.elapsed_s;
        rec.flips = outcome.flips;
        rec.flips_per_sec =
            outcome.elapsed_s > 0.0 ? outcome.flips / outcome.elapsed_s : 0.0;
        rec.mean_visited_per_pick = outcome.pick_stats.mean_visited_per_pick();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        aborted.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint32_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  BenchResult result;
  result.records = std::move(records);
  result.summary = summarize(result.records, cutoff_s);
  return result;
}

namespace {

// Shortest-exact formatting is not available pre-C++23, so 17 significant
// digits: every double round-trips.
std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

void write_records_csv(std::span<const RunRecord> records, std::ostream& out) {
  out << "instance,seed,status,elapsed_s,flips,flips_per_sec,"
         "mean_visited_per_pick\n";
  for (const auto& r : records) {
    out << r.instance << ',' << r.seed << ',' << status_name(r.status) << ','
        << format_double(r.elapsed_s) << ',' << r.flips << ','
        << format_double(r.flips_per_sec) << ','
        << format_double(r.mean_visited_per_pick) << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != 7)
      throw std::runtime_error("malformed CSV row: " + line);
    RunRecord r;
    r.instance = fields[0];
    r.seed = std::strtoull(fields[1].c_str(), nullptr, 10);
    if (fields[2] == "SAT")
      r.status = SolveStatus::kSat;
    else if (fields[2] == "UNKNOWN")
      r.status = SolveStatus::kUnknown;
    else
      throw std::runtime_error("unknown status: " + fields[2]);
    r.elapsed_s = std::strtod(fields[3].c_str(), nullptr);
    r.flips = std::strtoull(fields[4].c_str(), nullptr, 10);
    r.flips_per_sec = std::strtod(fields[5].c_str(), nullptr);
    r.mean_visited_per_pick = std::strtod(fields[6].c_str(), nullptr);
    records.push_back(std::move(r));
  }
  return records;
}

Assignment parse_model(std::istream& in, uint32_t num_vars) {
  std::vector<int8_t> seen(num_vars, 0);  // 0 unset, +1 true, -1 false
  std::string line;
  bool done = false;
  bool any = false;
  while (!done && std::getline(in, line)) {
    if (line.empty() || line[0] != 'v') continue;
    any = true;
    std::istringstream tokens(line.substr(1));
    long long lit;
    while (tokens >> lit) {
      if (lit == 0) {
        done = true;
        break;
      }
      const uint64_t v = static_cast<uint64_t>(lit > 0 ? lit : -lit);
      if (v > num_vars)
        throw std::runtime_error("model literal " + std::to_string(lit) +
                                 " out of range (formula has " +
                                 std::to_string(num_vars) + " variables)");
      const int8_t value = lit > 0 ? 1 : -1;
      if (seen[v - 1] != 0 && seen[v - 1] != value)
        throw std::runtime_error("conflicting values for variable " +
                                 std::to_string(v));
      seen[v - 1] = value;
    }
  }
  if (!any) throw std::runtime_error("no 'v' lines in model file");

  Assignment a(num_vars);
  for (uint32_t v = 0; v < num_vars; ++v) {
    if (seen[v] == 0)
      throw std::runtime_error("incomplete model: variable " +
                               std::to_string(v + 1) + " unassigned");
    a.set(v, seen[v] > 0);
  }
  return a;
}

}  // namespace wsat
