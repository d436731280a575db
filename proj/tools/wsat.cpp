// Command-line front end: instance generation, solving, model verification,
// and the suc/par10 benchmark harness.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsat/bench.hpp"
#include "wsat/cnf.hpp"
#include "wsat/solver.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnknown = 0;
constexpr int kExitError = 1;

struct GenOptions {
  uint32_t num_vars = 0;
  uint32_t width = 3;
  std::optional<uint32_t> num_clauses;
  std::optional<double> ratio;
  uint64_t seed = 0;
  std::string output;
};

struct SolveOptions {
  std::string path;
  std::string strategy = "separated";
  double noise = 0.567;
  uint64_t max_flips = 1'000'000'000;
  std::optional<double> timeout_s;
  uint64_t seed = 0;
  uint32_t restarts = 1;
};

struct BenchOptions {
  std::vector<std::string> inputs;
  std::string strategy = "separated";
  double noise = 0.567;
  uint64_t max_flips = 1'000'000'000;
  uint32_t runs = 10;
  double cutoff_s = 5000.0;
  uint64_t seed = 0;
  uint32_t workers = 1;
  uint32_t restarts = 1;
  std::string output;
};

wsat::Strategy parse_strategy(const std::string& name) {
  auto s = wsat::strategy_from_name(name);
  if (!s)
    throw std::runtime_error("unknown strategy '" + name +
                             "' (expected separated|noncaching|caching)");
  return *s;
}

int run_gen(const GenOptions& opt) {
  if (!opt.num_clauses && !opt.ratio)
    throw std::runtime_error("one of -m/--clauses or -r/--ratio is required");
  uint32_t m;
  if (opt.num_clauses) {
    m = *opt.num_clauses;
  } else {
    m = static_cast<uint32_t>(std::llround(*opt.ratio * opt.num_vars));
  }
  wsat::Formula f =
      wsat::generate_uniform_ksat(opt.num_vars, opt.width, m, opt.seed);
  if (opt.output.empty()) {
    wsat::emit_dimacs(f, std::cout);
  } else {
    std::ofstream out(opt.output);
    if (!out) throw std::runtime_error("cannot open '" + opt.output + "'");
    wsat::emit_dimacs(f, out);
  }
  return 0;
}

void print_model(const wsat::Assignment& model) {
  constexpr int kPerLine = 20;
  int on_line = 0;
  for (wsat::Var v = 0; v < model.num_vars(); ++v) {
    if (on_line == 0) std::cout << 'v';
    std::cout << ' ' << (model.value(v) ? static_cast<int>(v) + 1
                                        : -(static_cast<int>(v) + 1));
    if (++on_line == kPerLine) {
      std::cout << '\n';
      on_line = 0;
    }
  }
  if (on_line == 0) std::cout << 'v';
  std::cout << " 0\n";
}

int run_solve(const SolveOptions& opt) {
  wsat::Formula f = wsat::parse_dimacs_file(opt.path);

  wsat::SolverConfig cfg;
  cfg.strategy = parse_strategy(opt.strategy);
  cfg.noise = opt.noise;
  cfg.max_flips = opt.max_flips;
  cfg.timeout_s = opt.timeout_s;
  cfg.seed = opt.seed;
  cfg.restarts = opt.restarts;

  wsat::SolveOutcome outcome = wsat::solve(f, cfg);

  std::cout << "c strategy " << wsat::strategy_name(cfg.strategy) << " noise "
            << cfg.noise << " seed " << cfg.seed << '\n';
  std::cout << "c flips " << outcome.flips << " elapsed "
            << outcome.elapsed_s << " s";
  if (outcome.elapsed_s > 0.0)
    std::cout << " (" << static_cast<uint64_t>(outcome.flips /
                                               outcome.elapsed_s)
              << " flips/s)";
  std::cout << '\n';
  std::cout << "c mean visited clauses per pick "
            << outcome.pick_stats.mean_visited_per_pick() << '\n';
  if (!outcome.note.empty()) std::cout << "c " << outcome.note << '\n';

  if (outcome.status == wsat::SolveStatus::kSat) {
    std::cout << "s SATISFIABLE\n";
    print_model(*outcome.model);
    return kExitSat;
  }
  std::cout << "s UNKNOWN\n";
  return kExitUnknown;
}

// A directory contributes every *.cnf inside it (sorted); a .cnf path
// contributes itself; any other file is read as a list of paths, one per
// line ('#' comments allowed).
std::vector<std::string> collect_instances(
    const std::vector<std::string>& inputs) {
  std::vector<std::string> paths;
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(input))
        if (entry.is_regular_file() && entry.path().extension() == ".cnf")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else if (input.size() > 4 &&
               input.compare(input.size() - 4, 4, ".cnf") == 0) {
      paths.push_back(input);
    } else {
      std::ifstream list(input);
      if (!list)
        throw std::runtime_error("cannot open instance list '" + input + "'");
      std::string line;
      while (std::getline(list, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        paths.push_back(line);
      }
    }
  }
  if (paths.empty()) throw std::runtime_error("no instances found");
  return paths;
}

int run_bench(const BenchOptions& opt) {
  std::vector<std::string> instances = collect_instances(opt.inputs);

  wsat::SolverConfig cfg;
  cfg.strategy = parse_strategy(opt.strategy);
  cfg.noise = opt.noise;
  cfg.max_flips = opt.max_flips;
  cfg.seed = opt.seed;
  cfg.restarts = opt.restarts;

  wsat::BenchResult result = wsat::run_benchmark(
      instances, cfg, opt.runs, opt.cutoff_s, opt.workers);

  std::ostream& summary_out = opt.output.empty() ? std::cerr : std::cout;
  summary_out << "c instances " << instances.size() << " runs "
              << result.summary.runs << " successes "
              << result.summary.successes << '\n';
  char line[128];
  std::snprintf(line, sizeof line, "c suc %.2f%% par10 %.2f s",
                result.summary.suc, result.summary.par10);
  summary_out << line << '\n';

  if (opt.output.empty()) {
    wsat::write_records_csv(result.records, std::cout);
  } else {
    std::ofstream out(opt.output);
    if (!out) throw std::runtime_error("cannot open '" + opt.output + "'");
    wsat::write_records_csv(result.records, out);
  }
  return 0;
}

int run_verify(const std::string& cnf_path, const std::string& model_path) {
  wsat::Formula f = wsat::parse_dimacs_file(cnf_path);
  std::ifstream model_in(model_path);
  if (!model_in)
    throw std::runtime_error("cannot open model file '" + model_path + "'");
  wsat::Assignment model = wsat::parse_model(model_in, f.num_vars());
  if (wsat::verify_model(f, model)) {
    std::cout << "c model satisfies all " << f.num_clauses() << " clauses\n";
    return 0;
  }
  std::cout << "c model does NOT satisfy the formula\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic local search SAT solver with separated break "
               "computation, instance generator, and benchmark harness"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a uniform random k-SAT "
                                            "instance in DIMACS format");
  gen_cmd->add_option("-n,--vars", gen.num_vars, "number of variables")
      ->required();
  gen_cmd->add_option("-k,--width", gen.width, "clause width (default 3)");
  auto* opt_m = gen_cmd->add_option("-m,--clauses", gen.num_clauses,
                                    "number of clauses");
  auto* opt_r = gen_cmd->add_option("-r,--ratio", gen.ratio,
                                    "clause/variable ratio (m = round(r*n))");
  opt_m->excludes(opt_r);
  opt_r->excludes(opt_m);
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (default 0)");
  gen_cmd->add_option("-o,--output", gen.output,
                      "output file (default stdout)");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "search for a model");
  solve_cmd->add_option("file", solve.path, "DIMACS CNF file")->required();
  solve_cmd->add_option("--strategy", solve.strategy,
                        "separated|noncaching|caching (default separated)");
  solve_cmd->add_option("--noise", solve.noise,
                        "random-walk probability (default 0.567)");
  solve_cmd->add_option("--max-flips", solve.max_flips,
                        "flip budget (default 1e9)");
  solve_cmd->add_option("--timeout", solve.timeout_s,
                        "wall-clock limit in seconds");
  solve_cmd->add_option("--seed", solve.seed, "RNG seed (default 0)");
  solve_cmd->add_option("--restarts", solve.restarts,
                        "independent tries (default 1)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "run instances repeatedly and report suc/par10");
  bench_cmd
      ->add_option("inputs", bench.inputs,
                   "instance files, directories, or list files")
      ->required();
  bench_cmd->add_option("--strategy", bench.strategy,
                        "separated|noncaching|caching (default separated)");
  bench_cmd->add_option("--noise", bench.noise,
                        "random-walk probability (default 0.567)");
  bench_cmd->add_option("--max-flips", bench.max_flips,
                        "flip budget per run (default 1e9)");
  bench_cmd->add_option("--runs", bench.runs,
                        "runs per instance (default 10)");
  bench_cmd->add_option("--cutoff", bench.cutoff_s,
                        "cutoff seconds per run (default 5000)");
  bench_cmd->add_option("--seed", bench.seed, "base seed (default 0)");
  bench_cmd->add_option("--workers", bench.workers,
                        "parallel workers (default 1)");
  bench_cmd->add_option("--restarts", bench.restarts,
                        "restarts per run (default 1)");
  bench_cmd->add_option("-o,--output", bench.output, "CSV output file");

  std::string verify_cnf, verify_model_path;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a model file against a CNF");
  verify_cmd->add_option("cnf", verify_cnf, "DIMACS CNF file")->required();
  verify_cmd->add_option("model", verify_model_path,
                         "model file with 'v' lines")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (solve_cmd->parsed()) return run_solve(solve);
    if (bench_cmd->parsed()) return run_bench(bench);
    if (verify_cmd->parsed()) return run_verify(verify_cnf, verify_model_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
