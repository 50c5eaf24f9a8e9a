#include "sudoku/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sudoku/annealing.hpp"
#include "sudoku/backtracking.hpp"
#include "sudoku/bench.hpp"
#include "sudoku/projections.hpp"

namespace sudoku {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string method;
  std::string input_path;
  std::string inline_puzzle;
  bool line = false;
  bool grid = false;
  std::string trace_path;

  AnnealConfig annealing;
  ProjectionConfig projection;

  std::vector<std::string> suites;
  std::string methods = "backtracking,annealing,projection";
  std::string csv_path;
  std::string stats_csv_path;
  std::uint64_t base_seed = 0;
  unsigned jobs = 1;
};

void add_annealing_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--seed", o.annealing.seed, "Annealing RNG seed");
  cmd.add_option("--max-iters", o.annealing.max_iterations, "Annealing iteration cap")->capture_default_str();
  cmd.add_option("--reset-at", o.annealing.reset_at, "Iteration at which the temperature is reset")
      ->capture_default_str();
  cmd.add_option("--t0", o.annealing.initial_temperature, "Initial temperature")->capture_default_str();
  cmd.add_option("--cool", o.annealing.cooling_factor, "Cooling factor")->capture_default_str();
  cmd.add_option("--period", o.annealing.cooling_period, "Proposals between coolings")->capture_default_str();
}

void add_projection_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--max-sweeps", o.projection.max_sweeps, "Projection sweep cap")->capture_default_str();
  cmd.add_option("--tol", o.projection.stall_tolerance, "Stall tolerance on the largest entry change")
      ->capture_default_str();
}

void add_input_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--input", o.input_path, "Puzzle file (line or grid format)");
  cmd.add_option("puzzle", o.inline_puzzle, "Inline 81-character puzzle");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  std::string line;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') buf << line << '\n';
  return buf.str();
}

Puzzle load_puzzle(const Options& o) {
  if (!o.input_path.empty()) return parse_puzzle(read_text(o.input_path));
  if (!o.inline_puzzle.empty()) return parse_puzzle(o.inline_puzzle);
  throw std::invalid_argument("no puzzle given (use --input FILE or an inline 81-character puzzle)");
}

std::vector<Method> parse_method_list(const std::string& list) {
  std::vector<Method> out;
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto m = parse_method(name);
    if (!m) throw std::invalid_argument("unknown method '" + name + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw std::invalid_argument("empty method list");
  return out;
}

int do_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto method = parse_method(o.method);
  if (!method) {
    err << "unknown method '" << o.method << "'\n";
    return kExitUsage;
  }
  Puzzle puzzle;
  try {
    puzzle = load_puzzle(o);
    o.annealing.validate();
    o.projection.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream trace_file;
  if (!o.trace_path.empty()) {
    trace_file.open(o.trace_path);
    if (!trace_file) {
      err << "error: cannot write " << o.trace_path << '\n';
      return kExitUsage;
    }
  }

  SolveReport r;
  switch (*method) {
    case Method::backtracking: r = solve_by_backtracking(puzzle); break;
    case Method::annealing:
      r = anneal(puzzle, o.annealing, trace_file.is_open() ? csv_trace(trace_file) : AnnealObserver{});
      break;
    case Method::projection:
      r = solve_by_projection(puzzle, o.projection,
                              trace_file.is_open() ? csv_sweep_trace(trace_file) : SweepObserver{});
      break;
  }

  if (!r.solved) {
    err << method_name(r.method) << ": unsolved after " << r.work << " steps (cost " << r.final_cost << ")";
    if (!r.note.empty()) err << ": " << r.note;
    err << '\n';
    return kExitFailed;
  }
  out << render_board(r.board, o.line ? RenderStyle::line : RenderStyle::grid);
  if (o.line) out << '\n';
  err << method_name(r.method) << ": solved, work " << r.work << ", " << r.wall_time_s << " s\n";
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Puzzle puzzle;
  try {
    puzzle = load_puzzle(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  switch (check_uniqueness(puzzle)) {
    case Uniqueness::unique: out << "unique\n"; return kExitOk;
    case Uniqueness::multiple: out << "multiple\n"; return kExitFailed;
    case Uniqueness::unsatisfiable: out << "unsatisfiable\n"; return kExitFailed;
  }
  return kExitFailed;
}

int do_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<PuzzleSuite> suites;
  std::vector<Method> methods;
  try {
    methods = parse_method_list(o.methods);
    o.annealing.validate();
    o.projection.validate();
    for (const auto& arg : o.suites) {
      // NAME=PATH or PATH (name taken from the file stem)
      const auto eq = arg.find('=');
      const std::string path = eq == std::string::npos ? arg : arg.substr(eq + 1);
      const std::string name = eq == std::string::npos ? std::filesystem::path(path).stem().string() : arg.substr(0, eq);
      suites.push_back(load_suite(path, name));
      if (suites.back().puzzles.empty()) throw std::invalid_argument("suite " + name + " has no puzzles");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  BenchConfig config;
  config.annealing = o.annealing;
  config.projection = o.projection;
  config.base_seed = o.base_seed;
  config.jobs = std::max(1u, o.jobs);

  std::vector<BenchRecord> records;
  for (const auto& suite : suites) {
    auto part = run_bench(suite, methods, config);
    records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  for (const auto& r : records)
    if (!r.report.note.empty() && !r.report.solved && r.report.note.rfind("error", 0) == 0)
      err << r.suite << " #" << r.puzzle_id << " " << method_name(r.report.method) << ": " << r.report.note << '\n';

  const auto stats = summarize(records);
  try {
    if (!o.csv_path.empty()) export_csv(std::span<const BenchRecord>(records), o.csv_path);
    if (!o.stats_csv_path.empty()) export_csv(std::span<const SummaryStats>(stats), o.stats_csv_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  out << format_stats_table(stats);
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sudoku solver workbench: backtracking, simulated annealing, alternating projections", "sudoku"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Solve one puzzle");
  solve->add_option("--method", o.method, "backtracking | annealing | projection")->required();
  add_input_flags(*solve, o);
  auto* line_flag = solve->add_flag("--line", o.line, "Print the solution as one 81-character line");
  solve->add_flag("--grid", o.grid, "Print the solution as a 9x9 grid (default)")->excludes(line_flag);
  solve->add_option("--trace", o.trace_path, "Write a per-iteration (annealing) or per-sweep (projection) CSV");
  add_annealing_flags(*solve, o);
  add_projection_flags(*solve, o);

  auto* verify = app.add_subcommand("verify", "Check whether a puzzle has a unique solution");
  add_input_flags(*verify, o);

  auto* bench = app.add_subcommand("bench", "Run solvers over puzzle suites");
  bench->add_option("--suite", o.suites, "Suite file, optionally NAME=FILE; repeatable")->required();
  bench->add_option("--methods", o.methods, "Comma-separated method list")->capture_default_str();
  bench->add_option("--csv", o.csv_path, "Per-run reports CSV output");
  bench->add_option("--stats-csv", o.stats_csv_path, "Summary statistics CSV output");
  bench->add_option("--base-seed", o.base_seed, "Annealing seed for the first puzzle; puzzle i uses base+i");
  bench->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  add_annealing_flags(*bench, o);
  add_projection_flags(*bench, o);

  std::vector<const char*> argv;
  argv.push_back("sudoku");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return do_solve(o, out, err);
    if (verify->parsed()) return do_verify(o, out, err);
    return do_bench(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace sudoku
