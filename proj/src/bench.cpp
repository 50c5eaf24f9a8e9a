#include "sudoku/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "sudoku/backtracking.hpp"

namespace sudoku {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::backtracking: return "backtracking";
    case Method::annealing: return "annealing";
    case Method::projection: return "projection";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::backtracking, Method::annealing, Method::projection})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

PuzzleSuite parse_suite(const std::string& text, const std::string& name) {
  PuzzleSuite suite{name, {}};
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      suite.puzzles.push_back({suite.puzzles.size() + 1, parse_puzzle(line)});
    } catch (const std::invalid_argument& e) {
      throw SuiteError(name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return suite;
}

PuzzleSuite load_suite(const std::filesystem::path& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw SuiteError("cannot open suite file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_suite(buf.str(), name);
}

SolveReport run_method(Method method, const Puzzle& puzzle, const BenchConfig& config, std::size_t index) {
  switch (method) {
    case Method::backtracking: return solve_by_backtracking(puzzle);
    case Method::annealing: {
      AnnealConfig ac = config.annealing;
      ac.seed = config.base_seed + index;
      return anneal(puzzle, ac);
    }
    case Method::projection: return solve_by_projection(puzzle, config.projection);
  }
  throw std::invalid_argument("unknown method");
}

std::vector<BenchRecord> run_bench(const PuzzleSuite& suite, std::span<const Method> methods,
                                   const BenchConfig& config) {
  if (suite.puzzles.empty()) throw std::invalid_argument("bench needs a nonempty suite");
  if (methods.empty()) throw std::invalid_argument("bench needs at least one method");

  const std::size_t jobs_total = suite.puzzles.size() * methods.size();
  std::vector<BenchRecord> out(jobs_total);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t j = next++; j < jobs_total; j = next++) {
      const std::size_t p = j / methods.size();
      const Method m = methods[j % methods.size()];
      const auto& entry = suite.puzzles[p];
      BenchRecord rec{suite.name, entry.id, {}};
      try {
        rec.report = run_method(m, entry.puzzle, config, p);
      } catch (const std::exception& e) {
        rec.report.method = m;
        rec.report.solved = false;
        rec.report.board = entry.puzzle.board;
        rec.report.note = std::string("error: ") + e.what();
      }
      if (rec.report.solved && !(is_solved(rec.report.board) && agrees_with_clues(rec.report.board, entry.puzzle))) {
        rec.report.solved = false;
        rec.report.note = "claimed solution failed verification";
      }
      out[j] = std::move(rec);
    }
  };

  const unsigned n_threads = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(jobs_total)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

TimeStats time_stats(std::span<const double> seconds) {
  if (seconds.empty()) throw std::invalid_argument("time statistics need at least one value");
  std::vector<double> v(seconds.begin(), seconds.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  TimeStats s;
  s.min = v.front();
  s.max = v.back();
  s.median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
  return s;
}

std::vector<SummaryStats> summarize(std::span<const BenchRecord> records) {
  if (records.empty()) throw std::invalid_argument("nothing to summarize");
  std::vector<SummaryStats> out;
  std::vector<std::vector<double>> times;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const SummaryStats& s) { return s.suite == r.suite && s.method == r.report.method; });
    if (it == out.end()) {
      out.push_back({r.suite, r.report.method, 0, 0, 0.0, std::nullopt});
      times.emplace_back();
      it = out.end() - 1;
    }
    const auto slot = static_cast<std::size_t>(it - out.begin());
    ++it->total;
    if (r.report.solved) {
      ++it->solved;
      times[slot].push_back(r.report.wall_time_s);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].success_rate = static_cast<double>(out[i].solved) / static_cast<double>(out[i].total);
    if (!times[i].empty()) out[i].times = time_stats(times[i]);
  }
  return out;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string reports_csv(std::span<const BenchRecord> records) {
  std::string out = std::string(kReportsHeader) + "\n";
  for (const auto& r : records) {
    out += r.suite + "," + std::to_string(r.puzzle_id) + "," + std::string(method_name(r.report.method)) + "," +
           (r.report.solved ? "1" : "0") + "," + fixed6(r.report.wall_time_s) + "," + std::to_string(r.report.work) +
           "\n";
  }
  return out;
}

std::string stats_csv(std::span<const SummaryStats> stats) {
  std::string out = std::string(kStatsHeader) + "\n";
  for (const auto& s : stats) {
    out += s.suite + "," + std::string(method_name(s.method)) + "," + fixed6(s.success_rate);
    if (s.times) {
      out += "," + fixed6(s.times->min) + "," + fixed6(s.times->median) + "," + fixed6(s.times->mean) + "," +
             fixed6(s.times->max);
    } else {
      out += ",,,,";
    }
    out += "\n";
  }
  return out;
}

void export_csv(std::span<const BenchRecord> records, const std::filesystem::path& path) {
  write_file(path, reports_csv(records));
}

void export_csv(std::span<const SummaryStats> stats, const std::filesystem::path& path) {
  write_file(path, stats_csv(stats));
}

std::vector<BenchRecord> read_reports_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kReportsHeader) throw std::invalid_argument("missing reports CSV header");
  std::vector<BenchRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 6) throw std::invalid_argument("malformed reports CSV row: " + line);
    const auto method = parse_method(f[2]);
    if (!method) throw std::invalid_argument("unknown method in reports CSV: " + f[2]);
    BenchRecord r;
    r.suite = f[0];
    r.puzzle_id = std::stoul(f[1]);
    r.report.method = *method;
    r.report.solved = f[3] == "1";
    r.report.wall_time_s = std::stod(f[4]);
    r.report.work = std::stoull(f[5]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_stats_table(std::span<const SummaryStats> stats) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-12s %-13s %8s %10s %10s %10s %10s\n", "suite", "method", "success", "min_s",
                "median_s", "mean_s", "max_s");
  out += buf;
  for (const auto& s : stats) {
    const std::string name(method_name(s.method));
    if (s.times) {
      std::snprintf(buf, sizeof buf, "%-12s %-13s %8.2f %10.6f %10.6f %10.6f %10.6f\n", s.suite.c_str(), name.c_str(),
                    s.success_rate, s.times->min, s.times->median, s.times->mean, s.times->max);
    } else {
      std::snprintf(buf, sizeof buf, "%-12s %-13s %8.2f %10s %10s %10s %10s\n", s.suite.c_str(), name.c_str(),
                    s.success_rate, "-", "-", "-", "-");
    }
    out += buf;
  }
  return out;
}

}  // namespace sudoku
