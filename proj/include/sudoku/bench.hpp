#ifndef SUDOKU_BENCH_HPP
#define SUDOKU_BENCH_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sudoku/annealing.hpp"
#include "sudoku/board.hpp"
#include "sudoku/projections.hpp"
#include "sudoku/report.hpp"

namespace sudoku {

struct SuiteEntry {
  std::size_t id = 0;  // 1-based position among the suite's puzzles
  Puzzle puzzle;
};

struct PuzzleSuite {
  std::string name;
  std::vector<SuiteEntry> puzzles;
};

class SuiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One line-format puzzle per line; blank lines and lines starting with '#' are skipped.
PuzzleSuite load_suite(const std::filesystem::path& path, const std::string& name);
PuzzleSuite parse_suite(const std::string& text, const std::string& name);

struct BenchConfig {
  AnnealConfig annealing;  // seed is overridden per puzzle with base_seed + index
  ProjectionConfig projection;
  std::uint64_t base_seed = 0;
  unsigned jobs = 1;
};

struct BenchRecord {
  std::string suite;
  std::size_t puzzle_id = 0;
  SolveReport report;
};

/// Runs every method on every puzzle. Results come back in suite order, methods in the order given.
/// Solver exceptions become unsolved records with the message in `note`. A claimed solution that
/// fails the harness's own check is downgraded to unsolved.
std::vector<BenchRecord> run_bench(const PuzzleSuite& suite, std::span<const Method> methods,
                                   const BenchConfig& config);

SolveReport run_method(Method method, const Puzzle& puzzle, const BenchConfig& config, std::size_t index);

struct TimeStats {
  double min = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct SummaryStats {
  std::string suite;
  Method method = Method::backtracking;
  std::size_t total = 0;
  std::size_t solved = 0;
  double success_rate = 0.0;
  std::optional<TimeStats> times;  // over solved runs only; absent if none solved
};

/// Throws std::invalid_argument on an empty sample. Even counts take the mean of the two middle values.
TimeStats time_stats(std::span<const double> seconds);

/// One entry per (suite, method) pair in order of first appearance.
std::vector<SummaryStats> summarize(std::span<const BenchRecord> records);

inline constexpr const char* kReportsHeader = "suite,puzzle_id,method,solved,wall_time_s,work";
inline constexpr const char* kStatsHeader = "suite,method,success_rate,min_s,median_s,mean_s,max_s";

std::string reports_csv(std::span<const BenchRecord> records);
std::string stats_csv(std::span<const SummaryStats> stats);
void export_csv(std::span<const BenchRecord> records, const std::filesystem::path& path);
void export_csv(std::span<const SummaryStats> stats, const std::filesystem::path& path);

/// Parses the reports CSV back. Boards are not stored in the file and come back empty.
std::vector<BenchRecord> read_reports_csv(const std::string& text);

/// Fixed-width table of the summary for terminal output.
std::string format_stats_table(std::span<const SummaryStats> stats);

}  // namespace sudoku

#endif  // SUDOKU_BENCH_HPP
