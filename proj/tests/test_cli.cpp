#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "sudoku/backtracking.hpp"
#include "sudoku/bench.hpp"
#include "sudoku/cli.hpp"

using namespace sudoku;
using sudoku::testing::data_path;
using sudoku::testing::kSamplePuzzle;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string hard_line() {
  return render_board(sudoku::testing::bundled_suite("hard").puzzles.front().puzzle.board);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("solve") {
  SUBCASE("backtracking on the sample puzzle, line output") {
    const Run r = cli({"solve", "--method", "backtracking", "--line", kSamplePuzzle});
    CHECK(r.code == 0);
    const Board expected = enumerate_solutions(parse_puzzle(kSamplePuzzle), 1).solutions.front();
    CHECK(r.out == render_board(expected) + "\n");
  }
  SUBCASE("grid output is the default and reads back") {
    const Run r = cli({"solve", "--method", "backtracking", "--input", data_path("sample.txt")});
    CHECK(r.code == 0);
    CHECK(is_solved(parse_board(r.out)));
    CHECK(r.out.find('|') != std::string::npos);
  }
  SUBCASE("projection") {
    const std::string easy = render_board(sudoku::testing::bundled_suite("easy").puzzles.front().puzzle.board);
    const Run r = cli({"solve", "--method", "projection", "--line", easy});
    CHECK(r.code == 0);
    CHECK(parse_board(r.out) == solve_by_backtracking(parse_puzzle(easy)).board);
  }
  SUBCASE("annealing is reproducible for a fixed seed") {
    const std::vector<std::string> args = {"solve", "--method", "annealing", "--seed", "3", "--line", kSamplePuzzle};
    const Run a = cli(args);
    const Run b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  SUBCASE("an unsolved run exits 1") {
    const Run r = cli({"solve", "--method", "annealing", "--max-iters", "10", "--reset-at", "10", hard_line()});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("unsolved") != std::string::npos);
  }
  SUBCASE("annealing trace file") {
    const auto path = std::filesystem::temp_directory_path() / "sudoku_cli_trace.csv";
    const Run r = cli({"solve", "--method", "annealing", "--max-iters", "50", "--reset-at", "50", "--trace",
                       path.string(), hard_line()});
    CHECK(r.code == 1);
    const std::string text = slurp(path);
    std::filesystem::remove(path);
    CHECK(text.rfind("iteration,cost,temperature\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 51);
  }
}

TEST_CASE("verify") {
  CHECK(cli({"verify", hard_line()}).out == "unique\n");
  CHECK(cli({"verify", hard_line()}).code == 0);
  const Run empty = cli({"verify", std::string(81, '.')});
  CHECK(empty.out == "multiple\n");
  CHECK(empty.code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"solve", "--method", "backtracking", "--bogus", kSamplePuzzle}).code == 2);
  CHECK(cli({"solve", kSamplePuzzle}).code == 2);
  CHECK(cli({"solve", "--method", "genetic", kSamplePuzzle}).code == 2);
  CHECK(cli({"solve", "--method", "backtracking", kSamplePuzzle.substr(0, 80)}).code == 2);
  CHECK(cli({"solve", "--method", "backtracking", "--line", "--grid", kSamplePuzzle}).code == 2);
  CHECK(cli({"solve", "--method", "annealing", "--cool", "1.5", kSamplePuzzle}).code == 2);
  CHECK(cli({"solve", "--method", "backtracking", "--input", "/nonexistent"}).code == 2);
  CHECK(cli({"bench", "--suite", "/nonexistent.txt"}).code == 2);
  CHECK(cli({"bench", "--suite", data_path("easy.txt"), "--methods", "x"}).code == 2);
  const Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("solve") != std::string::npos);
}

TEST_CASE("bench") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "sudoku_cli_reports.csv";
  const auto stats = dir / "sudoku_cli_stats.csv";
  const Run r = cli({"bench", "--suite", "e=" + data_path("easy.txt"), "--suite",
                     data_path("medium.txt"), "--methods", "backtracking,projection", "--csv",
                     csv.string(), "--stats-csv", stats.string(), "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("backtracking") != std::string::npos);

  const auto records = read_reports_csv(slurp(csv));
  CHECK(records.size() == 40);
  CHECK(records.front().suite == "e");
  CHECK(records.back().suite == "medium");
  for (const auto& rec : records)
    if (rec.report.method == Method::backtracking) CHECK(rec.report.solved);

  const std::string s = slurp(stats);
  CHECK(s.rfind(std::string(kStatsHeader) + "\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 5);
  CHECK(s.find("e,backtracking,1.000000,") != std::string::npos);
  std::filesystem::remove(csv);
  std::filesystem::remove(stats);
}
