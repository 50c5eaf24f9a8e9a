#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sudoku/board.hpp"

using namespace sudoku;
using sudoku::testing::kLocalMinimumBoard;
using sudoku::testing::kSamplePuzzle;

TEST_CASE("unit table geometry") {
  const auto& t = unit_table();
  std::array<int, kCells> appearances{};
  for (const auto& unit : t.units) {
    std::set<int> distinct(unit.begin(), unit.end());
    CHECK(distinct.size() == 9);
    for (int idx : unit) ++appearances[static_cast<std::size_t>(idx)];
  }
  for (int n : appearances) CHECK(n == 3);
  CHECK(CellRef{9, 2}.box() == 6);
  CHECK(CellRef::from_index(CellRef{7, 4}.index()) == CellRef{7, 4});
}

TEST_CASE("parse_puzzle") {
  SUBCASE("sample puzzle has 35 clues") {
    const Puzzle p = parse_puzzle(kSamplePuzzle);
    CHECK(p.clue_count() == 35);
    CHECK(p.board.at({1, 1}) == 1);
    CHECK(p.board.at({9, 8}) == 2);
    CHECK(p.board.at({9, 9}) == 0);
    CHECK_FALSE(p.clues[CellRef{9, 9}.index()]);
  }
  SUBCASE("all empty") {
    const Puzzle p = parse_puzzle(std::string(81, '.'));
    CHECK(p.clue_count() == 0);
    CHECK(parse_puzzle(std::string(81, '0')).board == p.board);
  }
  SUBCASE("illegal character reports its index") {
    std::string s(81, '.');
    s[17] = 'X';
    try {
      parse_puzzle(s);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 17);
    }
  }
  SUBCASE("wrong length") {
    CHECK_THROWS_AS(parse_puzzle(std::string(80, '.')), ParseError);
    CHECK_THROWS_AS(parse_puzzle(std::string(82, '.')), ParseError);
  }
  SUBCASE("clues repeating a digit in a unit are rejected") {
    std::string s(81, '.');
    s[0] = '5';
    s[CellRef{3, 3}.index()] = '5';
    CHECK_THROWS_AS(parse_puzzle(s), InconsistentPuzzle);
  }
  SUBCASE("grid format with separators and a trailing newline") {
    const Puzzle p = parse_puzzle(render_board(parse_puzzle(kSamplePuzzle).board, RenderStyle::grid));
    CHECK(render_board(p.board) == kSamplePuzzle);
    CHECK(parse_puzzle(kSamplePuzzle + "\n").board == p.board);
  }
}

TEST_CASE("render_board") {
  CHECK(render_board(Board{}) == std::string(81, '.'));
  CHECK(render_board(parse_puzzle(kSamplePuzzle).board) == kSamplePuzzle);
  const std::string grid = render_board(parse_puzzle(kSamplePuzzle).board, RenderStyle::grid);
  CHECK(std::count(grid.begin(), grid.end(), '\n') == 11);
  CHECK(grid.substr(0, 22) == "1 5 7 | 6 4 . | . 8 .\n");
}

TEST_CASE("render/parse round trip on random boards") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Board b;
    std::uniform_int_distribution<int> digit(0, 9);
    for (int i = 0; i < kCells; ++i) b.set(i, digit(rng));
    CHECK(parse_board(render_board(b)) == b);
    CHECK(parse_board(render_board(b, RenderStyle::grid)) == b);
  }
}

TEST_CASE("violation_cost") {
  const Board fig = parse_board(kLocalMinimumBoard);
  CHECK(violation_cost(fig) == 2);

  Board ones;
  for (int i = 0; i < kCells; ++i) ones.set(i, 1);
  CHECK(violation_cost(ones) == 216);

  std::mt19937_64 rng(1);
  CHECK(violation_cost(oracle::random_solution(rng)) == 0);
  CHECK(violation_cost(Board{}) == 243);
}

TEST_CASE("violation_cost is invariant under unit-preserving relabeling") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> digit(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::Grid g{};
    for (auto& v : g) v = digit(rng);
    const int cost = violation_cost(oracle::to_board(g));
    CHECK(violation_cost(oracle::to_board(oracle::random_relabel(g, rng))) == cost);
  }
}

TEST_CASE("cell_violation_degree") {
  const Board fig = parse_board(kLocalMinimumBoard);
  for (CellRef c : {CellRef{1, 6}, CellRef{6, 6}, CellRef{2, 5}, CellRef{7, 5}}) CHECK(cell_violation_degree(fig, c) == 1);
  CHECK(cell_violation_degree(fig, {1, 1}) == 0);

  Board ones;
  for (int i = 0; i < kCells; ++i) ones.set(i, 1);
  CHECK(cell_violation_degree(ones, {5, 5}) == 3);

  std::mt19937_64 rng(3);
  const Board solved = oracle::random_solution(rng);
  for (int i = 0; i < kCells; ++i) CHECK(cell_violation_degree(solved, CellRef::from_index(i)) == 0);
}

TEST_CASE("sum of degrees bounds the cost on random full boards") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> digit(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    Board b;
    for (int i = 0; i < kCells; ++i) b.set(i, digit(rng));
    int total = 0;
    for (int i = 0; i < kCells; ++i) total += cell_violation_degree(b, CellRef::from_index(i));
    CHECK(total >= violation_cost(b));
  }
}

TEST_CASE("candidates") {
  const Board b = parse_puzzle(kSamplePuzzle).board;
  CHECK(candidates(b, {7, 4}).digits() == std::vector<int>{7});
  CHECK(candidates(b, {9, 5}).digits() == std::vector<int>{9});
  CHECK(candidates(b, {1, 6}).digits() == std::vector<int>{2, 3});
  CHECK(candidates(b, {1, 7}).digits() == std::vector<int>{3, 9});
  CHECK(candidates(b, {1, 9}).digits() == std::vector<int>{2, 3});
  CHECK(candidates(b, {2, 9}).digits() == std::vector<int>{2, 3, 5, 6, 7});
  CHECK(candidates(Board{}, {4, 4}) == DigitSet::all());
  CHECK_THROWS_AS(candidates(b, {1, 1}), std::invalid_argument);
}

TEST_CASE("candidates exclude every digit in the cell's units") {
  std::mt19937_64 rng(9);
  const auto& t = unit_table();
  for (int trial = 0; trial < 50; ++trial) {
    Board b = oracle::random_solution(rng);
    for (int i = 0; i < kCells; ++i)
      if (std::bernoulli_distribution(0.6)(rng)) b.set(i, 0);
    for (int i = 0; i < kCells; ++i) {
      if (b[i] != 0) continue;
      const DigitSet cand = candidates(b, CellRef::from_index(i));
      for (int u : t.units_of_cell[static_cast<std::size_t>(i)])
        for (int other : t.units[static_cast<std::size_t>(u)])
          if (b[other] != 0) CHECK_FALSE(cand.contains(b[other]));
      CHECK_FALSE(cand.empty());  // a subset of a solution always leaves the true digit
    }
  }
}

TEST_CASE("is_solved") {
  CHECK_FALSE(is_solved(Board{}));
  CHECK_FALSE(is_solved(parse_board(kLocalMinimumBoard)));
  std::mt19937_64 rng(2);
  Board s = oracle::random_solution(rng);
  CHECK(is_solved(s));
  s.set(40, 0);
  CHECK_FALSE(is_solved(s));
}
