#ifndef SUDOKU_BACKTRACKING_HPP
#define SUDOKU_BACKTRACKING_HPP

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "sudoku/board.hpp"
#include "sudoku/report.hpp"

namespace sudoku {

/// Empty cells with their candidate lists, frozen on the initial board and sorted by list size
/// (ties row-major).
struct SearchOrder {
  std::vector<CellRef> cells;
  std::vector<DigitSet> lists;
};

SearchOrder order_cells(const Board& board);

/// Called for every partial assignment the search places. `prefix` is the digit string along the
/// search order, e.g. "79232"; `feasible` is false when the last digit repeats in one of its units.
using SearchTrace = std::function<void(std::string_view prefix, bool feasible)>;

struct Enumeration {
  std::vector<Board> solutions;
  std::uint64_t nodes_visited = 0;
  bool exhausted = false;  // true iff the whole search space was explored
};

/// Depth-first search in dictionary order over the static search order. Stops after `cap`
/// solutions. Clues must be unit-consistent.
Enumeration enumerate_solutions(const Puzzle& puzzle, std::size_t cap, const SearchTrace& trace = {});

/// Finds the first solution in dictionary order.
SolveReport solve_by_backtracking(const Puzzle& puzzle);

enum class Uniqueness { unique, multiple, unsatisfiable };

/// Runs the enumeration with cap 2.
Uniqueness check_uniqueness(const Puzzle& puzzle);

}  // namespace sudoku

#endif  // SUDOKU_BACKTRACKING_HPP
