#include "sudoku/backtracking.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

namespace sudoku {

SearchOrder order_cells(const Board& board) {
  std::vector<int> empties;
  std::vector<DigitSet> lists(kCells);
  for (int i = 0; i < kCells; ++i) {
    if (board[i] != 0) continue;
    empties.push_back(i);
    lists[static_cast<std::size_t>(i)] = candidates(board, CellRef::from_index(i));
  }
  // Row-major input plus a stable sort gives the row-major tie-break.
  std::stable_sort(empties.begin(), empties.end(), [&](int a, int b) {
    return lists[static_cast<std::size_t>(a)].size() < lists[static_cast<std::size_t>(b)].size();
  });
  SearchOrder order;
  order.cells.reserve(empties.size());
  order.lists.reserve(empties.size());
  for (int i : empties) {
    order.cells.push_back(CellRef::from_index(i));
    order.lists.push_back(lists[static_cast<std::size_t>(i)]);
  }
  return order;
}

namespace {

class Search {
 public:
  Search(const Puzzle& puzzle, std::size_t cap, const SearchTrace& trace)
      : board_(puzzle.board), order_(order_cells(puzzle.board)), cap_(cap), trace_(trace) {
    const auto& t = unit_table();
    for (int i = 0; i < kCells; ++i) {
      const int d = board_[i];
      if (d == 0) continue;
      for (int u : t.units_of_cell[static_cast<std::size_t>(i)]) used_[static_cast<std::size_t>(u)].insert(d);
    }
    digits_.reserve(order_.cells.size());
    for (const auto& list : order_.lists) digits_.push_back(list.digits());
  }

  Enumeration run() {
    Enumeration out;
    const bool stopped = descend(0, out);
    out.exhausted = !stopped;
    out.nodes_visited = nodes_;
    return out;
  }

 private:
  // Returns true once the cap is reached.
  bool descend(std::size_t depth, Enumeration& out) {
    if (depth == order_.cells.size()) {
      out.solutions.push_back(board_);
      return out.solutions.size() >= cap_;
    }
    const int idx = order_.cells[depth].index();
    const auto& units = unit_table().units_of_cell[static_cast<std::size_t>(idx)];
    for (int d : digits_[depth]) {
      ++nodes_;
      bool feasible = true;
      for (int u : units) feasible = feasible && !used_[static_cast<std::size_t>(u)].contains(d);
      if (trace_) {
        prefix_.push_back(static_cast<char>('0' + d));
        trace_(prefix_, feasible);
      }
      if (feasible) {
        board_.set(idx, d);
        for (int u : units) used_[static_cast<std::size_t>(u)].insert(d);
        const bool done = descend(depth + 1, out);
        for (int u : units) used_[static_cast<std::size_t>(u)].erase(d);
        board_.set(idx, 0);
        if (done) {
          if (trace_) prefix_.pop_back();
          return true;
        }
      }
      if (trace_) prefix_.pop_back();
    }
    return false;
  }

  Board board_;
  SearchOrder order_;
  std::vector<std::vector<int>> digits_;
  std::array<DigitSet, kUnits> used_{};
  std::size_t cap_;
  const SearchTrace& trace_;
  std::string prefix_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Enumeration enumerate_solutions(const Puzzle& puzzle, std::size_t cap, const SearchTrace& trace) {
  if (cap == 0) throw std::invalid_argument("solution cap must be positive");
  return Search(puzzle, cap, trace).run();
}

SolveReport solve_by_backtracking(const Puzzle& puzzle) {
  const auto start = std::chrono::steady_clock::now();
  Enumeration e = enumerate_solutions(puzzle, 1);
  const auto stop = std::chrono::steady_clock::now();

  SolveReport r;
  r.method = Method::backtracking;
  r.wall_time_s = std::chrono::duration<double>(stop - start).count();
  r.work = e.nodes_visited;
  r.solved = !e.solutions.empty();
  r.board = r.solved ? e.solutions.front() : puzzle.board;
  r.final_cost = violation_cost(r.board);
  if (!r.solved) r.note = "unsatisfiable";
  return r;
}

Uniqueness check_uniqueness(const Puzzle& puzzle) {
  const auto n = enumerate_solutions(puzzle, 2).solutions.size();
  if (n == 0) return Uniqueness::unsatisfiable;
  return n == 1 ? Uniqueness::unique : Uniqueness::multiple;
}

}  // namespace sudoku
