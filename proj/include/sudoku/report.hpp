#ifndef SUDOKU_REPORT_HPP
#define SUDOKU_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sudoku/board.hpp"

namespace sudoku {

enum class Method { backtracking, annealing, projection };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Outcome of one solver run. `work` counts nodes visited, iterations, or sweeps by method.
struct SolveReport {
  Method method = Method::backtracking;
  bool solved = false;
  Board board;
  double wall_time_s = 0.0;
  std::uint64_t work = 0;
  int final_cost = 0;
  std::string note;
};

}  // namespace sudoku

#endif  // SUDOKU_REPORT_HPP
