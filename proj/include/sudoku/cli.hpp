#ifndef SUDOKU_CLI_HPP
#define SUDOKU_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace sudoku {

/// Exit codes: 0 success, 1 solver failure or a non-unique puzzle, 2 usage or input errors.
/// `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sudoku

#endif  // SUDOKU_CLI_HPP
