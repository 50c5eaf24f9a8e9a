#ifndef SUDOKU_TESTS_FIXTURES_HPP
#define SUDOKU_TESTS_FIXTURES_HPP

#include <string>

#include "sudoku/bench.hpp"
#include "sudoku/board.hpp"

namespace sudoku::testing {

// Sample puzzle with 35 clues.
inline const std::string kSamplePuzzle =
    "15764..8..4........329..14.7.41.52..2..86..74....7...1.8..21......3.4.19...5.682.";

// Full board stuck in a local minimum: 5 repeated in column 5 at (2,5),(7,5) and 2 repeated in
// column 6 at (1,6),(6,6).
inline const std::string kLocalMinimumBoard =
    "417962835"
    "632158749"
    "958734612"
    "825497361"
    "391586427"
    "746312598"
    "289653174"
    "573241986"
    "164879253";

// Clues of the puzzle that produced the board above.
inline const std::string kLocalMinimumClues =
    "4.....8.5"
    ".3....7.."
    "........."
    ".2.....6."
    "....8.4.."
    ".4..1...."
    "...6.3.7."
    "5.32.1..."
    "1.4......";

inline std::string data_path(const std::string& file) { return std::string(SUDOKU_DATA_DIR) + "/" + file; }

inline PuzzleSuite bundled_suite(const std::string& name) { return load_suite(data_path(name + ".txt"), name); }

}  // namespace sudoku::testing

#endif
