#ifndef SUDOKU_BOARD_HPP
#define SUDOKU_BOARD_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sudoku {

inline constexpr int kSide = 9;
inline constexpr int kCells = 81;
inline constexpr int kUnits = 27;

/// A cell position, 1-based like the usual (row, column) notation.
struct CellRef {
  int row = 1;
  int col = 1;

  constexpr int index() const { return (row - 1) * kSide + (col - 1); }
  constexpr int box() const { return ((row - 1) / 3) * 3 + (col - 1) / 3; }
  static constexpr CellRef from_index(int idx) { return {idx / kSide + 1, idx % kSide + 1}; }

  friend constexpr bool operator==(CellRef, CellRef) = default;
};

/// Set of digits 1..9 stored as a bitmask (bit d set means digit d present).
class DigitSet {
 public:
  constexpr DigitSet() = default;
  static constexpr DigitSet all() { return DigitSet(0x3FE); }
  static constexpr DigitSet from_mask(std::uint16_t mask) { return DigitSet(mask & 0x3FE); }

  constexpr bool contains(int d) const { return (bits_ >> d) & 1u; }
  constexpr void insert(int d) { bits_ |= static_cast<std::uint16_t>(1u << d); }
  constexpr void erase(int d) { bits_ &= static_cast<std::uint16_t>(~(1u << d)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t mask() const { return bits_; }

  /// Digits in ascending order.
  std::vector<int> digits() const;

  friend constexpr bool operator==(DigitSet, DigitSet) = default;

 private:
  constexpr explicit DigitSet(std::uint16_t bits) : bits_(bits) {}
  std::uint16_t bits_ = 0;
};

/// 9x9 grid of digits, 0 meaning empty, stored row-major.
class Board {
 public:
  Board() { cells_.fill(0); }

  int operator[](int idx) const { return cells_[static_cast<std::size_t>(idx)]; }
  int at(CellRef c) const { return (*this)[c.index()]; }
  void set(int idx, int digit);
  void set(CellRef c, int digit) { set(c.index(), digit); }

  int filled_count() const;
  bool is_full() const { return filled_count() == kCells; }

  const std::array<std::uint8_t, kCells>& cells() const { return cells_; }

  friend bool operator==(const Board&, const Board&) = default;

 private:
  std::array<std::uint8_t, kCells> cells_;
};

using ClueMask = std::array<bool, kCells>;

/// A parsed puzzle. The clue mask marks exactly the nonzero cells of `board`.
struct Puzzle {
  Board board;
  ClueMask clues{};

  static Puzzle from_board(const Board& b);
  int clue_count() const;
};

/// The 27 units: rows 0..8, columns 9..17, subgrids 18..26. Each holds 9 cell indices.
struct UnitTable {
  std::array<std::array<int, kSide>, kUnits> units;
  std::array<std::array<int, 3>, kCells> units_of_cell;  // {row unit, column unit, subgrid unit}
};

const UnitTable& unit_table();

/// Input error. `position` is the offending index among the significant characters.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Clue set repeating a digit inside a unit.
class InconsistentPuzzle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts line format ('1'-'9', '0' or '.') and grid format; whitespace, '|', '-' and '+'
/// are ignored.
Puzzle parse_puzzle(std::string_view text);

/// Parses a board without the consistency check (used for full-board fixtures).
Board parse_board(std::string_view text);

enum class RenderStyle { line, grid };

std::string render_board(const Board& board, RenderStyle style = RenderStyle::line);

/// Sum over the 27 units of (9 - number of distinct digits in the unit). Empty cells add no digit.
int violation_cost(const Board& board);

/// Number of the cell's three units in which its digit occurs more than once.
int cell_violation_degree(const Board& board, CellRef cell);

/// Digits not present in the row, column or subgrid of an empty cell.
DigitSet candidates(const Board& board, CellRef cell);

bool is_solved(const Board& board);

/// True iff every clue cell of `puzzle` holds the same digit in `board`.
bool agrees_with_clues(const Board& board, const Puzzle& puzzle);

/// True iff no unit holds a repeated nonzero digit.
bool is_unit_consistent(const Board& board);

}  // namespace sudoku

#endif  // SUDOKU_BOARD_HPP
