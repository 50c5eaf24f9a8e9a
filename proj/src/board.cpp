#include "sudoku/board.hpp"

#include <algorithm>

namespace sudoku {

std::vector<int> DigitSet::digits() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int d = 1; d <= 9; ++d)
    if (contains(d)) out.push_back(d);
  return out;
}

void Board::set(int idx, int digit) {
  if (idx < 0 || idx >= kCells) throw std::out_of_range("cell index out of range");
  if (digit < 0 || digit > 9) throw std::out_of_range("digit out of range");
  cells_[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(digit);
}

int Board::filled_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](auto v) { return v != 0; }));
}

Puzzle Puzzle::from_board(const Board& b) {
  Puzzle p;
  p.board = b;
  for (int i = 0; i < kCells; ++i) p.clues[static_cast<std::size_t>(i)] = b[i] != 0;
  return p;
}

int Puzzle::clue_count() const {
  return static_cast<int>(std::count(clues.begin(), clues.end(), true));
}

namespace {

UnitTable make_unit_table() {
  UnitTable t{};
  for (int r = 0; r < kSide; ++r) {
    for (int c = 0; c < kSide; ++c) {
      const int idx = r * kSide + c;
      const int b = (r / 3) * 3 + c / 3;
      const int within_box = (r % 3) * 3 + c % 3;
      t.units[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = idx;
      t.units[static_cast<std::size_t>(9 + c)][static_cast<std::size_t>(r)] = idx;
      t.units[static_cast<std::size_t>(18 + b)][static_cast<std::size_t>(within_box)] = idx;
      t.units_of_cell[static_cast<std::size_t>(idx)] = {r, 9 + c, 18 + b};
    }
  }
  return t;
}

bool ignorable(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '|' || ch == '-' || ch == '+';
}

}  // namespace

const UnitTable& unit_table() {
  static const UnitTable table = make_unit_table();
  return table;
}

Board parse_board(std::string_view text) {
  Board b;
  std::size_t pos = 0;
  for (char ch : text) {
    if (ignorable(ch)) continue;
    int digit = 0;
    if (ch >= '1' && ch <= '9') {
      digit = ch - '0';
    } else if (ch != '0' && ch != '.') {
      throw ParseError("illegal character '" + std::string(1, ch) + "' at position " + std::to_string(pos),
                       pos);
    }
    if (pos < static_cast<std::size_t>(kCells)) b.set(static_cast<int>(pos), digit);
    ++pos;
  }
  if (pos != static_cast<std::size_t>(kCells))
    throw ParseError("expected 81 cells, found " + std::to_string(pos), pos);
  return b;
}

Puzzle parse_puzzle(std::string_view text) {
  Board b = parse_board(text);
  if (!is_unit_consistent(b)) throw InconsistentPuzzle("clues repeat a digit within a unit");
  return Puzzle::from_board(b);
}

std::string render_board(const Board& board, RenderStyle style) {
  auto glyph = [](int d) { return d == 0 ? '.' : static_cast<char>('0' + d); };
  std::string out;
  if (style == RenderStyle::line) {
    out.reserve(kCells);
    for (int i = 0; i < kCells; ++i) out.push_back(glyph(board[i]));
    return out;
  }
  for (int r = 0; r < kSide; ++r) {
    if (r == 3 || r == 6) out += "------+-------+------\n";
    for (int c = 0; c < kSide; ++c) {
      if (c == 3 || c == 6) out += "| ";
      out.push_back(glyph(board[r * kSide + c]));
      if (c != kSide - 1) out.push_back(' ');
    }
    out.push_back('\n');
  }
  return out;
}

int violation_cost(const Board& board) {
  int cost = 0;
  for (const auto& unit : unit_table().units) {
    DigitSet seen;
    for (int idx : unit)
      if (board[idx] != 0) seen.insert(board[idx]);
    cost += kSide - seen.size();
  }
  return cost;
}

int cell_violation_degree(const Board& board, CellRef cell) {
  const int idx = cell.index();
  const int d = board[idx];
  if (d == 0) return 0;
  const auto& t = unit_table();
  int degree = 0;
  for (int u : t.units_of_cell[static_cast<std::size_t>(idx)]) {
    int hits = 0;
    for (int other : t.units[static_cast<std::size_t>(u)]) hits += board[other] == d;
    degree += hits > 1;
  }
  return degree;
}

DigitSet candidates(const Board& board, CellRef cell) {
  const int idx = cell.index();
  if (board[idx] != 0) throw std::invalid_argument("candidates requested for a filled cell");
  const auto& t = unit_table();
  DigitSet out = DigitSet::all();
  for (int u : t.units_of_cell[static_cast<std::size_t>(idx)])
    for (int other : t.units[static_cast<std::size_t>(u)]) out.erase(board[other]);
  return out;
}

bool is_solved(const Board& board) { return board.is_full() && violation_cost(board) == 0; }

bool agrees_with_clues(const Board& board, const Puzzle& puzzle) {
  for (int i = 0; i < kCells; ++i)
    if (puzzle.clues[static_cast<std::size_t>(i)] && board[i] != puzzle.board[i]) return false;
  return true;
}

bool is_unit_consistent(const Board& board) {
  for (const auto& unit : unit_table().units) {
    DigitSet seen;
    for (int idx : unit) {
      const int d = board[idx];
      if (d == 0) continue;
      if (seen.contains(d)) return false;
      seen.insert(d);
    }
  }
  return true;
}

}  // namespace sudoku
