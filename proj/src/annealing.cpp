#include "sudoku/annealing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sudoku {

void AnnealConfig::validate() const {
  if (!(initial_temperature > 0.0)) throw std::invalid_argument("initial temperature must be positive");
  if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
    throw std::invalid_argument("cooling factor must lie in (0, 1)");
  if (cooling_period == 0) throw std::invalid_argument("cooling period must be positive");
  if (max_iterations == 0) throw std::invalid_argument("iteration cap must be positive");
  if (reset_at == 0 || reset_at > max_iterations)
    throw std::invalid_argument("reset point must lie in [1, max_iterations]");
}

Board initial_board(const Puzzle& puzzle, AnnealRng& rng) {
  std::array<int, 10> have{};
  for (int i = 0; i < kCells; ++i) ++have[static_cast<std::size_t>(puzzle.board[i])];
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(have[0]));
  for (int d = 1; d <= 9; ++d) {
    if (have[static_cast<std::size_t>(d)] > kSide)
      throw std::invalid_argument("digit " + std::to_string(d) + " appears more than nine times among the clues");
    pool.insert(pool.end(), static_cast<std::size_t>(kSide - have[static_cast<std::size_t>(d)]), d);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  Board b = puzzle.board;
  auto next = pool.begin();
  for (int i = 0; i < kCells; ++i)
    if (b[i] == 0) b.set(i, *next++);
  return b;
}

double acceptance_probability(int cost_current, int cost_proposed, double temperature) {
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
  return std::min(std::exp(static_cast<double>(cost_current - cost_proposed) / temperature), 1.0);
}

double scheduled_temperature(const AnnealConfig& config, std::uint64_t iteration) {
  const std::uint64_t since_reset = iteration >= config.reset_at ? iteration - config.reset_at : iteration;
  const auto coolings = static_cast<double>(since_reset / config.cooling_period);
  return config.initial_temperature * std::pow(config.cooling_factor, coolings);
}

AnnealState::AnnealState(const Puzzle& puzzle, const Board& board, AnnealRng rng, double temperature)
    : board_(board), clues_(puzzle.clues), temperature_(temperature), rng_(std::move(rng)) {
  if (!board.is_full()) throw std::invalid_argument("annealing requires a full board");
  if (!agrees_with_clues(board, puzzle)) throw std::invalid_argument("board does not respect the clues");
  std::array<int, 10> hist{};
  for (int i = 0; i < kCells; ++i) ++hist[static_cast<std::size_t>(board[i])];
  for (int d = 1; d <= 9; ++d)
    if (hist[static_cast<std::size_t>(d)] != kSide)
      throw std::invalid_argument("annealing requires every digit exactly nine times");

  const auto& t = unit_table();
  for (int u = 0; u < kUnits; ++u)
    for (int idx : t.units[static_cast<std::size_t>(u)])
      ++counts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(board_[idx])];
  for (int u = 0; u < kUnits; ++u) cost_ += unit_deficit(u);
  for (int i = 0; i < kCells; ++i)
    if (!clues_[static_cast<std::size_t>(i)]) free_cells_.push_back(i);
}

int AnnealState::unit_deficit(int unit) const {
  const auto& c = counts_[static_cast<std::size_t>(unit)];
  int distinct = 0;
  for (int d = 1; d <= 9; ++d) distinct += c[static_cast<std::size_t>(d)] > 0;
  return kSide - distinct;
}

int AnnealState::degree(int cell) const {
  const auto d = static_cast<std::size_t>(board_[cell]);
  int deg = 0;
  for (int u : unit_table().units_of_cell[static_cast<std::size_t>(cell)])
    deg += counts_[static_cast<std::size_t>(u)][d] > 1;
  return deg;
}

int AnnealState::sample_cell() {
  static const std::array<double, 4> weight = {1.0, std::exp(1.0), std::exp(2.0), std::exp(3.0)};
  double total = 0.0;
  for (int c : free_cells_) total += weight[static_cast<std::size_t>(degree(c))];
  double target = std::uniform_real_distribution<double>(0.0, total)(rng_);
  for (int c : free_cells_) {
    target -= weight[static_cast<std::size_t>(degree(c))];
    if (target < 0.0) return c;
  }
  return free_cells_.back();
}

std::pair<CellRef, CellRef> AnnealState::propose_swap() {
  if (free_cells_.size() < 2) throw std::logic_error("a swap needs at least two non-clue cells");
  const int a = sample_cell();
  int b = sample_cell();
  while (b == a) b = sample_cell();
  return {CellRef::from_index(a), CellRef::from_index(b)};
}

void AnnealState::move_digit(int cell, int from, int to) {
  for (int u : unit_table().units_of_cell[static_cast<std::size_t>(cell)]) {
    auto& c = counts_[static_cast<std::size_t>(u)];
    --c[static_cast<std::size_t>(from)];
    ++c[static_cast<std::size_t>(to)];
  }
}

int AnnealState::cost_after_swap(int a, int b) {
  const int da = board_[a];
  const int db = board_[b];
  if (da == db) return cost_;

  const auto& t = unit_table();
  std::array<int, 6> touched{};
  std::size_t n = 0;
  for (int cell : {a, b})
    for (int u : t.units_of_cell[static_cast<std::size_t>(cell)])
      if (std::find(touched.begin(), touched.begin() + static_cast<std::ptrdiff_t>(n), u) ==
          touched.begin() + static_cast<std::ptrdiff_t>(n))
        touched[n++] = u;

  int before = 0;
  for (std::size_t i = 0; i < n; ++i) before += unit_deficit(touched[i]);
  move_digit(a, da, db);
  move_digit(b, db, da);
  int after = 0;
  for (std::size_t i = 0; i < n; ++i) after += unit_deficit(touched[i]);
  move_digit(a, db, da);
  move_digit(b, da, db);
  return cost_ - before + after;
}

void AnnealState::apply_swap(int a, int b) {
  const int da = board_[a];
  const int db = board_[b];
  if (da == db) return;
  cost_ = cost_after_swap(a, b);
  move_digit(a, da, db);
  move_digit(b, db, da);
  board_.set(a, db);
  board_.set(b, da);
}

SolveReport anneal(const Puzzle& puzzle, const AnnealConfig& config, const AnnealObserver& observer) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  AnnealRng rng(config.seed);
  const Board filled = initial_board(puzzle, rng);
  AnnealState state(puzzle, filled, std::move(rng), config.initial_temperature);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  SolveReport r;
  r.method = Method::annealing;
  std::uint64_t n = 0;
  if (state.cost() != 0 && state.free_cells().size() < 2) {
    r.note = "fewer than two non-clue cells";
  } else {
    while (state.cost() != 0 && n < config.max_iterations) {
      state.set_temperature(scheduled_temperature(config, n));
      const auto [a, b] = state.propose_swap();
      const int proposed = state.cost_after_swap(a.index(), b.index());
      const double u = uniform(state.rng());
      if (u <= acceptance_probability(state.cost(), proposed, state.temperature()))
        state.apply_swap(a.index(), b.index());
      state.set_iteration(++n);
      if (config.debug_checks && n % 1000 == 0 && state.cost() != violation_cost(state.board()))
        throw std::logic_error("cached annealing cost diverged from the board");
      if (observer) observer(state);
    }
  }
  const auto stop = std::chrono::steady_clock::now();

  r.solved = state.cost() == 0;
  r.board = state.board();
  r.work = n;
  r.final_cost = state.cost();
  r.wall_time_s = std::chrono::duration<double>(stop - start).count();
  return r;
}

AnnealObserver csv_trace(std::ostream& out) {
  out << "iteration,cost,temperature\n";
  return [&out](const AnnealState& s) {
    out << s.iteration() << ',' << s.cost() << ',' << s.temperature() << '\n';
  };
}

}  // namespace sudoku
