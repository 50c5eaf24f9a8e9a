#ifndef SUDOKU_ANNEALING_HPP
#define SUDOKU_ANNEALING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "sudoku/board.hpp"
#include "sudoku/report.hpp"

namespace sudoku {

struct AnnealConfig {
  double initial_temperature = 200.0;
  double cooling_factor = 0.99;
  std::uint64_t cooling_period = 50;
  std::uint64_t max_iterations = 200'000;
  std::uint64_t reset_at = 100'000;
  std::uint64_t seed = 0;
  // Recompute the cost from scratch every 1000 iterations and throw on mismatch.
  bool debug_checks = false;

  void validate() const;
};

using AnnealRng = std::mt19937_64;

/// Fills the empty cells with a random arrangement of the digits still needed so that every digit
/// appears nine times. Throws if some digit already appears more than nine times among the clues.
Board initial_board(const Puzzle& puzzle, AnnealRng& rng);

/// min{exp((cost_current - cost_proposed) / temperature), 1}
double acceptance_probability(int cost_current, int cost_proposed, double temperature);

/// Temperature in effect at a given iteration under the geometric schedule with restart.
double scheduled_temperature(const AnnealConfig& config, std::uint64_t iteration);

/// Annealing state over a full board. Keeps per-unit digit counts so that the cost and the cell
/// degrees can be updated only on the units touched by a swap.
class AnnealState {
 public:
  /// `board` must be full with every digit nine times and must agree with `puzzle`'s clues.
  AnnealState(const Puzzle& puzzle, const Board& board, AnnealRng rng, double temperature);

  const Board& board() const { return board_; }
  const ClueMask& clues() const { return clues_; }
  int cost() const { return cost_; }
  /// Temperature used for the most recent proposal.
  double temperature() const { return temperature_; }
  /// Proposals made so far.
  std::uint64_t iteration() const { return iteration_; }
  AnnealRng& rng() { return rng_; }

  void set_temperature(double t) { temperature_ = t; }
  void set_iteration(std::uint64_t n) { iteration_ = n; }

  /// Number of the cell's units in which its digit is repeated.
  int degree(int cell) const;

  const std::vector<int>& free_cells() const { return free_cells_; }

  /// Draws one free cell with probability proportional to exp(degree).
  int sample_cell();

  /// Two distinct free cells, each drawn by `sample_cell`; the second is redrawn until distinct.
  std::pair<CellRef, CellRef> propose_swap();

  /// Cost the board would have after swapping the two cells.
  int cost_after_swap(int a, int b);

  /// Swaps two cells' digits and updates the cached cost.
  void apply_swap(int a, int b);

 private:
  void move_digit(int cell, int from, int to);
  int unit_deficit(int unit) const;

  Board board_;
  ClueMask clues_;
  std::vector<int> free_cells_;
  std::array<std::array<std::uint8_t, 10>, kUnits> counts_{};
  int cost_ = 0;
  double temperature_;
  std::uint64_t iteration_ = 0;
  AnnealRng rng_;
};

/// Called after every iteration with the state as it is after the accept/reject decision.
using AnnealObserver = std::function<void(const AnnealState&)>;

SolveReport anneal(const Puzzle& puzzle, const AnnealConfig& config, const AnnealObserver& observer = {});

/// Observer that streams "iteration,cost,temperature" CSV rows (header written on construction).
AnnealObserver csv_trace(std::ostream& out);

}  // namespace sudoku

#endif  // SUDOKU_ANNEALING_HPP
