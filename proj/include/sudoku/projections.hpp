#ifndef SUDOKU_PROJECTIONS_HPP
#define SUDOKU_PROJECTIONS_HPP

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "sudoku/board.hpp"
#include "sudoku/projection_ops.hpp"
#include "sudoku/report.hpp"

namespace sudoku {

inline constexpr int kTensorSize = 729;

/// Flat index of p_ijk with 1-based row, column and digit.
constexpr int tensor_index(int row, int col, int digit) { return ((row - 1) * 9 + (col - 1)) * 9 + (digit - 1); }

enum class VarStatus : std::uint8_t { free, fixed_zero, fixed_one };

/// Relaxed assignment p_ijk = weight of digit k in cell (i, j).
struct ProbabilityTensor {
  Eigen::Matrix<double, kTensorSize, 1> values = Eigen::Matrix<double, kTensorSize, 1>::Zero();
  std::array<VarStatus, kTensorSize> status{};

  double operator()(int row, int col, int digit) const { return values[tensor_index(row, col, digit)]; }
  int fixed_count() const;
};

enum class SliceKind { row, column, subgrid, cell };

/// Nine tensor entries constrained to sum to one.
struct ConstraintSlice {
  SliceKind kind = SliceKind::row;
  std::array<int, 9> members{};
  std::vector<int> free;
};

struct ConstraintPlan {
  std::vector<ConstraintSlice> slices;  // active slices in sweep order
  int fixed_count = 0;
};

/// All 324 slices in sweep order: rows (row, then digit), columns (column, then digit),
/// subgrids (subgrid, then digit), then cells (row-major).
std::vector<ConstraintSlice> all_slices();

/// A clue k at (i, j) fixes p_ijk = 1 and zeroes the other digits of the cell and digit k in the
/// rest of the cell's row, column and subgrid. Slices holding a fixed one are dropped and the
/// remaining ones keep only their free members. Throws InconsistentPuzzle if an entry would be
/// fixed both ways.
std::pair<ProbabilityTensor, ConstraintPlan> build_constraint_plan(const Puzzle& puzzle);

/// One pass over the plan, replacing each slice's free entries by their simplex projection.
/// Returns the largest absolute change of any entry.
double sweep(ProbabilityTensor& tensor, const ConstraintPlan& plan);

/// Each cell gets its most probable digit; ties go to the smaller digit.
Board round_tensor(const ProbabilityTensor& tensor);

/// max over active slices of |sum of slice - 1|.
double feasibility_residual(const ProbabilityTensor& tensor, const ConstraintPlan& plan);

struct ProjectionConfig {
  std::uint64_t max_sweeps = 2000;
  double stall_tolerance = 1e-9;
  std::uint64_t check_every = 1;

  void validate() const;
};

struct SweepStats {
  std::uint64_t sweep = 0;
  double max_change = 0.0;
  int rounded_cost = 0;
};

using SweepObserver = std::function<void(const SweepStats&, const ProbabilityTensor&)>;

/// Starts from the origin and sweeps until the rounded board solves the puzzle, the largest change
/// falls below the stall tolerance, or the sweep cap is reached.
SolveReport solve_by_projection(const Puzzle& puzzle, const ProjectionConfig& config,
                                const SweepObserver& observer = {});

/// Observer that streams "sweep,max_change,rounded_cost" CSV rows (header written on construction).
SweepObserver csv_sweep_trace(std::ostream& out);

}  // namespace sudoku

#endif  // SUDOKU_PROJECTIONS_HPP
