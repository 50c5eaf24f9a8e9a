#include "sudoku/projections.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sudoku {

int ProbabilityTensor::fixed_count() const {
  int n = 0;
  for (auto s : status) n += s != VarStatus::free;
  return n;
}

std::vector<ConstraintSlice> all_slices() {
  std::vector<ConstraintSlice> out;
  out.reserve(324);
  auto add = [&](SliceKind kind, auto&& member) {
    ConstraintSlice s;
    s.kind = kind;
    for (int m = 0; m < 9; ++m) s.members[static_cast<std::size_t>(m)] = member(m);
    s.free.assign(s.members.begin(), s.members.end());
    out.push_back(std::move(s));
  };
  for (int i = 1; i <= 9; ++i)
    for (int k = 1; k <= 9; ++k) add(SliceKind::row, [=](int m) { return tensor_index(i, m + 1, k); });
  for (int j = 1; j <= 9; ++j)
    for (int k = 1; k <= 9; ++k) add(SliceKind::column, [=](int m) { return tensor_index(m + 1, j, k); });
  for (int b = 0; b < 9; ++b)
    for (int k = 1; k <= 9; ++k)
      add(SliceKind::subgrid, [=](int m) { return tensor_index((b / 3) * 3 + m / 3 + 1, (b % 3) * 3 + m % 3 + 1, k); });
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) add(SliceKind::cell, [=](int m) { return tensor_index(i, j, m + 1); });
  return out;
}

namespace {

void fix(ProbabilityTensor& t, int idx, VarStatus s) {
  auto& cur = t.status[static_cast<std::size_t>(idx)];
  if (cur != VarStatus::free && cur != s) throw InconsistentPuzzle("clues fix a tensor entry both to 0 and to 1");
  cur = s;
  t.values[idx] = s == VarStatus::fixed_one ? 1.0 : 0.0;
}

}  // namespace

std::pair<ProbabilityTensor, ConstraintPlan> build_constraint_plan(const Puzzle& puzzle) {
  ProbabilityTensor t;
  for (int idx = 0; idx < kCells; ++idx) {
    if (!puzzle.clues[static_cast<std::size_t>(idx)]) continue;
    const CellRef c = CellRef::from_index(idx);
    const int k = puzzle.board[idx];
    const int r0 = ((c.row - 1) / 3) * 3 + 1;
    const int c0 = ((c.col - 1) / 3) * 3 + 1;
    for (int l = 1; l <= 9; ++l)
      if (l != k) fix(t, tensor_index(c.row, c.col, l), VarStatus::fixed_zero);
    for (int i = 1; i <= 9; ++i)
      if (i != c.row) fix(t, tensor_index(i, c.col, k), VarStatus::fixed_zero);
    for (int j = 1; j <= 9; ++j)
      if (j != c.col) fix(t, tensor_index(c.row, j, k), VarStatus::fixed_zero);
    for (int i = r0; i < r0 + 3; ++i)
      for (int j = c0; j < c0 + 3; ++j)
        if (i != c.row && j != c.col) fix(t, tensor_index(i, j, k), VarStatus::fixed_zero);
  }
  // Ones go last so that a zero-then-one collision is caught by `fix` in either order.
  for (int idx = 0; idx < kCells; ++idx) {
    if (!puzzle.clues[static_cast<std::size_t>(idx)]) continue;
    const CellRef c = CellRef::from_index(idx);
    fix(t, tensor_index(c.row, c.col, puzzle.board[idx]), VarStatus::fixed_one);
  }

  ConstraintPlan plan;
  plan.fixed_count = t.fixed_count();
  for (auto& s : all_slices()) {
    bool voided = false;
    s.free.clear();
    for (int m : s.members) {
      const auto st = t.status[static_cast<std::size_t>(m)];
      voided = voided || st == VarStatus::fixed_one;
      if (st == VarStatus::free) s.free.push_back(m);
    }
    if (!voided && !s.free.empty()) plan.slices.push_back(std::move(s));
  }
  return {std::move(t), std::move(plan)};
}

double sweep(ProbabilityTensor& tensor, const ConstraintPlan& plan) {
  using SliceVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 9, 1>;
  double max_change = 0.0;
  SliceVector y;
  for (const auto& s : plan.slices) {
    const auto n = static_cast<Eigen::Index>(s.free.size());
    y.resize(n);
    for (Eigen::Index m = 0; m < n; ++m) y[m] = tensor.values[s.free[static_cast<std::size_t>(m)]];
    const SliceVector x = project_simplex(y);
    for (Eigen::Index m = 0; m < n; ++m) {
      double& v = tensor.values[s.free[static_cast<std::size_t>(m)]];
      max_change = std::max(max_change, std::abs(x[m] - v));
      v = x[m];
    }
  }
  return max_change;
}

Board round_tensor(const ProbabilityTensor& tensor) {
  Board b;
  for (int idx = 0; idx < kCells; ++idx) {
    const CellRef c = CellRef::from_index(idx);
    int best = 1;
    for (int k = 2; k <= 9; ++k)
      if (tensor(c.row, c.col, k) > tensor(c.row, c.col, best)) best = k;
    b.set(idx, best);
  }
  return b;
}

double feasibility_residual(const ProbabilityTensor& tensor, const ConstraintPlan& plan) {
  double worst = 0.0;
  for (const auto& s : plan.slices) {
    double sum = 0.0;
    for (int m : s.members) sum += tensor.values[m];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

void ProjectionConfig::validate() const {
  if (max_sweeps == 0) throw std::invalid_argument("sweep cap must be positive");
  if (!(stall_tolerance >= 0.0)) throw std::invalid_argument("stall tolerance must be nonnegative");
  if (check_every == 0) throw std::invalid_argument("check interval must be positive");
}

SolveReport solve_by_projection(const Puzzle& puzzle, const ProjectionConfig& config, const SweepObserver& observer) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  auto [tensor, plan] = build_constraint_plan(puzzle);

  Board rounded = round_tensor(tensor);
  bool solved = is_solved(rounded);
  std::uint64_t sweeps = 0;
  while (!solved && sweeps < config.max_sweeps) {
    const double change = sweep(tensor, plan);
    ++sweeps;
    const bool check = sweeps % config.check_every == 0;
    if (check || observer) {
      rounded = round_tensor(tensor);
      if (check) solved = is_solved(rounded);
    }
    if (observer) observer({sweeps, change, violation_cost(rounded)}, tensor);
    if (change < config.stall_tolerance) break;
  }
  rounded = round_tensor(tensor);
  solved = solved || is_solved(rounded);
  const auto stop = std::chrono::steady_clock::now();

  SolveReport r;
  r.method = Method::projection;
  r.solved = solved;
  r.board = rounded;
  r.work = sweeps;
  r.final_cost = violation_cost(rounded);
  r.wall_time_s = std::chrono::duration<double>(stop - start).count();
  if (!solved) r.note = sweeps == config.max_sweeps ? "sweep cap reached" : "stalled";
  return r;
}

SweepObserver csv_sweep_trace(std::ostream& out) {
  out << "sweep,max_change,rounded_cost\n";
  return [&out](const SweepStats& s, const ProbabilityTensor&) {
    out << s.sweep << ',' << s.max_change << ',' << s.rounded_cost << '\n';
  };
}

}  // namespace sudoku
