#pragma once
// Exact-rational linear programming: dense two-phase primal simplex with
// Bland's rule. Returns certified solutions; on Optimal, primal and dual
// feasibility plus objective equality are verified exactly before the
// result leaves the solver. The tableau row-update kernel has serial and
// OpenMP variants producing identical output.
#include <vector>

#include "symdis/parallel.hpp"
#include "symdis/rational.hpp"

namespace symdis {

enum class RowSense { LessEq, Eq, GreaterEq };
enum class VarBound { NonNegative, Free };
enum class Direction { Minimize, Maximize };

struct LinearProgram {
  Direction direction = Direction::Minimize;
  std::vector<Rational> objective;            // per variable
  std::vector<std::vector<Rational>> rows;    // dense coefficient rows
  std::vector<Rational> rhs;
  std::vector<RowSense> senses;
  std::vector<VarBound> bounds;               // per variable

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  void add_row(std::vector<Rational> coeffs, RowSense sense, Rational b);
  void validate() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Optimal;
  std::vector<Rational> primal;  // per variable; empty unless Optimal
  std::vector<Rational> dual;    // per row; empty unless Optimal
  Rational objective;
  long pivots = 0;
};

struct SolveOptions {
  ExecMode mode = ExecMode::Auto;
};

/// Dual conventions on Optimal, verified before returning:
///   Minimize: y_i <= 0 for LessEq rows, y_i >= 0 for GreaterEq, free for Eq;
///             sum_i y_i a_ij <= c_j for x_j >= 0 (equality for free x_j);
///             b'y = c'x*.
///   Maximize: the reverse inequalities, again with b'y = c'x*.
LPSolution solve_lp(const LinearProgram& lp, const SolveOptions& opts = {});

/// Dense simplex tableau. Constraint rows first, then two cost rows
/// (phase-2 reduced costs, phase-1 reduced costs); last column is the rhs.
struct Tableau {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
};

/// Pivot on (prow, pcol): normalizes the pivot row and eliminates the pivot
/// column from every other row, cost rows included. The parallel variant
/// splits rows across threads; exact arithmetic keeps results identical.
void pivot(Tableau& t, int prow, int pcol, ExecMode mode);

}  // namespace symdis
