#include "symdis/lp.hpp"

#include <stdexcept>

namespace symdis {

void LinearProgram::add_row(std::vector<Rational> coeffs, RowSense sense,
                            Rational b) {
  if (coeffs.size() != objective.size())
    throw std::invalid_argument("LinearProgram::add_row: width mismatch");
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(std::move(b));
}

void LinearProgram::validate() const {
  if (bounds.size() != objective.size())
    throw std::invalid_argument("LinearProgram: bounds/objective mismatch");
  if (rows.size() != rhs.size() || rows.size() != senses.size())
    throw std::invalid_argument("LinearProgram: row metadata mismatch");
  for (const auto& r : rows)
    if (r.size() != objective.size())
      throw std::invalid_argument("LinearProgram: row width mismatch");
}

namespace {

// Eliminates the pivot column from row i (pivot row already normalized).
// Skips columns where the pivot row is zero; sets the pivot column to a
// canonical exact zero.
void eliminate_row(Tableau& t, int i, int prow, int pcol) {
  Rational f = t.at(i, pcol);
  if (sgn(f) == 0) return;
  const Rational* pr = &t.at(prow, 0);
  Rational* ri = &t.at(i, 0);
  for (int j = 0; j < t.cols; ++j) {
    if (sgn(pr[j]) == 0) continue;
    ri[j] -= f * pr[j];
  }
  ri[pcol] = 0;
}

}  // namespace

void pivot(Tableau& t, int prow, int pcol, ExecMode mode) {
  Rational piv = t.at(prow, pcol);
  if (sgn(piv) == 0) throw std::logic_error("pivot: zero pivot element");
  if (piv != 1) {
    Rational inv = Rational(1) / piv;
    Rational* pr = &t.at(prow, 0);
    for (int j = 0; j < t.cols; ++j)
      if (sgn(pr[j]) != 0) pr[j] *= inv;
    pr[pcol] = 1;
  }
  long long work = static_cast<long long>(t.rows) * t.cols;
  if (use_parallel(mode, work)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < t.rows; ++i) {
      if (i == prow) continue;
      eliminate_row(t, i, prow, pcol);
    }
  } else {
    for (int i = 0; i < t.rows; ++i) {
      if (i == prow) continue;
      eliminate_row(t, i, prow, pcol);
    }
  }
}

namespace {

struct Standardized {
  Tableau t;
  int m = 0;      // constraint rows
  int ncols = 0;  // structural + slack + artificial columns
  std::vector<int> basis;          // basic column per constraint row
  std::vector<bool> is_artificial; // per column
  std::vector<int> identity_col;   // per row: initial identity column
  std::vector<bool> flipped;       // per row: multiplied by -1
  std::vector<int> col_var;        // per structural column: original var
  std::vector<int> col_sign;       // per structural column: +1 or -1
  int structural = 0;
};

Standardized standardize(const LinearProgram& lp) {
  Standardized s;
  const int nv = lp.num_vars();
  s.m = lp.num_rows();
  s.flipped.resize(s.m);

  // Structural columns: one per nonnegative variable, a (+,-) pair per
  // free variable.
  std::vector<int> plus_col(nv);
  for (int j = 0; j < nv; ++j) {
    plus_col[j] = s.structural;
    s.col_var.push_back(j);
    s.col_sign.push_back(1);
    ++s.structural;
    if (lp.bounds[j] == VarBound::Free) {
      s.col_var.push_back(j);
      s.col_sign.push_back(-1);
      ++s.structural;
    }
  }

  // Row senses after sign normalization (rhs >= 0 everywhere).
  std::vector<RowSense> sense(s.m);
  for (int i = 0; i < s.m; ++i) {
    s.flipped[i] = lp.rhs[i] < 0;
    sense[i] = lp.senses[i];
    if (s.flipped[i]) {
      if (sense[i] == RowSense::LessEq)
        sense[i] = RowSense::GreaterEq;
      else if (sense[i] == RowSense::GreaterEq)
        sense[i] = RowSense::LessEq;
    }
  }

  int slack_count = 0, art_count = 0;
  std::vector<int> slack_col(s.m, -1), art_col(s.m, -1);
  for (int i = 0; i < s.m; ++i)
    if (sense[i] != RowSense::Eq) slack_col[i] = s.structural + slack_count++;
  for (int i = 0; i < s.m; ++i)
    if (sense[i] != RowSense::LessEq)
      art_col[i] = s.structural + slack_count + art_count++;

  s.ncols = s.structural + slack_count + art_count;
  s.is_artificial.assign(s.ncols, false);
  for (int i = 0; i < s.m; ++i)
    if (art_col[i] >= 0) s.is_artificial[art_col[i]] = true;

  s.t.rows = s.m + 2;
  s.t.cols = s.ncols + 1;
  s.t.a.assign(static_cast<size_t>(s.t.rows) * s.t.cols, Rational(0));

  const int rhs_col = s.ncols;
  s.basis.assign(s.m, -1);
  s.identity_col.assign(s.m, -1);
  for (int i = 0; i < s.m; ++i) {
    Rational sign = s.flipped[i] ? -1 : 1;
    for (int j = 0; j < nv; ++j) {
      const Rational& a = lp.rows[i][j];
      if (a == 0) continue;
      s.t.at(i, plus_col[j]) = sign * a;
      if (lp.bounds[j] == VarBound::Free)
        s.t.at(i, plus_col[j] + 1) = -sign * a;
    }
    s.t.at(i, rhs_col) = sign * lp.rhs[i];
    if (slack_col[i] >= 0)
      s.t.at(i, slack_col[i]) = sense[i] == RowSense::LessEq ? 1 : -1;
    if (art_col[i] >= 0) {
      s.t.at(i, art_col[i]) = 1;
      s.basis[i] = art_col[i];
      s.identity_col[i] = art_col[i];
    } else {
      s.basis[i] = slack_col[i];
      s.identity_col[i] = slack_col[i];
    }
  }
  // Rows whose identity column is a surplus-free slack keep it; rows with
  // an artificial use the artificial (coefficient +1 in both cases).
  for (int i = 0; i < s.m; ++i)
    if (art_col[i] < 0) s.identity_col[i] = slack_col[i];

  // Phase-2 cost row: internal minimize objective over structural columns.
  for (int c = 0; c < s.structural; ++c) {
    Rational cj = lp.objective[s.col_var[c]] * s.col_sign[c];
    if (lp.direction == Direction::Maximize) cj = -cj;
    s.t.at(s.m, c) = cj;
  }

  // Phase-1 cost row: 1 on artificials, reduced against the initial basis.
  for (int c = 0; c < s.ncols; ++c)
    if (s.is_artificial[c]) s.t.at(s.m + 1, c) = 1;
  for (int i = 0; i < s.m; ++i) {
    if (art_col[i] < 0) continue;
    for (int j = 0; j <= s.ncols; ++j) {
      const Rational& a = s.t.at(i, j);
      if (sgn(a) != 0) s.t.at(s.m + 1, j) -= a;
    }
  }
  return s;
}

enum class PhaseResult { Optimal, Unbounded };

PhaseResult run_simplex(Standardized& s, int cost_row, bool bar_artificials,
                        ExecMode mode, long& pivots) {
  const int rhs_col = s.ncols;
  for (;;) {
    // Bland: entering column = smallest index with negative reduced cost.
    int pcol = -1;
    for (int j = 0; j < s.ncols; ++j) {
      if (bar_artificials && s.is_artificial[j]) continue;
      if (sgn(s.t.at(cost_row, j)) < 0) {
        pcol = j;
        break;
      }
    }
    if (pcol < 0) return PhaseResult::Optimal;

    // Ratio test; ties broken by smallest basic column index (Bland).
    int prow = -1;
    Rational best;
    for (int i = 0; i < s.m; ++i) {
      const Rational& a = s.t.at(i, pcol);
      if (sgn(a) <= 0) continue;
      Rational ratio = s.t.at(i, rhs_col) / a;
      if (prow < 0 || ratio < best ||
          (ratio == best && s.basis[i] < s.basis[prow])) {
        prow = i;
        best = ratio;
      }
    }
    if (prow < 0) return PhaseResult::Unbounded;

    pivot(s.t, prow, pcol, mode);
    s.basis[prow] = pcol;
    ++pivots;
  }
}

void verify_certificates(const LinearProgram& lp, const LPSolution& sol) {
  const int nv = lp.num_vars(), m = lp.num_rows();
  const bool minimize = lp.direction == Direction::Minimize;
  for (int j = 0; j < nv; ++j)
    if (lp.bounds[j] == VarBound::NonNegative && sol.primal[j] < 0)
      throw std::logic_error("solve_lp: primal bound violated");
  Rational primal_obj = 0;
  for (int j = 0; j < nv; ++j) primal_obj += lp.objective[j] * sol.primal[j];
  Rational dual_obj = 0;
  for (int i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < nv; ++j) lhs += lp.rows[i][j] * sol.primal[j];
    bool ok = true;
    switch (lp.senses[i]) {
      case RowSense::LessEq:
        ok = lhs <= lp.rhs[i];
        break;
      case RowSense::Eq:
        ok = lhs == lp.rhs[i];
        break;
      case RowSense::GreaterEq:
        ok = lhs >= lp.rhs[i];
        break;
    }
    if (!ok) throw std::logic_error("solve_lp: primal row violated");
    const Rational& y = sol.dual[i];
    if (lp.senses[i] == RowSense::LessEq && (minimize ? y > 0 : y < 0))
      throw std::logic_error("solve_lp: dual sign violated");
    if (lp.senses[i] == RowSense::GreaterEq && (minimize ? y < 0 : y > 0))
      throw std::logic_error("solve_lp: dual sign violated");
    dual_obj += y * lp.rhs[i];
  }
  for (int j = 0; j < nv; ++j) {
    Rational reduced = lp.objective[j];
    for (int i = 0; i < m; ++i) reduced -= sol.dual[i] * lp.rows[i][j];
    if (lp.bounds[j] == VarBound::Free) {
      if (reduced != 0)
        throw std::logic_error("solve_lp: dual equality violated on free var");
    } else if (minimize ? reduced < 0 : reduced > 0) {
      throw std::logic_error("solve_lp: dual feasibility violated");
    }
  }
  if (primal_obj != dual_obj)
    throw std::logic_error("solve_lp: strong duality violated");
  if (primal_obj != sol.objective)
    throw std::logic_error("solve_lp: objective mismatch");
}

}  // namespace

LPSolution solve_lp(const LinearProgram& lp, const SolveOptions& opts) {
  lp.validate();
  Standardized s = standardize(lp);
  LPSolution sol;
  const int rhs_col = s.ncols;

  // Phase 1: minimize the artificial sum from the trivially feasible start.
  bool any_artificial = false;
  for (int i = 0; i < s.m; ++i) any_artificial |= s.is_artificial[s.basis[i]];
  if (any_artificial) {
    PhaseResult r =
        run_simplex(s, s.m + 1, /*bar_artificials=*/false, opts.mode,
                    sol.pivots);
    if (r == PhaseResult::Unbounded)
      throw std::logic_error("solve_lp: phase 1 unbounded");
    if (sgn(s.t.at(s.m + 1, rhs_col)) != 0) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Drive leftover artificials out of the basis where possible. Rows with
    // no nonzero non-artificial entry are redundant and stay inert.
    for (int i = 0; i < s.m; ++i) {
      if (!s.is_artificial[s.basis[i]]) continue;
      for (int j = 0; j < s.ncols; ++j) {
        if (s.is_artificial[j]) continue;
        if (sgn(s.t.at(i, j)) != 0) {
          pivot(s.t, i, j, opts.mode);
          s.basis[i] = j;
          ++sol.pivots;
          break;
        }
      }
    }
  }

  // Phase 2 on the true objective, artificials barred from entering.
  PhaseResult r =
      run_simplex(s, s.m, /*bar_artificials=*/true, opts.mode, sol.pivots);
  if (r == PhaseResult::Unbounded) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }

  sol.status = LPStatus::Optimal;
  sol.primal.assign(lp.num_vars(), Rational(0));
  for (int i = 0; i < s.m; ++i) {
    int c = s.basis[i];
    if (c < s.structural)
      sol.primal[s.col_var[c]] += Rational(s.col_sign[c]) * s.t.at(i, rhs_col);
  }
  sol.dual.assign(lp.num_rows(), Rational(0));
  for (int i = 0; i < s.m; ++i) {
    // The identity column of row i has zero cost, so its final reduced cost
    // is -y_i for the internal minimize problem.
    Rational y = -s.t.at(s.m, s.identity_col[i]);
    if (s.flipped[i]) y = -y;
    if (lp.direction == Direction::Maximize) y = -y;
    sol.dual[i] = y;
  }
  sol.objective = 0;
  for (int j = 0; j < lp.num_vars(); ++j)
    sol.objective += lp.objective[j] * sol.primal[j];

  verify_certificates(lp, sol);
  return sol;
}

}  // namespace symdis
