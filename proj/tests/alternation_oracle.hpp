#pragma once
// Independent floating-point oracle for discrete minimax polynomial
// approximation on the points {0..n}. Uses the alternation
// characterization instead of an LP: the optimum equals the maximum over
// all (r+2)-point subsets of the level h solving the alternating
// interpolation system d(x_i) - p(x_i) = (-1)^i h. Each subsystem is a
// dense linear solve with partial pivoting. Intended for small n only.
#include <cmath>
#include <cstdlib>
#include <vector>

namespace alternation_oracle {

// Solves A x = b in place; returns false on a (numerically) singular pivot.
inline bool solve_dense(std::vector<std::vector<double>>& A,
                        std::vector<double>& b) {
  const int n = static_cast<int>(A.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int i = c + 1; i < n; ++i)
      if (std::fabs(A[i][c]) > std::fabs(A[p][c])) p = i;
    if (std::fabs(A[p][c]) < 1e-12) return false;
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (int i = c + 1; i < n; ++i) {
      double f = A[i][c] / A[c][c];
      if (f == 0.0) continue;
      for (int j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) b[i] -= A[i][j] * b[j];
    b[i] /= A[i][i];
  }
  return true;
}

// Level of the alternating fit on the point subset xs (ascending), degree r.
// Unknowns: r+1 monomial coefficients (argument rescaled to [-1,1] for
// conditioning) plus the signed level h.
inline double subset_level(const std::vector<int>& xs,
                           const std::vector<int>& d, int n, int r) {
  const int m = static_cast<int>(xs.size());  // r + 2
  std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
  std::vector<double> b(m);
  for (int i = 0; i < m; ++i) {
    double z = n == 0 ? 0.0 : 2.0 * xs[i] / n - 1.0;
    double zp = 1.0;
    for (int j = 0; j <= r; ++j) {
      A[i][j] = zp;
      zp *= z;
    }
    A[i][r + 1] = (i % 2 == 0) ? 1.0 : -1.0;
    b[i] = static_cast<double>(d[xs[i]]);
  }
  if (!solve_dense(A, b)) return 0.0;
  return std::fabs(b[r + 1]);
}

/// Best-possible max_m |d(m) - p(m)| over degree-r polynomials, for d given
/// on {0..n}. Exhaustive over alternation subsets; O(C(n+1, r+2)) solves.
inline double minimax(const std::vector<int>& d, int r) {
  const int n = static_cast<int>(d.size()) - 1;
  if (r >= n) return 0.0;
  std::vector<int> xs(r + 2);
  for (int i = 0; i < r + 2; ++i) xs[i] = i;
  double best = 0.0;
  for (;;) {
    double h = subset_level(xs, d, n, r);
    if (h > best) best = h;
    // Next (r+2)-combination of {0..n}.
    int i = r + 1;
    while (i >= 0 && xs[i] == n - (r + 1 - i)) --i;
    if (i < 0) break;
    ++xs[i];
    for (int j = i + 1; j < r + 2; ++j) xs[j] = xs[j - 1] + 1;
  }
  return best;
}

}  // namespace alternation_oracle
