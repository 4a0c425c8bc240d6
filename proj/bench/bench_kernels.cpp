// Benchmark of the two parallel kernels against their serial reference:
// exact-rational tableau pivots and full-cube enumeration. Both paths must
// produce bit-identical results (exact arithmetic has no reduction-order
// slack), so each timing block also cross-checks equality.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "symdis/cube.hpp"
#include "symdis/lp.hpp"
#include "symdis/parallel.hpp"
#include "symdis/rng.hpp"

using namespace symdis;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Tableau random_tableau(int rows, int cols, uint64_t seed) {
  Rng rng(seed);
  Tableau t;
  t.rows = rows;
  t.cols = cols;
  t.a.resize(static_cast<size_t>(rows) * cols);
  for (Rational& v : t.a) {
    long num = static_cast<long>(rng.below(19)) - 9;
    long den = 1 + static_cast<long>(rng.below(9));
    v = Rational(num, den);
    v.canonicalize();
  }
  return t;
}

// Repeats the same single pivot from a pristine copy, so coefficient growth
// does not compound and both modes execute identical work.
double time_pivots(const Tableau& base, int reps, ExecMode mode,
                   Rational* checksum) {
  double total = 0;
  *checksum = 0;
  for (int rep = 0; rep < reps; ++rep) {
    Tableau t = base;
    int pr = rep % t.rows;
    int pc = (7 * rep) % t.cols;
    if (t.at(pr, pc) == 0) t.at(pr, pc) = Rational(1, 3);
    auto t0 = Clock::now();
    pivot(t, pr, pc, mode);
    total += ms_since(t0);
    *checksum += t.at((pr + 1) % t.rows, (pc + 1) % t.cols);
  }
  return total;
}

double time_enum(int n, ExecMode mode, Rational* result) {
  CubeDistribution d{WeightProfile::uniform(n)};
  auto fn = [n](const BitVec& x) -> Rational {
    // Weight-dependent rational load with per-point variation.
    return Rational(x.weight() + 1, (static_cast<long>(x.raw() % 7)) + 2);
  };
  auto t0 = Clock::now();
  *result = cube_expectation(fn, d, /*enum_cap=*/n, mode);
  return ms_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
  int pivot_reps = 60;
  int enum_n = 18;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--pivot-reps" && i + 1 < argc)
      pivot_reps = std::atoi(argv[++i]);
    else if (a == "--enum-n" && i + 1 < argc)
      enum_n = std::atoi(argv[++i]);
  }

  std::printf("threads available: %d\n", max_threads());
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  {
    Tableau base = random_tableau(160, 200, 42);
    Rational cs, cp;
    double s = time_pivots(base, pivot_reps, ExecMode::Serial, &cs);
    double p = time_pivots(base, pivot_reps, ExecMode::Parallel, &cp);
    if (cs != cp) {
      std::fprintf(stderr, "pivot checksum mismatch between modes\n");
      return 1;
    }
    char label[64];
    std::snprintf(label, sizeof label, "pivot 160x200 x%d", pivot_reps);
    std::printf("%-28s %12.2f %12.2f %8.2fx\n", label, s, p, s / p);
  }

  {
    Rational rs, rp;
    double s = time_enum(enum_n, ExecMode::Serial, &rs);
    double p = time_enum(enum_n, ExecMode::Parallel, &rp);
    if (rs != rp) {
      std::fprintf(stderr, "enumeration result mismatch between modes\n");
      return 1;
    }
    char label[64];
    std::snprintf(label, sizeof label, "cube enumeration n=%d", enum_n);
    std::printf("%-28s %12.2f %12.2f %8.2fx\n", label, s, p, s / p);
  }

  {
    // Full solver end to end, serial vs parallel pivoting.
    LinearProgram lp;
    lp.direction = Direction::Maximize;
    Rng rng(7);
    for (int j = 0; j < 120; ++j) {
      lp.objective.push_back(Rational(1));
      lp.bounds.push_back(VarBound::NonNegative);
    }
    for (int i = 0; i < 90; ++i) {
      std::vector<Rational> row(120);
      for (Rational& v : row) {
        v = Rational(static_cast<long>(rng.below(5)),
                     1 + static_cast<long>(rng.below(4)));
        v.canonicalize();
      }
      lp.add_row(std::move(row), RowSense::LessEq,
                 Rational(static_cast<long>(10 + rng.below(40))));
    }
    SolveOptions so;
    so.mode = ExecMode::Serial;
    auto t0 = Clock::now();
    LPSolution a = solve_lp(lp, so);
    double s = ms_since(t0);
    so.mode = ExecMode::Parallel;
    t0 = Clock::now();
    LPSolution b = solve_lp(lp, so);
    double p = ms_since(t0);
    if (a.objective != b.objective || a.pivots != b.pivots) {
      std::fprintf(stderr, "solver disagreement between modes\n");
      return 1;
    }
    char label[64];
    std::snprintf(label, sizeof label, "solve_lp 90x120 (%ld pivots)",
                  a.pivots);
    std::printf("%-28s %12.2f %12.2f %8.2fx\n", label, s, p, s / p);
  }

  return 0;
}
