#pragma once
// LP characterizations of best polynomial approximation of symmetric
// predicates: the minimax (l-infinity) problem over the layer-weight domain
// {0..n}, its dual as a signed measure certifying hardness, the induced
// hard weight profile, and best weighted-l1 approximation against a
// profile. All exact.
#include <vector>

#include "json.hpp"
#include "symdis/cube.hpp"
#include "symdis/lp.hpp"
#include "symdis/poly.hpp"

namespace symdis {

/// Result of the minimax fit of a 0/1 predicate d over weights 0..n by a
/// degree-r polynomial. poly attains max_m |d(m) - poly(m)| = eps_star
/// exactly; dual[m] = beta_m is an optimal dual with sum_m beta_m b_i(m) = 0
/// for every basis polynomial of degree i <= r, and sum |beta| = 1 whenever
/// eps_star > 0.
struct UniformApproxResult {
  int n = 0;
  int degree = 0;
  Rational eps_star;
  UnivariatePoly poly;          // Chebyshev basis scaled to [0, n]
  std::vector<Rational> dual;   // beta, size n+1
};

/// d has size n+1 with entries in {0,1}; degree r in [0, n].
UniformApproxResult best_uniform_approx(const std::vector<int>& d, int degree,
                                        const SolveOptions& opts = {});

/// The predicate of the full OR: d(0) = 0, d(m) = 1 for m >= 1.
std::vector<int> full_or_predicate(int n);

/// Weight profile rho(m) = |beta_m| from the dual certificate. Requires the
/// certificate to be normalized (sum |beta| = 1, which holds exactly when
/// eps_star > 0); throws otherwise.
WeightProfile hard_distribution_from_dual(const UniformApproxResult& res);

struct L1ApproxResult {
  Rational value;        // minimal sum_m rho(m) |d(m) - poly(m)|
  UnivariatePoly poly;   // Chebyshev basis scaled to [0, n]
};

/// Best degree-r approximation of d in l1 against the weight profile.
L1ApproxResult best_l1_approx(const std::vector<int>& d,
                              const WeightProfile& profile, int degree,
                              const SolveOptions& opts = {});

/// sum_m rho(m) |d(m) - values[m]| for given per-weight values.
Rational averaged_polynomial_error(const std::vector<Rational>& values,
                                   const std::vector<int>& d,
                                   const WeightProfile& profile);

nlohmann::ordered_json uniform_approx_to_json(const UniformApproxResult& res);
UniformApproxResult uniform_approx_from_json(const nlohmann::json& j);

}  // namespace symdis
