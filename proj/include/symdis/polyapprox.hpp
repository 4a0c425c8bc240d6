#pragma once
// Low-degree polynomial approximation of disjunctions: degree selection by
// case analysis, the interpolant construction per layer, the two-block
// combination for clauses with negated variables, and exact closed-form
// error evaluation.
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symdis/cube.hpp"
#include "symdis/poly.hpp"

namespace symdis {

struct DegreePlan {
  enum class Strategy { ExactInterpolation, ConstantOne, Interpolant };
  Strategy strategy = Strategy::ExactInterpolation;
  int t = 0;  // interpolation degree (= k for exact, chosen t for interpolant)
  Rational epsilon;

  int degree_bound() const {
    return strategy == Strategy::ConstantOne ? 0 : t;
  }
};

/// Degree selection for a monotone k-clause on the weight-r layer of
/// {0,1}^n. Branches: exact interpolation when k <= 2 ln(1/eps); constant 1
/// when r > n-k or r >= (n/k) ln(1/eps); otherwise the degree-
/// ceil(8 e^2 ln(1/eps)) interpolant. Floating comparisons within 2^-40 of
/// a boundary resolve toward the branch with the unconditional guarantee.
DegreePlan choose_degree_layer(int n, int r, int k, const Rational& epsilon);

/// Degree selection for a k-clause under a product distribution. The caller
/// supplies pr_all_zero = Pr[all clause literals unsatisfied] (for a
/// monotone clause, prod (1-mu_i) over the clause variables).
DegreePlan choose_degree_product(int k, const Rational& epsilon,
                                 const Rational& pr_all_zero);

/// Closed-form error of the degree-t interpolant against a monotone
/// k-clause on the weight-r layer:
///   l1 = sum_{j>t} delta_j C(j-1, t),  l2sq = sum_{j>t} delta_j C(j-1, t)^2
/// where delta_j = Pr[clause weight = j] hypergeometrically.
std::pair<Rational, Rational> layer_error(int n, int r, int k, int t);

/// Closed-form l1 error of the degree-t interpolant against a monotone
/// clause over all k coordinates of a product distribution with marginals
/// mu: sum_{j>t} Pr[w=j] C(j-1, t).
Rational product_error(const std::vector<Rational>& mu, int t);

/// A per-layer approximator of a disjunction. The polynomial is bivariate
/// in u = ones among block1 (positive literals) and v = ones among block2
/// (negated literals); evaluation on x depends only on (u, v).
struct LayerPolynomial {
  int n = 0, r = 0;
  std::vector<int> block1, block2;
  BivariatePoly poly;
  bool combined = false;  // built as p1 + p2 - p1*p2
  DegreePlan plan1;
  std::optional<DegreePlan> plan2;

  int degree_bound() const {
    return plan1.degree_bound() + (plan2 ? plan2->degree_bound() : 0);
  }
  Rational eval_uv(const Rational& u, const Rational& v) const {
    return poly.eval(u, v);
  }
  Rational eval_point(const BitVec& x) const;
};

/// Builds the layer approximator with exact l1 error at most epsilon on the
/// weight-r layer. Monotone clauses use choose_degree_layer directly; a
/// clause with negated variables flips to the weight-(n-r) layer for its
/// negated block and combines via p1 + p2 - p1*p2 with budgets eps/3.
/// The returned polynomial's error is re-certified by exact evaluation.
LayerPolynomial approximate_disjunction_on_layer(const Disjunction& c, int r,
                                                 const Rational& epsilon);

/// Exact (l1, l2sq) of a layer polynomial against its clause, via the joint
/// block pmf. The clause value at (a, b) is 0 iff a = 0 and b = |block2|.
std::pair<Rational, Rational> layer_poly_error(const LayerPolynomial& p,
                                               const Disjunction& c);

/// One approximator per layer with positive mass; each layer error <= eps,
/// hence the rho-weighted total error <= eps (returned alongside).
struct SymmetricApproximation {
  std::vector<std::pair<int, LayerPolynomial>> layers;
  Rational total_error;
};
SymmetricApproximation symmetric_basis_approximation(const Disjunction& c,
                                                     const WeightProfile& D,
                                                     const Rational& epsilon);

nlohmann::ordered_json layer_polynomial_to_json(const LayerPolynomial& p);
LayerPolynomial layer_polynomial_from_json(const nlohmann::json& j);

}  // namespace symdis
