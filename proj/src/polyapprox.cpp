#include "symdis/polyapprox.hpp"

#include <cmath>
#include <stdexcept>

namespace symdis {

namespace {

constexpr long double kESquared = 7.3890560989306502274L;
// Comparisons this close to a branch boundary resolve toward the branch
// whose guarantee does not depend on the comparison.
constexpr long double kBoundaryTol = 9.094947017729282379e-13L;  // 2^-40

void check_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("epsilon must lie in (0,1)");
}

int ceil_to_int(long double v) {
  long double c = std::ceil(v);
  if (c < 1) c = 1;
  return static_cast<int>(c);
}

}  // namespace

DegreePlan choose_degree_layer(int n, int r, int k, const Rational& epsilon) {
  if (n < 1 || r < 0 || r > n || k < 1 || k > n)
    throw std::invalid_argument("choose_degree_layer: bad (n, r, k)");
  check_epsilon(epsilon);
  long double log_inv_eps = -log_rational(epsilon);
  DegreePlan plan;
  plan.epsilon = epsilon;
  // Exact interpolation is unconditionally correct, so boundary ties fall
  // into this branch.
  if (static_cast<long double>(k) <= 2.0L * log_inv_eps + kBoundaryTol) {
    plan.strategy = DegreePlan::Strategy::ExactInterpolation;
    plan.t = k;
    return plan;
  }
  // r > n-k is integer-exact: the clause is identically 1 on the layer.
  bool const_by_support = r > n - k;
  // The analytic constant-1 test must clear the boundary by the tolerance;
  // otherwise fall through to the interpolant, whose guarantee holds
  // whenever r <= (n/k) ln(1/eps).
  bool const_by_mass =
      static_cast<long double>(r) >=
      (static_cast<long double>(n) / k) * log_inv_eps + kBoundaryTol;
  if (const_by_support || const_by_mass) {
    plan.strategy = DegreePlan::Strategy::ConstantOne;
    plan.t = 0;
    return plan;
  }
  plan.strategy = DegreePlan::Strategy::Interpolant;
  plan.t = ceil_to_int(8.0L * kESquared * log_inv_eps);
  return plan;
}

DegreePlan choose_degree_product(int k, const Rational& epsilon,
                                 const Rational& pr_all_zero) {
  if (k < 0) throw std::invalid_argument("choose_degree_product: k < 0");
  check_epsilon(epsilon);
  if (pr_all_zero < 0 || pr_all_zero > 1)
    throw std::invalid_argument("choose_degree_product: bad pr_all_zero");
  DegreePlan plan;
  plan.epsilon = epsilon;
  // Exact test: the clause is 1 except with probability pr_all_zero.
  if (pr_all_zero <= epsilon) {
    plan.strategy = DegreePlan::Strategy::ConstantOne;
    plan.t = 0;
    return plan;
  }
  constexpr int kSmallClauseCutoff = 64;  // k0
  if (k < kSmallClauseCutoff) {
    plan.strategy = DegreePlan::Strategy::ExactInterpolation;
    plan.t = k;
    return plan;
  }
  plan.strategy = DegreePlan::Strategy::Interpolant;
  plan.t = ceil_to_int(4.0L * kESquared * (-log_rational(epsilon)));
  return plan;
}

std::pair<Rational, Rational> layer_error(int n, int r, int k, int t) {
  if (n < 1 || r < 0 || r > n || k < 0 || k > n || t < 0)
    throw std::invalid_argument("layer_error: bad inputs");
  Rational total(binomial(n, r));
  Rational l1 = 0, l2 = 0;
  for (int j = t + 1; j <= std::min(k, r); ++j) {
    Integer ways = binomial(k, j) * binomial(n - k, r - j);
    if (ways == 0) continue;
    Rational delta = Rational(ways) / total;
    Rational dev(binomial(j - 1, t));
    l1 += delta * dev;
    l2 += delta * dev * dev;
  }
  return {l1, l2};
}

Rational product_error(const std::vector<Rational>& mu, int t) {
  if (t < 0) throw std::invalid_argument("product_error: t < 0");
  std::vector<Rational> pmf = product_weight_pmf(mu);
  Rational l1 = 0;
  for (size_t j = t + 1; j < pmf.size(); ++j) {
    if (pmf[j] == 0) continue;
    l1 += pmf[j] * Rational(binomial(static_cast<long>(j) - 1, t));
  }
  return l1;
}

Rational LayerPolynomial::eval_point(const BitVec& x) const {
  if (x.n() != n)
    throw std::invalid_argument("LayerPolynomial::eval_point: wrong n");
  int u = 0, v = 0;
  for (int i : block1) u += x.get(i);
  for (int i : block2) v += x.get(i);
  return poly.eval(Rational(u), Rational(v));
}

namespace {

// Univariate interpolant-or-constant for a monotone k-clause per the plan.
UnivariatePoly monotone_poly_for_plan(const DegreePlan& plan, int k) {
  switch (plan.strategy) {
    case DegreePlan::Strategy::ExactInterpolation:
      return predicate_interpolant(k);
    case DegreePlan::Strategy::ConstantOne:
      return UnivariatePoly::constant(Rational(1));
    case DegreePlan::Strategy::Interpolant:
      return predicate_interpolant(plan.t);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LayerPolynomial approximate_disjunction_on_layer(const Disjunction& c, int r,
                                                 const Rational& epsilon) {
  if (r < 0 || r > c.n)
    throw std::invalid_argument("approximate_disjunction_on_layer: bad r");
  check_epsilon(epsilon);
  const int k1 = c.k1(), k2 = c.k2();
  LayerPolynomial out;
  out.n = c.n;
  out.r = r;
  out.block1 = c.pos;
  out.block2 = c.neg;

  if (k1 == 0 && k2 == 0) {
    // Empty OR: identically 0, represented exactly.
    out.poly = BivariatePoly::zero();
    out.plan1 = DegreePlan{DegreePlan::Strategy::ExactInterpolation, 0,
                           epsilon};
    out.combined = false;
  } else if (k2 == 0) {
    out.plan1 = choose_degree_layer(c.n, r, k1, epsilon);
    out.poly = BivariatePoly::from_u(monotone_poly_for_plan(out.plan1, k1));
    out.combined = false;
  } else if (k1 == 0) {
    // Pure negated clause: flipping 0 and 1 sends the weight-r layer to the
    // weight-(n-r) layer and the clause to a monotone k2-clause in
    // w' = k2 - v. The full epsilon budget applies.
    out.plan1 = choose_degree_layer(c.n, c.n - r, k2, epsilon);
    UnivariatePoly f = monotone_poly_for_plan(out.plan1, k2);
    out.poly = BivariatePoly::from_v(
        compose_affine(f, Rational(k2), Rational(-1)));
    out.combined = false;
  } else {
    out.plan1 = choose_degree_layer(c.n, r, k1, epsilon / 3);
    DegreePlan plan2 = choose_degree_layer(c.n, c.n - r, k2, epsilon / 3);
    UnivariatePoly f1 = monotone_poly_for_plan(out.plan1, k1);
    UnivariatePoly f2 = monotone_poly_for_plan(plan2, k2);
    BivariatePoly p1 = BivariatePoly::from_u(f1);
    BivariatePoly p2 = BivariatePoly::from_v(
        compose_affine(f2, Rational(k2), Rational(-1)));
    out.poly = sub(add(p1, p2), mul(p1, p2));
    out.plan2 = plan2;
    out.combined = true;
  }

  auto [l1, l2] = layer_poly_error(out, c);
  if (l1 > epsilon)
    throw std::logic_error(
        "approximate_disjunction_on_layer: certified error exceeds target");
  (void)l2;
  return out;
}

std::pair<Rational, Rational> layer_poly_error(const LayerPolynomial& p,
                                               const Disjunction& c) {
  if (p.n != c.n || p.block1 != c.pos || p.block2 != c.neg)
    throw std::invalid_argument("layer_poly_error: clause/polynomial mismatch");
  const int k1 = c.k1(), k2 = c.k2();
  auto pmf = layer_block_pmf(c.n, p.r, k1, k2);
  Rational l1 = 0, l2 = 0;
  for (int a = 0; a <= k1; ++a)
    for (int b = 0; b <= k2; ++b) {
      if (pmf[a][b] == 0) continue;
      // The clause is 0 only when no positive literal fires (a = 0) and
      // every negated variable is 1 (b = k2).
      Rational cval = (a == 0 && b == k2) ? 0 : 1;
      Rational dev = cval - p.eval_uv(Rational(a), Rational(b));
      l1 += pmf[a][b] * abs(dev);
      l2 += pmf[a][b] * dev * dev;
    }
  return {l1, l2};
}

SymmetricApproximation symmetric_basis_approximation(const Disjunction& c,
                                                     const WeightProfile& D,
                                                     const Rational& epsilon) {
  if (c.n != D.n)
    throw std::invalid_argument("symmetric_basis_approximation: n mismatch");
  check_epsilon(epsilon);
  SymmetricApproximation out;
  out.total_error = 0;
  for (int r = 0; r <= D.n; ++r) {
    if (D.rho[r] == 0) continue;
    LayerPolynomial p = approximate_disjunction_on_layer(c, r, epsilon);
    out.total_error += D.rho[r] * layer_poly_error(p, c).first;
    out.layers.emplace_back(r, std::move(p));
  }
  if (out.total_error > epsilon)
    throw std::logic_error("symmetric_basis_approximation: error exceeds target");
  return out;
}

namespace {

nlohmann::ordered_json plan_to_json(const DegreePlan& plan) {
  nlohmann::ordered_json j;
  switch (plan.strategy) {
    case DegreePlan::Strategy::ExactInterpolation:
      j["strategy"] = "exact_interpolation";
      break;
    case DegreePlan::Strategy::ConstantOne:
      j["strategy"] = "constant_one";
      break;
    case DegreePlan::Strategy::Interpolant:
      j["strategy"] = "interpolant";
      break;
  }
  j["t"] = plan.t;
  j["epsilon"] = to_fraction_string(plan.epsilon);
  return j;
}

DegreePlan plan_from_json(const nlohmann::json& j) {
  DegreePlan plan;
  std::string s = j.at("strategy").get<std::string>();
  if (s == "exact_interpolation")
    plan.strategy = DegreePlan::Strategy::ExactInterpolation;
  else if (s == "constant_one")
    plan.strategy = DegreePlan::Strategy::ConstantOne;
  else if (s == "interpolant")
    plan.strategy = DegreePlan::Strategy::Interpolant;
  else
    throw std::invalid_argument("degree plan: unknown strategy");
  plan.t = j.at("t").get<int>();
  plan.epsilon = rational_from_string(j.at("epsilon").get<std::string>());
  return plan;
}

}  // namespace

nlohmann::ordered_json layer_polynomial_to_json(const LayerPolynomial& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["r"] = p.r;
  j["block1"] = p.block1;
  j["block2"] = p.block2;
  j["combined"] = p.combined;
  j["plan1"] = plan_to_json(p.plan1);
  if (p.plan2) j["plan2"] = plan_to_json(*p.plan2);
  j["poly"] = bivariate_to_json(p.poly);
  return j;
}

LayerPolynomial layer_polynomial_from_json(const nlohmann::json& j) {
  LayerPolynomial p;
  p.n = j.at("n").get<int>();
  p.r = j.at("r").get<int>();
  p.block1 = j.at("block1").get<std::vector<int>>();
  p.block2 = j.at("block2").get<std::vector<int>>();
  p.combined = j.at("combined").get<bool>();
  p.plan1 = plan_from_json(j.at("plan1"));
  if (j.contains("plan2")) p.plan2 = plan_from_json(j.at("plan2"));
  p.poly = bivariate_from_json(j.at("poly"));
  return p;
}

}  // namespace symdis
