#include <map>

#include "doctest.h"
#include "symdis/cube.hpp"
#include "symdis/poly.hpp"
#include "symdis/polyapprox.hpp"

using namespace symdis;

namespace {

// Brute-force (l1, l2sq) of the degree-t interpolant against the monotone
// k-clause on the uniform weight-r layer, by direct enumeration.
std::pair<Rational, Rational> layer_error_oracle(int n, int r, int k, int t) {
  UnivariatePoly f = predicate_interpolant(t);
  Disjunction c = Disjunction::monotone(n, k);
  CubeDistribution d(WeightProfile::layer(n, r));
  Rational l1 = exact_l1_error(
      [&](const BitVec& x) -> Rational {
        int u = 0;
        for (int i = 1; i <= k; ++i) u += x.get(i);
        return f.eval(Rational(u));
      },
      [&](const BitVec& x) -> Rational { return Rational(c.eval(x) ? 1 : 0); },
      d);
  Rational l2 = exact_l2sq_error(
      [&](const BitVec& x) -> Rational {
        int u = 0;
        for (int i = 1; i <= k; ++i) u += x.get(i);
        return f.eval(Rational(u));
      },
      [&](const BitVec& x) -> Rational { return Rational(c.eval(x) ? 1 : 0); },
      d);
  return {l1, l2};
}

Rational enumerate_layer_l1(const LayerPolynomial& p, const Disjunction& c) {
  CubeDistribution d(WeightProfile::layer(c.n, p.r));
  return exact_l1_error(
      [&](const BitVec& x) -> Rational { return p.eval_point(x); },
      [&](const BitVec& x) -> Rational { return Rational(c.eval(x) ? 1 : 0); },
      d);
}

}  // namespace

TEST_CASE("choose_degree_layer branch selection") {
  // Small clause: exact interpolation at degree k.
  DegreePlan p = choose_degree_layer(10, 5, 2, Rational(1, 4));
  CHECK(p.strategy == DegreePlan::Strategy::ExactInterpolation);
  CHECK(p.t == 2);
  CHECK(p.degree_bound() == 2);

  // Layer forces a positive literal: constant 1 regardless of epsilon.
  p = choose_degree_layer(10, 8, 3, Rational(1, 4));
  CHECK(p.strategy == DegreePlan::Strategy::ConstantOne);
  CHECK(p.degree_bound() == 0);

  // Heavy layer: constant 1 by mass.
  p = choose_degree_layer(100, 50, 5, Rational(1, 10));
  CHECK(p.strategy == DegreePlan::Strategy::ConstantOne);

  // Below the mass threshold (50 -> 40): the interpolant branch, with
  // t = ceil(8 e^2 ln 10) = 137.
  p = choose_degree_layer(100, 40, 5, Rational(1, 10));
  CHECK(p.strategy == DegreePlan::Strategy::Interpolant);
  CHECK(p.t == 137);

  // t = ceil(8 e^2 ln 1000) = 409.
  p = choose_degree_layer(100, 10, 20, Rational(1, 1000));
  CHECK(p.strategy == DegreePlan::Strategy::Interpolant);
  CHECK(p.t == 409);

  CHECK_THROWS(choose_degree_layer(0, 0, 1, Rational(1, 2)));
  CHECK_THROWS(choose_degree_layer(5, -1, 1, Rational(1, 2)));
  CHECK_THROWS(choose_degree_layer(5, 6, 1, Rational(1, 2)));
  CHECK_THROWS(choose_degree_layer(5, 2, 0, Rational(1, 2)));
  CHECK_THROWS(choose_degree_layer(5, 2, 6, Rational(1, 2)));
  CHECK_THROWS(choose_degree_layer(5, 2, 2, Rational(0)));
  CHECK_THROWS(choose_degree_layer(5, 2, 2, Rational(1)));
  CHECK_THROWS(choose_degree_layer(5, 2, 2, Rational(3, 2)));
}

TEST_CASE("choose_degree_product branch selection") {
  // Rare all-zero event: constant 1, decided by exact rational comparison.
  DegreePlan p = choose_degree_product(3, Rational(1, 4), Rational(1, 8));
  CHECK(p.strategy == DegreePlan::Strategy::ConstantOne);
  p = choose_degree_product(3, Rational(1, 8), Rational(1, 8));  // tie counts
  CHECK(p.strategy == DegreePlan::Strategy::ConstantOne);

  // Small clause: exact at degree k.
  p = choose_degree_product(3, Rational(1, 10), Rational(1, 8));
  CHECK(p.strategy == DegreePlan::Strategy::ExactInterpolation);
  CHECK(p.t == 3);
  p = choose_degree_product(63, Rational(1, 10), Rational(1, 2));
  CHECK(p.strategy == DegreePlan::Strategy::ExactInterpolation);

  // Large clause: t = ceil(4 e^2 ln(1/eps)).
  p = choose_degree_product(64, Rational(1, 10), Rational(1, 2));
  CHECK(p.strategy == DegreePlan::Strategy::Interpolant);
  CHECK(p.t == 69);
  p = choose_degree_product(100, Rational(1, 2), Rational(3, 4));
  CHECK(p.strategy == DegreePlan::Strategy::Interpolant);
  CHECK(p.t == 21);

  CHECK_THROWS(choose_degree_product(-1, Rational(1, 2), Rational(1, 2)));
  CHECK_THROWS(choose_degree_product(3, Rational(1), Rational(1, 2)));
  CHECK_THROWS(choose_degree_product(3, Rational(1, 2), Rational(-1)));
  CHECK_THROWS(choose_degree_product(3, Rational(1, 2), Rational(2)));
}

TEST_CASE("layer_error closed form: hand values") {
  // n=4, r=2, k=2, t=1: only j=2 contributes, delta_2 = 1/6, C(1,1) = 1.
  auto [l1, l2] = layer_error(4, 2, 2, 1);
  CHECK(l1 == Rational(1, 6));
  CHECK(l2 == Rational(1, 6));

  // t=0 degenerates to Pr[clause = 1].
  auto [m1, m2] = layer_error(5, 3, 2, 0);
  CHECK(m1 == Rational(9, 10));
  CHECK(m2 == Rational(9, 10));

  // t >= min(k, r): no deviating weight class remains.
  CHECK(layer_error(4, 2, 2, 2).first == 0);
  CHECK(layer_error(6, 2, 5, 2).first == 0);

  CHECK_THROWS(layer_error(4, 5, 2, 1));
  CHECK_THROWS(layer_error(4, 2, 2, -1));
}

TEST_CASE("layer_error matches enumeration") {
  for (int n = 2; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int k = 1; k <= n; ++k) {
        for (int t = 0; t <= 4; ++t) {
          auto closed = layer_error(n, r, k, t);
          auto brute = layer_error_oracle(n, r, k, t);
          CHECK(closed.first == brute.first);
          CHECK(closed.second == brute.second);
          // Deviations are integers >= 1 wherever nonzero, so l1 <= l2sq.
          CHECK(closed.first <= closed.second);
        }
      }
    }
  }
}

TEST_CASE("product_error: hand values and enumeration") {
  std::vector<Rational> half = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(product_error(half, 0) == Rational(7, 8));
  CHECK(product_error(half, 1) == Rational(5, 8));
  CHECK(product_error(half, 3) == 0);

  std::vector<Rational> mu = {Rational(1, 3), Rational(1, 4), Rational(2, 5),
                              Rational(1, 2), Rational(1, 6)};
  for (int t = 0; t <= 3; ++t) {
    UnivariatePoly f = predicate_interpolant(t);
    int k = static_cast<int>(mu.size());
    Disjunction c = Disjunction::monotone(k, k);
    CubeDistribution d{ProductDistribution(k, mu)};
    Rational brute = exact_l1_error(
        [&](const BitVec& x) -> Rational {
          return f.eval(Rational(static_cast<long>(x.weight())));
        },
        [&](const BitVec& x) -> Rational {
          return Rational(c.eval(x) ? 1 : 0);
        },
        d);
    CHECK(product_error(mu, t) == brute);
  }
  CHECK_THROWS(product_error(half, -1));
}

TEST_CASE("approximate_disjunction_on_layer: monotone clauses") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      Disjunction c = Disjunction::monotone(n, k);
      for (int r = 0; r <= n; ++r) {
        for (Rational eps : {Rational(1, 2), Rational(1, 4), Rational(1, 10)}) {
          LayerPolynomial p = approximate_disjunction_on_layer(c, r, eps);
          CHECK(p.poly.total_degree() <= p.degree_bound());
          CHECK(enumerate_layer_l1(p, c) <= eps);
          CHECK(layer_poly_error(p, c).first == enumerate_layer_l1(p, c));
        }
      }
    }
  }
}

TEST_CASE("approximate_disjunction_on_layer: negated and mixed clauses") {
  Rational eps(1, 10);
  for (int n = 3; n <= 6; ++n) {
    std::vector<Disjunction> clauses = {
        Disjunction(n, {}, {1, 2}),          // pure negative
        Disjunction(n, {}, {2}),             // single negative literal
        Disjunction(n, {1}, {3}),            // mixed
        Disjunction(n, {1, 2}, {n}),         // mixed, wider
        Disjunction(n, {}, {}),              // empty OR, identically 0
    };
    for (const auto& c : clauses) {
      for (int r = 0; r <= n; ++r) {
        LayerPolynomial p = approximate_disjunction_on_layer(c, r, eps);
        Rational err = enumerate_layer_l1(p, c);
        CHECK(err <= eps);
        CHECK(layer_poly_error(p, c).first == err);
        CHECK(p.combined == (!c.pos.empty() && !c.neg.empty()));
      }
    }
  }
}

TEST_CASE("empty clause is represented exactly") {
  Disjunction c(4, {}, {});
  LayerPolynomial p = approximate_disjunction_on_layer(c, 2, Rational(1, 100));
  CHECK(p.poly.total_degree() == 0);
  CHECK(layer_poly_error(p, c).first == 0);
  for (uint64_t bits = 0; bits < 16; ++bits) {
    CHECK(p.eval_point(BitVec(4, bits)) == 0);
  }
}

TEST_CASE("layer_poly_error rejects mismatched clause") {
  Disjunction c(5, {1, 2}, {});
  LayerPolynomial p = approximate_disjunction_on_layer(c, 2, Rational(1, 4));
  CHECK_THROWS(layer_poly_error(p, Disjunction(5, {1, 3}, {})));
  CHECK_THROWS(approximate_disjunction_on_layer(c, 6, Rational(1, 4)));
  CHECK_THROWS(approximate_disjunction_on_layer(c, 2, Rational(2)));
}

TEST_CASE("symmetric_basis_approximation weights layer errors") {
  int n = 6;
  Disjunction c(n, {1, 4}, {2});
  std::vector<Rational> rho(n + 1, Rational(0));
  rho[1] = Rational(1, 4);
  rho[3] = Rational(1, 2);
  rho[6] = Rational(1, 4);
  WeightProfile D(n, rho);
  Rational eps(1, 10);
  SymmetricApproximation approx = symmetric_basis_approximation(c, D, eps);
  REQUIRE(approx.layers.size() == 3);
  CHECK(approx.total_error <= eps);

  std::map<int, const LayerPolynomial*> by_layer;
  Rational expect_total = 0;
  for (const auto& [r, p] : approx.layers) {
    by_layer[r] = &p;
    CHECK(layer_poly_error(p, c).first <= eps);
    expect_total += rho[r] * layer_poly_error(p, c).first;
  }
  CHECK(approx.total_error == expect_total);

  // The piecewise-by-weight function agrees with the rho-weighted error.
  Rational full = exact_l1_error(
      [&](const BitVec& x) -> Rational {
        auto it = by_layer.find(static_cast<int>(x.weight()));
        if (it == by_layer.end()) return Rational(0);
        return it->second->eval_point(x);
      },
      [&](const BitVec& x) -> Rational { return Rational(c.eval(x) ? 1 : 0); },
      CubeDistribution(D));
  CHECK(full == approx.total_error);

  CHECK_THROWS(symmetric_basis_approximation(
      Disjunction(4, {1}, {}), D, eps));  // n mismatch
}

TEST_CASE("layer polynomial JSON round trip") {
  Disjunction c(6, {1, 4}, {2, 5});
  LayerPolynomial p = approximate_disjunction_on_layer(c, 3, Rational(1, 5));
  LayerPolynomial q = layer_polynomial_from_json(layer_polynomial_to_json(p));
  CHECK(q.n == p.n);
  CHECK(q.r == p.r);
  CHECK(q.block1 == p.block1);
  CHECK(q.block2 == p.block2);
  CHECK(q.combined == p.combined);
  CHECK(q.poly.coeff == p.poly.coeff);
  CHECK(q.plan1.strategy == p.plan1.strategy);
  REQUIRE(q.plan2.has_value());
  CHECK(q.plan2->t == p.plan2->t);
  CHECK(q.plan2->epsilon == p.plan2->epsilon);
  for (uint64_t bits = 0; bits < 64; ++bits) {
    BitVec x(6, bits);
    CHECK(q.eval_point(x) == p.eval_point(x));
  }
}
