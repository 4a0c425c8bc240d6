#include <cmath>
#include <random>

#include "doctest.h"
#include "symdis/cube.hpp"
#include "symdis/poly.hpp"

using namespace symdis;

namespace {

// Independent oracle for the interpolant: evaluate 1 - prod(i - w)/t!
// directly, with no coefficient expansion.
Rational interpolant_oracle(int t, const Rational& w) {
  Rational prod = 1;
  Integer fact = 1;
  for (int i = 1; i <= t; ++i) {
    prod *= Rational(i) - w;
    fact *= i;
  }
  return Rational(1) - prod / Rational(fact);
}

// Chebyshev T_d(x) for any real x via the trig/hyperbolic closed forms.
double chebyshev_oracle(int d, double x) {
  if (std::abs(x) <= 1.0) return std::cos(d * std::acos(x));
  double s = (x < 0 && d % 2 == 1) ? -1.0 : 1.0;
  return s * std::cosh(d * std::acosh(std::abs(x)));
}

UnivariatePoly random_monomial_poly(std::mt19937_64& gen, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(deg(gen) + 1);
  for (auto& ci : c) {
    ci = Rational(num(gen), den(gen));
    ci.canonicalize();
  }
  return UnivariatePoly::monomial(c);
}

}  // namespace

TEST_CASE("predicate_interpolant matches its defining product") {
  for (int t = 0; t <= 20; ++t) {
    UnivariatePoly f = predicate_interpolant(t);
    if (t == 0) {
      CHECK(f.is_zero());
      continue;
    }
    CHECK(f.degree() == t);
    for (int w = 0; w <= 40; ++w) {
      CHECK(f.eval(Rational(w)) == interpolant_oracle(t, Rational(w)));
    }
    // Non-integer points too: the polynomials agree everywhere.
    CHECK(f.eval(Rational(1, 2)) == interpolant_oracle(t, Rational(1, 2)));
    CHECK(f.eval(Rational(-3, 7)) == interpolant_oracle(t, Rational(-3, 7)));
  }
  CHECK_THROWS(predicate_interpolant(-1));
}

TEST_CASE("predicate_interpolant piecewise values") {
  for (int t = 1; t <= 12; ++t) {
    UnivariatePoly f = predicate_interpolant(t);
    CHECK(f.eval(Rational(0)) == 0);
    for (int w = 1; w <= t; ++w) CHECK(f.eval(Rational(w)) == 1);
    for (int w = t + 1; w <= 30; ++w) {
      Rational dev = binomial(w - 1, t);
      if (t % 2 == 1) dev = -dev;
      CHECK(f.eval(Rational(w)) == Rational(1) - dev);
    }
  }
}

TEST_CASE("chebyshev_basis_values: recurrence agrees with closed form") {
  for (int n : {1, 2, 5, 9, 16}) {
    for (int w = 0; w <= n; ++w) {
      auto vals = chebyshev_basis_values(n, 12, Rational(w));
      REQUIRE(vals.size() == 13);
      double x = 2.0 * w / n - 1.0;
      for (int d = 0; d <= 12; ++d) {
        CHECK(vals[d].get_d() ==
              doctest::Approx(chebyshev_oracle(d, x)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("chebyshev endpoint and symmetry identities") {
  int n = 11;
  auto at0 = chebyshev_basis_values(n, 8, Rational(0));
  auto atn = chebyshev_basis_values(n, 8, Rational(n));
  for (int d = 0; d <= 8; ++d) {
    CHECK(atn[d] == 1);
    CHECK(at0[d] == (d % 2 == 0 ? 1 : -1));
  }
  // T_d(-x) = (-1)^d T_d(x): values at w and n - w.
  for (int w = 0; w <= n; ++w) {
    auto a = chebyshev_basis_values(n, 8, Rational(w));
    auto b = chebyshev_basis_values(n, 8, Rational(n - w));
    for (int d = 0; d <= 8; ++d) {
      CHECK(a[d] == (d % 2 == 0 ? b[d] : -b[d]));
    }
  }
  CHECK_THROWS(chebyshev_basis_values(0, 3, Rational(0)));
}

TEST_CASE("chebyshev polynomial eval equals monomial conversion") {
  int n = 10;
  std::vector<Rational> c = {Rational(1, 3), Rational(-2), Rational(0),
                             Rational(5, 7), Rational(1)};
  for (auto& ci : c) ci.canonicalize();
  UnivariatePoly p = UnivariatePoly::chebyshev(c, n);
  UnivariatePoly q = p.to_monomial();
  CHECK(q.basis == PolyBasis::Monomial);
  CHECK(q.degree() == p.degree());
  for (int w = -3; w <= n + 3; ++w) {
    CHECK(p.eval(Rational(w)) == q.eval(Rational(w)));
  }
  CHECK(p.eval(Rational(7, 2)) == q.eval(Rational(7, 2)));
}

TEST_CASE("monomial arithmetic: hand identities") {
  UnivariatePoly one_plus = UnivariatePoly::monomial({1, 1});
  UnivariatePoly one_minus = UnivariatePoly::monomial({1, -1});
  UnivariatePoly prod = mul(one_plus, one_minus);
  CHECK(prod.coeffs == std::vector<Rational>{1, 0, -1});

  UnivariatePoly sq = mul(one_plus, one_plus);
  CHECK(sq.coeffs == std::vector<Rational>{1, 2, 1});

  CHECK(sub(one_plus, one_plus).is_zero());
  CHECK(add(one_plus, one_minus).coeffs == std::vector<Rational>{2});

  UnivariatePoly z = UnivariatePoly::constant(0);
  CHECK(mul(z, one_plus).is_zero());
  CHECK(add(z, one_plus).coeffs == one_plus.coeffs);

  // Arithmetic refuses Chebyshev operands.
  UnivariatePoly cheb = UnivariatePoly::chebyshev({Rational(1)}, 4);
  CHECK_THROWS(add(cheb, one_plus));
  CHECK_THROWS(mul(cheb, one_plus));
}

TEST_CASE("monomial arithmetic agrees with pointwise oracle") {
  std::mt19937_64 gen(7);
  std::vector<Rational> pts = {Rational(0),     Rational(1), Rational(-2),
                               Rational(1, 2),  Rational(3), Rational(-5, 3),
                               Rational(11, 4), Rational(7)};
  for (auto& p : pts) p.canonicalize();
  for (int rep = 0; rep < 25; ++rep) {
    UnivariatePoly a = random_monomial_poly(gen, 6);
    UnivariatePoly b = random_monomial_poly(gen, 6);
    for (const auto& w : pts) {
      CHECK(add(a, b).eval(w) == a.eval(w) + b.eval(w));
      CHECK(sub(a, b).eval(w) == a.eval(w) - b.eval(w));
      CHECK(mul(a, b).eval(w) == a.eval(w) * b.eval(w));
    }
  }
}

TEST_CASE("compose_affine substitutes the argument") {
  std::mt19937_64 gen(11);
  Rational a(3, 2), b(-2);
  a.canonicalize();
  for (int rep = 0; rep < 25; ++rep) {
    UnivariatePoly p = random_monomial_poly(gen, 6);
    UnivariatePoly q = compose_affine(p, a, b);
    for (int w = -4; w <= 4; ++w) {
      CHECK(q.eval(Rational(w)) == p.eval(a + b * Rational(w)));
    }
  }
  // The flip used to mirror a layer: p(n - w).
  UnivariatePoly p = UnivariatePoly::monomial({0, 0, 1});  // w^2
  UnivariatePoly flipped = compose_affine(p, Rational(6), Rational(-1));
  CHECK(flipped.coeffs == std::vector<Rational>{36, -12, 1});
  // Constant substitution collapses the degree.
  CHECK(compose_affine(p, Rational(5), Rational(0)).coeffs ==
        std::vector<Rational>{25});
}

TEST_CASE("trim and zero conventions") {
  UnivariatePoly p = UnivariatePoly::monomial({Rational(2), Rational(0)});
  CHECK(p.degree() == 0);  // factory trims
  CHECK_FALSE(p.is_zero());
  UnivariatePoly z = UnivariatePoly::monomial({Rational(0), Rational(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == 0);
  CHECK(z.coeffs == std::vector<Rational>{0});
}

TEST_CASE("bivariate construction and evaluation") {
  UnivariatePoly p = UnivariatePoly::monomial({1, 2, 3});  // 1 + 2w + 3w^2
  BivariatePoly pu = BivariatePoly::from_u(p);
  BivariatePoly pv = BivariatePoly::from_v(p);
  for (int u = -2; u <= 2; ++u) {
    for (int v = -2; v <= 2; ++v) {
      CHECK(pu.eval(Rational(u), Rational(v)) == p.eval(Rational(u)));
      CHECK(pv.eval(Rational(u), Rational(v)) == p.eval(Rational(v)));
    }
  }
  CHECK(pu.total_degree() == 2);
  CHECK(pv.total_degree() == 2);
  CHECK(BivariatePoly::zero().total_degree() == 0);
  CHECK(BivariatePoly::zero().eval(Rational(3), Rational(4)) == 0);
}

TEST_CASE("bivariate arithmetic agrees with pointwise oracle") {
  std::mt19937_64 gen(13);
  for (int rep = 0; rep < 15; ++rep) {
    BivariatePoly a = mul(BivariatePoly::from_u(random_monomial_poly(gen, 3)),
                          BivariatePoly::from_v(random_monomial_poly(gen, 3)));
    BivariatePoly b = mul(BivariatePoly::from_u(random_monomial_poly(gen, 3)),
                          BivariatePoly::from_v(random_monomial_poly(gen, 3)));
    for (int u = -2; u <= 2; ++u) {
      for (int v = -2; v <= 2; ++v) {
        Rational ru(u), rv(v);
        CHECK(add(a, b).eval(ru, rv) == a.eval(ru, rv) + b.eval(ru, rv));
        CHECK(sub(a, b).eval(ru, rv) == a.eval(ru, rv) - b.eval(ru, rv));
        CHECK(mul(a, b).eval(ru, rv) == a.eval(ru, rv) * b.eval(ru, rv));
      }
    }
  }
}

TEST_CASE("bivariate total degree and cancellation") {
  // (u*v) * (u*v) has total degree 4.
  UnivariatePoly w = UnivariatePoly::monomial({0, 1});
  BivariatePoly uv = mul(BivariatePoly::from_u(w), BivariatePoly::from_v(w));
  CHECK(uv.total_degree() == 2);
  CHECK(mul(uv, uv).total_degree() == 4);
  // Subtraction that cancels everything trims to the zero shape.
  BivariatePoly d = sub(uv, uv);
  CHECK(d.coeff == BivariatePoly::zero().coeff);
}

TEST_CASE("polynomial JSON round trips") {
  UnivariatePoly p = UnivariatePoly::chebyshev(
      {Rational(1, 3), Rational(-2), Rational(5, 7)}, 9);
  UnivariatePoly p2 = univariate_from_json(univariate_to_json(p));
  CHECK(p2.basis == PolyBasis::ChebyshevScaled);
  CHECK(p2.scale_n == 9);
  CHECK(p2.coeffs == p.coeffs);

  UnivariatePoly m = UnivariatePoly::monomial({Rational(0), Rational(-7, 2)});
  UnivariatePoly m2 = univariate_from_json(univariate_to_json(m));
  CHECK(m2.basis == PolyBasis::Monomial);
  CHECK(m2.coeffs == m.coeffs);

  BivariatePoly b = mul(BivariatePoly::from_u(UnivariatePoly::monomial({1, 2})),
                        BivariatePoly::from_v(UnivariatePoly::monomial({3, 4})));
  BivariatePoly b2 = bivariate_from_json(bivariate_to_json(b));
  CHECK(b2.coeff == b.coeff);

  CHECK_THROWS(univariate_from_json(nlohmann::json{{"basis", "unknown"}}));
}
