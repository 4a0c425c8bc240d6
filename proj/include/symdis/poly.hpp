#pragma once
// Exact polynomials. Univariate polynomials carry either monomial
// coefficients or coefficients over a Chebyshev basis rescaled to [0, n];
// bivariate polynomials are monomial-only and tiny (degree bounded by
// block sizes).
#include <vector>

#include "json.hpp"
#include "symdis/rational.hpp"

namespace symdis {

enum class PolyBasis { Monomial, ChebyshevScaled };

struct UnivariatePoly {
  // coeffs[i] multiplies w^i (monomial) or T_i(2w/scale_n - 1) (Chebyshev
  // rescaled to [0, scale_n]). Trailing zeros are trimmed; the zero
  // polynomial is {0} with degree 0.
  std::vector<Rational> coeffs{Rational(0)};
  PolyBasis basis = PolyBasis::Monomial;
  int scale_n = 0;

  static UnivariatePoly constant(const Rational& c);
  static UnivariatePoly chebyshev(std::vector<Rational> coeffs, int scale_n);
  static UnivariatePoly monomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  Rational eval(const Rational& w) const;
  UnivariatePoly to_monomial() const;

  void trim();
};

/// Values of the scaled Chebyshev basis T_0..T_degree at point w, where the
/// domain [0, n] maps onto [-1, 1]. Exact three-term recurrence.
std::vector<Rational> chebyshev_basis_values(int n, int degree,
                                             const Rational& w);

// Monomial-basis arithmetic (throws if an argument is not monomial).
UnivariatePoly add(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly sub(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly mul(const UnivariatePoly& a, const UnivariatePoly& b);
/// p(a + b*w) expanded in the monomial basis.
UnivariatePoly compose_affine(const UnivariatePoly& p, const Rational& a,
                              const Rational& b);

/// f(w) = 1 - (1/t!) * prod_{i=1..t} (i - w), the degree-t polynomial with
/// f(0) = 0 and f(w) = 1 for w in {1..t}. t = 0 yields the zero polynomial.
UnivariatePoly predicate_interpolant(int t);

struct BivariatePoly {
  // coeff[a][b] multiplies u^a v^b. Rows trimmed so the last row and the
  // last column of the last row are structurally nonzero (zero poly is
  // a single zero entry).
  std::vector<std::vector<Rational>> coeff{{Rational(0)}};

  static BivariatePoly zero();
  static BivariatePoly from_u(const UnivariatePoly& p);  // monomial in u
  static BivariatePoly from_v(const UnivariatePoly& p);  // monomial in v

  int total_degree() const;
  Rational eval(const Rational& u, const Rational& v) const;
  void trim();
};

BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly sub(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b);

nlohmann::ordered_json univariate_to_json(const UnivariatePoly& p);
UnivariatePoly univariate_from_json(const nlohmann::json& j);
nlohmann::ordered_json bivariate_to_json(const BivariatePoly& p);
BivariatePoly bivariate_from_json(const nlohmann::json& j);

}  // namespace symdis
