#include "symdis/poly.hpp"

#include <stdexcept>

namespace symdis {

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
  UnivariatePoly p;
  p.coeffs = {c};
  return p;
}

UnivariatePoly UnivariatePoly::chebyshev(std::vector<Rational> coeffs,
                                         int scale_n) {
  if (scale_n < 1)
    throw std::invalid_argument("UnivariatePoly: Chebyshev scale must be >= 1");
  UnivariatePoly p;
  p.coeffs = std::move(coeffs);
  p.basis = PolyBasis::ChebyshevScaled;
  p.scale_n = scale_n;
  p.trim();
  return p;
}

UnivariatePoly UnivariatePoly::monomial(std::vector<Rational> coeffs) {
  UnivariatePoly p;
  p.coeffs = std::move(coeffs);
  p.trim();
  return p;
}

bool UnivariatePoly::is_zero() const {
  return coeffs.size() == 1 && coeffs[0] == 0;
}

void UnivariatePoly::trim() {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) coeffs = {Rational(0)};
}

Rational UnivariatePoly::eval(const Rational& w) const {
  if (basis == PolyBasis::Monomial) {
    Rational acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * w + coeffs[i];
    return acc;
  }
  std::vector<Rational> t = chebyshev_basis_values(scale_n, degree(), w);
  Rational acc = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * t[i];
  return acc;
}

std::vector<Rational> chebyshev_basis_values(int n, int degree,
                                             const Rational& w) {
  if (n < 1) throw std::invalid_argument("chebyshev_basis_values: bad n");
  if (degree < 0) throw std::invalid_argument("chebyshev_basis_values: degree");
  Rational x = Rational(2) * w / n - 1;
  std::vector<Rational> t(degree + 1);
  t[0] = 1;
  if (degree >= 1) t[1] = x;
  for (int i = 2; i <= degree; ++i) t[i] = Rational(2) * x * t[i - 1] - t[i - 2];
  return t;
}

UnivariatePoly UnivariatePoly::to_monomial() const {
  if (basis == PolyBasis::Monomial) return *this;
  // Expand each T_i(2w/n - 1) by the recurrence in monomial coefficients.
  int d = degree();
  std::vector<Rational> lin{Rational(-1), Rational(2) / scale_n};  // 2w/n - 1
  std::vector<std::vector<Rational>> t(d + 1);
  t[0] = {Rational(1)};
  if (d >= 1) t[1] = lin;
  auto mul_vec = [](const std::vector<Rational>& a,
                    const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  for (int i = 2; i <= d; ++i) {
    std::vector<Rational> two_x_prev = mul_vec(lin, t[i - 1]);
    for (Rational& c : two_x_prev) c *= 2;
    std::vector<Rational> cur = std::move(two_x_prev);
    for (size_t j = 0; j < t[i - 2].size(); ++j) cur[j] -= t[i - 2][j];
    t[i] = std::move(cur);
  }
  std::vector<Rational> mono(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i)
    for (size_t j = 0; j < t[i].size(); ++j) mono[j] += coeffs[i] * t[i][j];
  return UnivariatePoly::monomial(std::move(mono));
}

namespace {

void require_monomial(const UnivariatePoly& p, const char* op) {
  if (p.basis != PolyBasis::Monomial)
    throw std::invalid_argument(std::string(op) +
                                ": monomial basis required");
}

}  // namespace

UnivariatePoly add(const UnivariatePoly& a, const UnivariatePoly& b) {
  require_monomial(a, "add");
  require_monomial(b, "add");
  std::vector<Rational> out(std::max(a.coeffs.size(), b.coeffs.size()),
                            Rational(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
  return UnivariatePoly::monomial(std::move(out));
}

UnivariatePoly sub(const UnivariatePoly& a, const UnivariatePoly& b) {
  require_monomial(a, "sub");
  require_monomial(b, "sub");
  std::vector<Rational> out(std::max(a.coeffs.size(), b.coeffs.size()),
                            Rational(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
  return UnivariatePoly::monomial(std::move(out));
}

UnivariatePoly mul(const UnivariatePoly& a, const UnivariatePoly& b) {
  require_monomial(a, "mul");
  require_monomial(b, "mul");
  std::vector<Rational> out(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      out[i + j] += a.coeffs[i] * b.coeffs[j];
  return UnivariatePoly::monomial(std::move(out));
}

UnivariatePoly compose_affine(const UnivariatePoly& p, const Rational& a,
                              const Rational& b) {
  require_monomial(p, "compose_affine");
  // Horner in the substituted variable: result = (...(c_d)*(a+bw) + c_{d-1})...
  UnivariatePoly lin = UnivariatePoly::monomial({a, b});
  UnivariatePoly acc = UnivariatePoly::constant(p.coeffs.back());
  for (size_t i = p.coeffs.size() - 1; i-- > 0;) {
    acc = add(mul(acc, lin), UnivariatePoly::constant(p.coeffs[i]));
  }
  return acc;
}

UnivariatePoly predicate_interpolant(int t) {
  if (t < 0) throw std::invalid_argument("predicate_interpolant: t < 0");
  if (t == 0) return UnivariatePoly::constant(Rational(0));
  // g(w) = prod_{i=1..t} (i - w), built iteratively; f = 1 - g/t!.
  std::vector<Rational> g{Rational(1)};
  for (int i = 1; i <= t; ++i) {
    std::vector<Rational> next(g.size() + 1, Rational(0));
    for (size_t j = 0; j < g.size(); ++j) {
      next[j] += Rational(i) * g[j];
      next[j + 1] -= g[j];
    }
    g = std::move(next);
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(t));
  std::vector<Rational> f(g.size(), Rational(0));
  Rational inv_fact = Rational(1) / Rational(fact);
  for (size_t j = 0; j < g.size(); ++j) f[j] = -g[j] * inv_fact;
  f[0] += 1;
  return UnivariatePoly::monomial(std::move(f));
}

BivariatePoly BivariatePoly::zero() { return BivariatePoly{}; }

BivariatePoly BivariatePoly::from_u(const UnivariatePoly& p) {
  require_monomial(p, "BivariatePoly::from_u");
  BivariatePoly out;
  out.coeff.assign(p.coeffs.size(), {Rational(0)});
  for (size_t a = 0; a < p.coeffs.size(); ++a) out.coeff[a] = {p.coeffs[a]};
  out.trim();
  return out;
}

BivariatePoly BivariatePoly::from_v(const UnivariatePoly& p) {
  require_monomial(p, "BivariatePoly::from_v");
  BivariatePoly out;
  out.coeff = {p.coeffs};
  out.trim();
  return out;
}

void BivariatePoly::trim() {
  for (auto& row : coeff) {
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    if (row.empty()) row = {Rational(0)};
  }
  while (coeff.size() > 1 && coeff.back().size() == 1 && coeff.back()[0] == 0)
    coeff.pop_back();
  if (coeff.empty()) coeff = {{Rational(0)}};
}

int BivariatePoly::total_degree() const {
  int d = 0;
  for (size_t a = 0; a < coeff.size(); ++a)
    for (size_t b = 0; b < coeff[a].size(); ++b)
      if (coeff[a][b] != 0) d = std::max(d, static_cast<int>(a + b));
  return d;
}

Rational BivariatePoly::eval(const Rational& u, const Rational& v) const {
  // Horner over u of Horner over v.
  Rational acc = 0;
  for (size_t a = coeff.size(); a-- > 0;) {
    Rational row = 0;
    for (size_t b = coeff[a].size(); b-- > 0;) row = row * v + coeff[a][b];
    acc = acc * u + row;
  }
  return acc;
}

BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  out.coeff.assign(std::max(a.coeff.size(), b.coeff.size()),
                   std::vector<Rational>{Rational(0)});
  for (size_t i = 0; i < out.coeff.size(); ++i) {
    size_t cols = 1;
    if (i < a.coeff.size()) cols = std::max(cols, a.coeff[i].size());
    if (i < b.coeff.size()) cols = std::max(cols, b.coeff[i].size());
    out.coeff[i].assign(cols, Rational(0));
    if (i < a.coeff.size())
      for (size_t j = 0; j < a.coeff[i].size(); ++j)
        out.coeff[i][j] += a.coeff[i][j];
    if (i < b.coeff.size())
      for (size_t j = 0; j < b.coeff[i].size(); ++j)
        out.coeff[i][j] += b.coeff[i][j];
  }
  out.trim();
  return out;
}

BivariatePoly sub(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly neg = b;
  for (auto& row : neg.coeff)
    for (auto& c : row) c = -c;
  return add(a, neg);
}

BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  out.coeff.assign(a.coeff.size() + b.coeff.size() - 1,
                   std::vector<Rational>{});
  size_t cols = 0;
  for (const auto& row : a.coeff) cols = std::max(cols, row.size());
  size_t bcols = 0;
  for (const auto& row : b.coeff) bcols = std::max(bcols, row.size());
  for (auto& row : out.coeff) row.assign(cols + bcols - 1, Rational(0));
  for (size_t i = 0; i < a.coeff.size(); ++i)
    for (size_t j = 0; j < a.coeff[i].size(); ++j) {
      if (a.coeff[i][j] == 0) continue;
      for (size_t k = 0; k < b.coeff.size(); ++k)
        for (size_t l = 0; l < b.coeff[k].size(); ++l)
          out.coeff[i + k][j + l] += a.coeff[i][j] * b.coeff[k][l];
    }
  out.trim();
  return out;
}

nlohmann::ordered_json univariate_to_json(const UnivariatePoly& p) {
  nlohmann::ordered_json j;
  j["basis"] =
      p.basis == PolyBasis::Monomial ? "monomial" : "chebyshev_scaled";
  if (p.basis == PolyBasis::ChebyshevScaled) j["scale_n"] = p.scale_n;
  auto& c = j["coeffs"] = nlohmann::ordered_json::array();
  for (const Rational& q : p.coeffs) c.push_back(to_fraction_string(q));
  return j;
}

UnivariatePoly univariate_from_json(const nlohmann::json& j) {
  std::string basis = j.at("basis").get<std::string>();
  std::vector<Rational> coeffs;
  for (const auto& v : j.at("coeffs"))
    coeffs.push_back(rational_from_string(v.get<std::string>()));
  if (basis == "monomial") return UnivariatePoly::monomial(std::move(coeffs));
  if (basis == "chebyshev_scaled")
    return UnivariatePoly::chebyshev(std::move(coeffs),
                                     j.at("scale_n").get<int>());
  throw std::invalid_argument("univariate poly: unknown basis");
}

nlohmann::ordered_json bivariate_to_json(const BivariatePoly& p) {
  nlohmann::ordered_json j;
  auto& rows = j["coeff"] = nlohmann::ordered_json::array();
  for (const auto& row : p.coeff) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Rational& q : row) r.push_back(to_fraction_string(q));
    rows.push_back(std::move(r));
  }
  return j;
}

BivariatePoly bivariate_from_json(const nlohmann::json& j) {
  BivariatePoly p;
  p.coeff.clear();
  for (const auto& row : j.at("coeff")) {
    std::vector<Rational> r;
    for (const auto& v : row)
      r.push_back(rational_from_string(v.get<std::string>()));
    p.coeff.push_back(std::move(r));
  }
  p.trim();
  return p;
}

}  // namespace symdis
