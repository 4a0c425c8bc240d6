#include "symdis/approx_lp.hpp"

#include <stdexcept>

namespace symdis {

namespace {

void check_predicate(const std::vector<int>& d, int n) {
  if (n < 1) throw std::invalid_argument("predicate: need n >= 1");
  if (d.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("predicate: need n+1 values");
  for (int v : d)
    if (v != 0 && v != 1)
      throw std::invalid_argument("predicate: values must be 0/1");
}

}  // namespace

std::vector<int> full_or_predicate(int n) {
  if (n < 1) throw std::invalid_argument("full_or_predicate: n >= 1");
  std::vector<int> d(n + 1, 1);
  d[0] = 0;
  return d;
}

UniformApproxResult best_uniform_approx(const std::vector<int>& d, int degree,
                                        const SolveOptions& opts) {
  const int n = static_cast<int>(d.size()) - 1;
  check_predicate(d, n);
  if (degree < 0 || degree > n)
    throw std::invalid_argument("best_uniform_approx: degree outside [0, n]");

  // Variables: eps (>= 0), then alpha_0..alpha_degree (free) over the
  // Chebyshev basis scaled to [0, n]. Rows come in pairs per weight m:
  //   eps + p(m) >= d(m)      (G row)
  //   eps - p(m) >= -d(m)     (H row)
  // so the dual splits as beta_m = y_G - y_H.
  LinearProgram lp;
  const int nv = 1 + degree + 1;
  lp.direction = Direction::Minimize;
  lp.objective.assign(nv, Rational(0));
  lp.objective[0] = 1;
  lp.bounds.assign(nv, VarBound::Free);
  lp.bounds[0] = VarBound::NonNegative;
  for (int m = 0; m <= n; ++m) {
    std::vector<Rational> basis = chebyshev_basis_values(n, degree, Rational(m));
    std::vector<Rational> g(nv), h(nv);
    g[0] = 1;
    h[0] = 1;
    for (int i = 0; i <= degree; ++i) {
      g[i + 1] = basis[i];
      h[i + 1] = -basis[i];
    }
    lp.add_row(std::move(g), RowSense::GreaterEq, Rational(d[m]));
    lp.add_row(std::move(h), RowSense::GreaterEq, Rational(-d[m]));
  }

  LPSolution sol = solve_lp(lp, opts);
  if (sol.status != LPStatus::Optimal)
    throw std::logic_error("best_uniform_approx: LP not optimal");

  UniformApproxResult res;
  res.n = n;
  res.degree = degree;
  res.eps_star = sol.objective;
  std::vector<Rational> coeffs(sol.primal.begin() + 1, sol.primal.end());
  res.poly = UnivariatePoly::chebyshev(std::move(coeffs), n);
  res.dual.assign(n + 1, Rational(0));
  for (int m = 0; m <= n; ++m)
    res.dual[m] = sol.dual[2 * m] - sol.dual[2 * m + 1];

  // Certify the returned artifacts, not just the LP internals.
  Rational max_dev = 0;
  for (int m = 0; m <= n; ++m) {
    Rational dev = abs(Rational(d[m]) - res.poly.eval(Rational(m)));
    if (dev > max_dev) max_dev = dev;
  }
  if (max_dev != res.eps_star)
    throw std::logic_error("best_uniform_approx: deviation != eps_star");
  // Dual orthogonality to every degree-<=r basis polynomial.
  std::vector<Rational> dots(degree + 1, Rational(0));
  for (int m = 0; m <= n; ++m) {
    std::vector<Rational> basis = chebyshev_basis_values(n, degree, Rational(m));
    for (int i = 0; i <= degree; ++i) dots[i] += res.dual[m] * basis[i];
  }
  for (const Rational& dot : dots)
    if (dot != 0)
      throw std::logic_error("best_uniform_approx: dual not orthogonal");
  Rational mass = 0;
  for (int m = 0; m <= n; ++m) mass += abs(res.dual[m]);
  // With eps_star > 0, complementary slackness forces total dual mass 1;
  // eps_star = 0 (degree n) leaves the dual degenerate at 0.
  if (res.eps_star > 0 && mass != 1)
    throw std::logic_error("best_uniform_approx: dual mass != 1");
  Rational pairing = 0;
  for (int m = 0; m <= n; ++m) pairing += res.dual[m] * Rational(d[m]);
  if (pairing != res.eps_star)
    throw std::logic_error("best_uniform_approx: dual value mismatch");
  return res;
}

WeightProfile hard_distribution_from_dual(const UniformApproxResult& res) {
  Rational mass = 0;
  for (const Rational& b : res.dual) mass += abs(b);
  if (mass != 1)
    throw std::invalid_argument(
        "hard_distribution_from_dual: dual certificate not normalized");
  std::vector<Rational> rho(res.dual.size());
  for (size_t m = 0; m < res.dual.size(); ++m) rho[m] = abs(res.dual[m]);
  return WeightProfile(res.n, std::move(rho));
}

L1ApproxResult best_l1_approx(const std::vector<int>& d,
                              const WeightProfile& profile, int degree,
                              const SolveOptions& opts) {
  const int n = profile.n;
  check_predicate(d, n);
  if (degree < 0 || degree > n)
    throw std::invalid_argument("best_l1_approx: degree outside [0, n]");

  // Variables: e_0..e_n (>= 0, objective rho(m)), then alpha_0..alpha_degree
  // (free). Rows per weight m: e_m + p(m) >= d(m), e_m - p(m) >= -d(m),
  // making e_m an upper bound on |d(m) - p(m)| that the objective drives to
  // equality wherever rho(m) > 0.
  LinearProgram lp;
  const int nv = (n + 1) + (degree + 1);
  lp.direction = Direction::Minimize;
  lp.objective.assign(nv, Rational(0));
  lp.bounds.assign(nv, VarBound::Free);
  for (int m = 0; m <= n; ++m) {
    lp.objective[m] = profile.rho[m];
    lp.bounds[m] = VarBound::NonNegative;
  }
  for (int m = 0; m <= n; ++m) {
    std::vector<Rational> basis = chebyshev_basis_values(n, degree, Rational(m));
    std::vector<Rational> g(nv), h(nv);
    g[m] = 1;
    h[m] = 1;
    for (int i = 0; i <= degree; ++i) {
      g[n + 1 + i] = basis[i];
      h[n + 1 + i] = -basis[i];
    }
    lp.add_row(std::move(g), RowSense::GreaterEq, Rational(d[m]));
    lp.add_row(std::move(h), RowSense::GreaterEq, Rational(-d[m]));
  }

  LPSolution sol = solve_lp(lp, opts);
  if (sol.status != LPStatus::Optimal)
    throw std::logic_error("best_l1_approx: LP not optimal");

  L1ApproxResult res;
  std::vector<Rational> coeffs(sol.primal.begin() + n + 1, sol.primal.end());
  res.poly = UnivariatePoly::chebyshev(std::move(coeffs), n);
  res.value = sol.objective;

  // The reported optimum must equal the actual weighted error of the
  // returned polynomial.
  std::vector<Rational> values(n + 1);
  for (int m = 0; m <= n; ++m) values[m] = res.poly.eval(Rational(m));
  if (averaged_polynomial_error(values, d, profile) != res.value)
    throw std::logic_error("best_l1_approx: value mismatch");
  return res;
}

Rational averaged_polynomial_error(const std::vector<Rational>& values,
                                   const std::vector<int>& d,
                                   const WeightProfile& profile) {
  const int n = profile.n;
  check_predicate(d, n);
  if (values.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("averaged_polynomial_error: need n+1 values");
  Rational total = 0;
  for (int m = 0; m <= n; ++m)
    total += profile.rho[m] * abs(Rational(d[m]) - values[m]);
  return total;
}

nlohmann::ordered_json uniform_approx_to_json(const UniformApproxResult& res) {
  nlohmann::ordered_json j;
  j["n"] = res.n;
  j["degree"] = res.degree;
  j["eps_star"] = to_fraction_string(res.eps_star);
  j["poly"] = univariate_to_json(res.poly);
  auto& dual = j["dual"] = nlohmann::ordered_json::array();
  for (const Rational& b : res.dual) dual.push_back(to_fraction_string(b));
  return j;
}

UniformApproxResult uniform_approx_from_json(const nlohmann::json& j) {
  UniformApproxResult res;
  res.n = j.at("n").get<int>();
  res.degree = j.at("degree").get<int>();
  res.eps_star = rational_from_string(j.at("eps_star").get<std::string>());
  res.poly = univariate_from_json(j.at("poly"));
  for (const auto& v : j.at("dual"))
    res.dual.push_back(rational_from_string(v.get<std::string>()));
  return res;
}

}  // namespace symdis
