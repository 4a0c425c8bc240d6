// Command-line harness: every pipeline as a subcommand, emitting
// machine-readable reports (JSON by default, CSV tables on request).
// Reports embed the resolved configuration and render every rational both
// exactly (p/q) and as a 12-digit decimal. Output is deterministic given
// flags and seed. Exit codes: 0 success, 1 invalid input, 2 failed
// property check.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symdis/approx_lp.hpp"
#include "symdis/cube.hpp"
#include "symdis/learner.hpp"
#include "symdis/parity.hpp"
#include "symdis/polyapprox.hpp"

using namespace symdis;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

// ---------------------------------------------------------------------------
// Report plumbing.

ordered_json rational_cell(const Rational& q) {
  ordered_json j;
  j["exact"] = to_fraction_string(q);
  j["decimal"] = to_decimal_string(q);
  return j;
}

ordered_json rational_array(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const Rational& q : v) a.push_back(to_fraction_string(q));
  return a;
}

struct Report {
  ordered_json config;
  ordered_json results;
  std::vector<std::string> columns;  // table columns, may be empty
  std::vector<ordered_json> rows;    // objects keyed by column name
};

std::string csv_scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ';';
      s += csv_scalar(e);
    }
    return s;
  }
  return v.dump();
}

// '#'-prefixed key=value provenance lines, then the table. Rational cells
// ({exact, decimal}) expand into "<col>" (decimal) and "<col>_exact".
void render_csv(const Report& rep, std::ostream& out) {
  out << "# version=" << kVersion << '\n';
  for (const auto& [key, value] : rep.config.items()) {
    if (value.is_object() && value.contains("exact")) {
      out << "# config." << key << '=' << csv_scalar(value["decimal"]) << '\n';
      out << "# config." << key << "_exact="
          << csv_scalar(value["exact"]) << '\n';
    } else {
      out << "# config." << key << '=' << csv_scalar(value) << '\n';
    }
  }
  for (const auto& [key, value] : rep.results.items()) {
    if (value.is_object() && value.contains("exact")) {
      out << "# result." << key << '=' << csv_scalar(value["decimal"]) << '\n';
      out << "# result." << key << "_exact="
          << csv_scalar(value["exact"]) << '\n';
    } else if (value.is_object() || (value.is_array() && !value.empty() &&
                                     !value[0].is_string())) {
      continue;  // structured payloads are JSON-only
    } else {
      out << "# result." << key << '=' << csv_scalar(value) << '\n';
    }
  }
  if (rep.columns.empty()) return;
  bool first = true;
  for (const auto& c : rep.columns) {
    bool rational = !rep.rows.empty() && rep.rows.front().contains(c) &&
                    rep.rows.front()[c].is_object() &&
                    rep.rows.front()[c].contains("exact");
    if (!first) out << ',';
    first = false;
    out << c;
    if (rational) out << ',' << c << "_exact";
  }
  out << '\n';
  for (const auto& row : rep.rows) {
    first = true;
    for (const auto& c : rep.columns) {
      const ordered_json& v = row.at(c);
      if (!first) out << ',';
      first = false;
      if (v.is_object() && v.contains("exact"))
        out << csv_scalar(v["decimal"]) << ',' << csv_scalar(v["exact"]);
      else
        out << csv_scalar(v);
    }
    out << '\n';
  }
}

void render_json(const Report& rep, std::ostream& out) {
  ordered_json j;
  j["version"] = kVersion;
  j["config"] = rep.config;
  j["results"] = rep.results;
  if (!rep.columns.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows) rows.push_back(r);
    j["table"] = std::move(rows);
  }
  out << j.dump(2) << '\n';
}

void emit(const Report& rep, const std::string& format,
          const std::string& out_path) {
  std::ostringstream buf;
  if (format == "csv")
    render_csv(rep, buf);
  else
    render_json(rep, buf);
  if (out_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output: " + out_path);
    f << buf.str();
  }
}

// ---------------------------------------------------------------------------
// Shared parsing helpers.

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size())
      throw std::invalid_argument("bad index list entry: " + tok);
    out.push_back(v);
  }
  return out;
}

Disjunction make_clause(int n, int k, const std::string& pos,
                        const std::string& neg) {
  if (k >= 0) {
    if (!pos.empty() || !neg.empty())
      throw std::invalid_argument("--k excludes --pos/--neg");
    return Disjunction::monotone(n, k);
  }
  return Disjunction(n, parse_index_list(pos), parse_index_list(neg));
}

ordered_json clause_json(const Disjunction& c) {
  ordered_json j;
  j["pos"] = c.pos;
  j["neg"] = c.neg;
  return j;
}

int enum_cap_from_env() {
  const char* env = std::getenv("SYMDIS_ENUM_CAP");
  if (!env) return kDefaultEnumCap;
  std::string s(env);
  size_t pos = 0;
  int cap = 0;
  try {
    cap = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size() || cap < 1 || cap > 24)
    throw std::invalid_argument("SYMDIS_ENUM_CAP must be an integer in 1..24");
  return cap;
}

struct RangeSpec {
  int lo = 0, hi = 0;
  bool is_range = false;
};

RangeSpec parse_range(const std::string& s) {
  RangeSpec r;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      size_t pos = 0;
      r.lo = r.hi = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
    } else {
      size_t p1 = 0, p2 = 0;
      std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &p1);
      r.hi = std::stoi(b, &p2);
      if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument(s);
      r.is_range = true;
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + s + "': want R or A..B");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range: " + s);
  return r;
}

// ---------------------------------------------------------------------------
// approx-layer

int cmd_approx_layer(int n, int r, int k, const std::string& pos,
                     const std::string& neg, const std::string& eps_str,
                     const std::string& format, const std::string& out) {
  Disjunction clause = make_clause(n, k, pos, neg);
  Rational eps = rational_from_string(eps_str);
  int enum_cap = enum_cap_from_env();

  LayerPolynomial p = approximate_disjunction_on_layer(clause, r, eps);
  auto [l1, l2] = layer_poly_error(p, clause);

  Report rep;
  rep.config["subcommand"] = "approx-layer";
  rep.config["n"] = n;
  rep.config["r"] = r;
  rep.config["clause"] = clause_json(clause);
  rep.config["epsilon"] = rational_cell(eps);
  rep.config["enum_cap"] = enum_cap;
  rep.config["format"] = format;

  rep.results["layer_polynomial"] = layer_polynomial_to_json(p);
  rep.results["degree_bound"] = p.degree_bound();
  rep.results["total_degree"] = p.poly.total_degree();
  rep.results["l1_error"] = rational_cell(l1);
  rep.results["l2sq_error"] = rational_cell(l2);
  rep.results["within_epsilon"] = l1 <= eps;

  bool ok = l1 <= eps;
  if (n <= enum_cap) {
    Rational brute = exact_l1_error(
        [&](const BitVec& x) -> Rational { return p.eval_point(x); },
        [&](const BitVec& x) -> Rational {
          return Rational(clause.eval(x) ? 1 : 0);
        },
        CubeDistribution(WeightProfile::layer(n, r)), enum_cap);
    bool match = brute == l1;
    rep.results["oracle_match"] = match;
    ok = ok && match;
  } else {
    rep.results["oracle_match"] = nullptr;  // n above the enumeration cap
  }

  emit(rep, format, out);
  return ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// hard-dist

ordered_json profile_json(const WeightProfile& h) {
  ordered_json j = distribution_to_json(CubeDistribution(h));
  ordered_json dec = ordered_json::array();
  for (const Rational& q : h.rho) dec.push_back(to_decimal_string(q));
  j["values_decimal"] = std::move(dec);
  return j;
}

int cmd_hard_dist(int n, const std::string& r_spec, const std::string& format,
                  const std::string& out) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("hard-dist: n must be in 1..64");
  RangeSpec range = parse_range(r_spec);
  if (range.lo < 0 || range.hi > n)
    throw std::invalid_argument("hard-dist: r outside 0..n");
  std::vector<int> d = full_or_predicate(n);

  Report rep;
  rep.config["subcommand"] = "hard-dist";
  rep.config["n"] = n;
  rep.config["r"] = r_spec;
  rep.config["format"] = format;

  bool all_ok = true;
  if (!range.is_range) {
    int r = range.lo;
    UniformApproxResult res = best_uniform_approx(d, r);
    rep.results["degree"] = r;
    rep.results["eps_star"] = rational_cell(res.eps_star);
    rep.results["beta"] = rational_array(res.dual);
    rep.results["poly"] = univariate_to_json(res.poly);
    if (res.eps_star > 0) {
      WeightProfile h = hard_distribution_from_dual(res);
      L1ApproxResult l1 = best_l1_approx(d, h, r);
      bool duality_ok = l1.value == res.eps_star;
      rep.results["profile"] = profile_json(h);
      rep.results["l1_optimum"] = rational_cell(l1.value);
      rep.results["duality_ok"] = duality_ok;
      all_ok = duality_ok;
    } else {
      // Degree n interpolates the predicate; the dual certificate carries
      // no mass and induces no distribution.
      rep.results["profile"] = nullptr;
      rep.results["duality_ok"] = nullptr;
      rep.results["degenerate"] = true;
    }
  } else {
    rep.columns = {"r", "eps_star", "dual_mass", "duality_ok"};
    Rational prev(2);
    bool monotone_ok = true;
    for (int r = range.lo; r <= range.hi; ++r) {
      UniformApproxResult res = best_uniform_approx(d, r);
      Rational mass = 0;
      for (const Rational& b : res.dual) mass += abs(b);
      ordered_json row;
      row["r"] = r;
      row["eps_star"] = rational_cell(res.eps_star);
      row["dual_mass"] = rational_cell(mass);
      if (res.eps_star > 0) {
        WeightProfile h = hard_distribution_from_dual(res);
        bool ok = best_l1_approx(d, h, r).value == res.eps_star;
        row["duality_ok"] = ok;
        all_ok = all_ok && ok;
      } else {
        row["duality_ok"] = nullptr;
        all_ok = all_ok && r == n;  // eps* hits zero only at full degree
      }
      monotone_ok = monotone_ok && res.eps_star <= prev;
      prev = res.eps_star;
      rep.rows.push_back(std::move(row));
    }
    rep.results["monotone_nonincreasing"] = monotone_ok;
    all_ok = all_ok && monotone_ok;
  }

  emit(rep, format, out);
  return all_ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// learn

CubeDistribution load_distribution(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  // Accept a bare distribution or a hard-dist report embedding one.
  if (j.contains("results") && j["results"].contains("profile") &&
      j["results"]["profile"].is_object())
    return distribution_from_json(j["results"]["profile"]);
  if (j.contains("profile") && j["profile"].is_object())
    return distribution_from_json(j["profile"]);
  return distribution_from_json(j);
}

int cmd_learn(const std::string& in_path, int k, const std::string& pos,
              const std::string& neg, const std::string& eta_str,
              const std::string& eps_str, uint64_t seed, long long samples,
              int degree, const std::string& format, const std::string& out) {
  CubeDistribution dist = load_distribution(in_path);
  const int n = dimension(dist);
  DistKind kind = std::holds_alternative<WeightProfile>(dist)
                      ? DistKind::Symmetric
                      : DistKind::Product;
  Disjunction clause = make_clause(n, k, pos, neg);
  Rational eta = rational_from_string(eta_str);
  Rational eps = rational_from_string(eps_str);
  if (eta < 0 || eta >= Rational(1, 2))
    throw std::invalid_argument("learn: eta outside [0, 1/2)");
  if (samples < 0) throw std::invalid_argument("learn: --samples negative");
  int enum_cap = enum_cap_from_env();

  int t = degree >= 0 ? degree : learner_degree(kind, eps, n);
  // Feature count from binomial sums, before materializing anything:
  // failing the documented size guard early keeps enormous declared
  // budgets from sampling for hours first.
  Integer m_exact = 0;
  for (int d = 0; d <= t; ++d) m_exact += binomial(n, d);
  if (kind == DistKind::Symmetric) m_exact *= n + 1;
  const Integer cap(static_cast<long>(FitOptions{}.size_cap));
  if (m_exact > cap)
    throw std::length_error("learn: basis has " + m_exact.get_str() +
                            " features, above the documented cap " +
                            cap.get_str());
  long long m = static_cast<long long>(m_exact.get_si());
  long long budget = sample_budget(m, eps);
  long long S = samples > 0 ? samples : budget;
  if (m_exact * Integer(static_cast<long>(S)) > cap) {
    throw std::length_error(
        "learn: features x samples = " + m_exact.get_str() + " x " +
        std::to_string(S) + " exceeds the documented cap " + cap.get_str() +
        "; pass a smaller --samples or --degree");
  }

  Rng rng(seed);
  auto draw = [&](long long count) {
    std::vector<BitVec> xs = sample(dist, rng, static_cast<size_t>(count));
    std::vector<LabeledSample> recs;
    recs.reserve(xs.size());
    for (BitVec& x : xs) {
      int y = clause.eval(x) ? 1 : 0;
      if (rng.bernoulli(eta)) y ^= 1;
      recs.push_back({std::move(x), y});
    }
    return recs;
  };
  std::vector<LabeledSample> train = draw(S);

  LearnOptions lopts;
  lopts.degree = t;
  FitResult fit = agnostic_learn(train, kind, eps, lopts);
  Hypothesis rounded = round_threshold(fit.hypothesis, train);

  std::vector<LabeledSample> heldout = draw(S);
  Rational held_l1 = 0, held_dis = 0;
  for (const auto& rec : heldout) {
    held_l1 += abs(rounded.value(rec.x) - rec.y);
    if (rounded.boolean(rec.x) != (rec.y == 1)) held_dis += 1;
  }
  held_l1 /= Rational(static_cast<long>(heldout.size()));
  held_dis /= Rational(static_cast<long>(heldout.size()));

  Report rep;
  rep.config["subcommand"] = "learn";
  rep.config["in"] = in_path;
  rep.config["n"] = n;
  rep.config["kind"] =
      kind == DistKind::Symmetric ? "symmetric" : "product";
  rep.config["clause"] = clause_json(clause);
  rep.config["eta"] = rational_cell(eta);
  rep.config["epsilon"] = rational_cell(eps);
  rep.config["seed"] = seed;
  rep.config["degree"] = t;
  rep.config["samples"] = S;
  rep.config["enum_cap"] = enum_cap;
  rep.config["format"] = format;

  rep.results["feature_count"] = m;
  rep.results["sample_budget"] = budget;
  rep.results["training_deviation_total"] =
      rational_cell(fit.training_deviation);
  rep.results["training_deviation_mean"] = rational_cell(
      fit.training_deviation / Rational(static_cast<long>(train.size())));
  rep.results["lp_pivots"] = fit.lp_pivots;
  rep.results["theta"] = rational_cell(*rounded.theta);
  rep.results["heldout_l1"] = rational_cell(held_l1);
  rep.results["heldout_disagreement"] = rational_cell(held_dis);

  if (n <= enum_cap) {
    // Exact population error of the clipped hypothesis against the noisy
    // label process, and of the rounded Boolean against the same.
    Rational pop_l1 = cube_expectation(
        [&](const BitVec& x) -> Rational {
          Rational c(clause.eval(x) ? 1 : 0);
          Rational h = rounded.value(x);
          return (Rational(1) - eta) * abs(h - c) + eta * abs(h - (1 - c));
        },
        dist, enum_cap);
    Rational pop_dis = cube_expectation(
        [&](const BitVec& x) -> Rational {
          int c = clause.eval(x) ? 1 : 0;
          int hb = rounded.boolean(x) ? 1 : 0;
          return (Rational(1) - eta) * Rational(hb != c ? 1 : 0) +
                 eta * Rational(hb != 1 - c ? 1 : 0);
        },
        dist, enum_cap);
    rep.results["population_l1"] = rational_cell(pop_l1);
    rep.results["population_disagreement"] = rational_cell(pop_dis);
  } else {
    rep.results["population_l1"] = nullptr;
    rep.results["population_disagreement"] = nullptr;
  }
  rep.results["hypothesis"] = hypothesis_to_json(rounded);

  emit(rep, format, out);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteTable {
  std::vector<ordered_json> rows;
  bool ok = true;

  void add(const std::string& check, const std::string& params, long cases,
           bool passed, const Rational* value = nullptr) {
    ordered_json row;
    row["check"] = check;
    row["params"] = params;
    row["cases"] = cases;
    if (value)
      row["value"] = rational_cell(*value);
    else
      row["value"] = nullptr;
    row["ok"] = passed;
    rows.push_back(std::move(row));
    ok = ok && passed;
  }
};

// Piecewise identity of the interpolant at integer points.
void suite_interpolant(SuiteTable& table) {
  for (int t = 0; t <= 20; ++t) {
    bool okt = true;
    long cases = 0;
    UnivariatePoly f = predicate_interpolant(t);
    for (int w = 0; w <= 40; ++w) {
      Rational expect;
      if (w == 0)
        expect = 0;
      else if (w <= t)
        expect = 1;
      else {
        Rational dev(binomial(w - 1, t));
        if (t % 2 == 1)
          expect = Rational(1) + dev;
        else
          expect = Rational(1) - dev;
      }
      okt = okt && f.eval(Rational(w)) == expect;
      ++cases;
    }
    table.add("interpolant_piecewise", "t=" + std::to_string(t), cases, okt);
  }
}

// Walks all weight-r subsets of {1..n}, counting block occupancies, and
// compares against the closed-form hypergeometric tables.
void suite_delta(SuiteTable& table) {
  for (int n = 1; n <= 12; ++n) {
    bool pmf_ok = true, err_ok = true;
    long pmf_cases = 0, err_cases = 0;
    for (int r = 0; r <= n; ++r) {
      for (int k1 = 0; k1 <= n; ++k1) {
        for (int k2 = 0; k1 + k2 <= n; ++k2) {
          std::vector<std::vector<long>> cnt(
              k1 + 1, std::vector<long>(k2 + 1, 0));
          std::vector<int> comb(r);
          for (int i = 0; i < r; ++i) comb[i] = i;
          for (;;) {
            int a = 0, b = 0;
            for (int e : comb) {
              if (e < k1)
                ++a;
              else if (e < k1 + k2)
                ++b;
            }
            ++cnt[a][b];
            int i = r - 1;
            while (i >= 0 && comb[i] == n - (r - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
          }
          Rational total(binomial(n, r));
          auto pmf = layer_block_pmf(n, r, k1, k2);
          for (int a = 0; a <= k1; ++a)
            for (int b = 0; b <= k2; ++b) {
              pmf_ok =
                  pmf_ok && pmf[a][b] == Rational(cnt[a][b]) / total;
              ++pmf_cases;
            }
          if (k2 == 0 && k1 >= 1) {
            // The same counts drive the closed-form layer error.
            for (int t = 0; t <= 6; ++t) {
              Rational l1 = 0, l2 = 0;
              for (int j = t + 1; j <= k1; ++j) {
                Rational dev(binomial(j - 1, t));
                Rational dj = Rational(cnt[j][0]) / total;
                l1 += dj * dev;
                l2 += dj * dev * dev;
              }
              auto closed = layer_error(n, r, k1, t);
              err_ok = err_ok && closed.first == l1 && closed.second == l2;
              ++err_cases;
            }
          }
        }
      }
    }
    table.add("layer_block_pmf", "n=" + std::to_string(n), pmf_cases, pmf_ok);
    table.add("layer_error", "n=" + std::to_string(n), err_cases, err_ok);
  }
}

void suite_correlation(SuiteTable& table) {
  for (int s = 1; s <= 16; ++s) {
    Rational got = or_parity_correlation(s);
    Rational expect = Rational(1) / pow_rational(Rational(2), s - 1);
    table.add("or_parity_correlation", "s=" + std::to_string(s), 1,
              got == expect, &got);
  }
}

void suite_duality(SuiteTable& table) {
  for (int n = 1; n <= 30; ++n) {
    std::vector<int> d = full_or_predicate(n);
    int rmax = std::min(n - 1, 12);
    for (int r = 0; r <= rmax; ++r) {
      UniformApproxResult res = best_uniform_approx(d, r);
      bool ok = res.eps_star > 0;
      Rational mass = 0;
      for (const Rational& b : res.dual) mass += abs(b);
      ok = ok && mass == 1;
      for (int i = 0; i <= r && ok; ++i) {
        Rational moment = 0;
        for (int m = 0; m <= n; ++m)
          moment += res.dual[m] * pow_rational(Rational(m), i);
        ok = ok && moment == 0;
      }
      WeightProfile h = hard_distribution_from_dual(res);
      ok = ok && best_l1_approx(d, h, r).value == res.eps_star;
      table.add("duality",
                "n=" + std::to_string(n) + " r=" + std::to_string(r), 1, ok,
                &res.eps_star);
    }
    if (n <= 12) {
      UniformApproxResult res = best_uniform_approx(d, n);
      table.add("interpolation_degree",
                "n=" + std::to_string(n) + " r=" + std::to_string(n), 1,
                res.eps_star == 0, &res.eps_star);
    }
  }
}

int cmd_verify(const std::string& suite, const std::string& format,
               const std::string& out) {
  SuiteTable table;
  if (suite == "interpolant")
    suite_interpolant(table);
  else if (suite == "delta")
    suite_delta(table);
  else if (suite == "correlation")
    suite_correlation(table);
  else if (suite == "duality")
    suite_duality(table);
  else
    throw std::invalid_argument("unknown suite: " + suite);

  Report rep;
  rep.config["subcommand"] = "verify";
  rep.config["suite"] = suite;
  rep.config["format"] = format;
  rep.results["suite_ok"] = table.ok;
  rep.results["checks"] = static_cast<long long>(table.rows.size());
  rep.columns = {"check", "params", "cases", "value", "ok"};
  rep.rows = std::move(table.rows);

  emit(rep, format, out);
  return table.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit: low-degree approximation of disjunctions over "
               "symmetric and product distributions, LP-certified hardness "
               "profiles, and an agnostic disjunction learner."};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "json", out_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  // approx-layer
  int al_n = 0, al_r = 0, al_k = -1;
  std::string al_pos, al_neg, al_eps;
  CLI::App* al = app.add_subcommand(
      "approx-layer", "low-degree approximation of a clause on one layer");
  al->add_option("--n", al_n, "dimension")->required();
  al->add_option("--r", al_r, "layer weight")->required();
  al->add_option("--k", al_k, "monotone clause width (excludes --pos/--neg)");
  al->add_option("--pos", al_pos, "positive literals, comma separated");
  al->add_option("--neg", al_neg, "negated literals, comma separated");
  al->add_option("--epsilon", al_eps, "error budget in (0,1)")->required();
  add_common(al);

  // hard-dist
  int hd_n = 0;
  std::string hd_r;
  CLI::App* hd = app.add_subcommand(
      "hard-dist", "minimax-optimal polynomial and the hard weight profile");
  hd->add_option("--n", hd_n, "dimension")->required();
  hd->add_option("--r", hd_r, "degree, or sweep A..B")->required();
  add_common(hd);

  // learn
  std::string ln_in, ln_pos, ln_neg, ln_eta = "0", ln_eps;
  int ln_k = -1, ln_degree = -1;
  uint64_t ln_seed = 1;
  long long ln_samples = 0;
  CLI::App* ln = app.add_subcommand(
      "learn", "agnostically learn a disjunction from noisy samples");
  ln->add_option("--in", ln_in, "distribution JSON (or hard-dist report)")
      ->required();
  ln->add_option("--k", ln_k, "monotone clause width (excludes --pos/--neg)");
  ln->add_option("--pos", ln_pos, "positive literals, comma separated");
  ln->add_option("--neg", ln_neg, "negated literals, comma separated");
  ln->add_option("--eta", ln_eta, "label noise rate in [0, 1/2)")
      ->capture_default_str();
  ln->add_option("--epsilon", ln_eps, "excess error target in (0,1)")
      ->required();
  ln->add_option("--seed", ln_seed, "sampling seed")->capture_default_str();
  ln->add_option("--samples", ln_samples,
                 "training sample count (default: the declared budget)");
  ln->add_option("--degree", ln_degree, "basis degree override");
  add_common(ln);

  // verify
  std::string vf_suite;
  CLI::App* vf = app.add_subcommand(
      "verify", "run an exact invariant suite at its declared scale");
  vf->add_option("--suite", vf_suite,
                 "interpolant | delta | correlation | duality")
      ->required();
  add_common(vf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (al->parsed())
      return cmd_approx_layer(al_n, al_r, al_k, al_pos, al_neg, al_eps,
                              format, out_path);
    if (hd->parsed()) return cmd_hard_dist(hd_n, hd_r, format, out_path);
    if (ln->parsed())
      return cmd_learn(ln_in, ln_k, ln_pos, ln_neg, ln_eta, ln_eps, ln_seed,
                       ln_samples, ln_degree, format, out_path);
    if (vf->parsed()) return cmd_verify(vf_suite, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
