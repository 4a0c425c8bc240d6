#include "symdis/learner.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "symdis/cube.hpp"

namespace symdis {

int Feature::eval(const BitVec& x) const {
  if (layer && x.weight() != *layer) return 0;
  for (int i : vars)
    if (!x.get(i)) return 0;
  return 1;
}

namespace {

// All index sets of {1..n} with size <= t, graded lexicographic.
std::vector<std::vector<int>> index_sets(int n, int t) {
  std::vector<std::vector<int>> out{{}};
  for (int d = 1; d <= t; ++d) {
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) c[i] = i + 1;
    for (;;) {
      out.push_back(c);
      int i = d - 1;
      while (i >= 0 && c[i] == n - (d - 1 - i)) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

FeatureBasis build_basis(FeatureBasis::Kind kind, int n, int t) {
  if (n < 1 || n > 64) throw std::invalid_argument("build_basis: bad n");
  if (t < 0 || t > n)
    throw std::invalid_argument("build_basis: t outside [0, n]");
  FeatureBasis basis;
  basis.kind = kind;
  basis.n = n;
  basis.t = t;
  std::vector<std::vector<int>> sets = index_sets(n, t);
  if (kind == FeatureBasis::Kind::Monomial) {
    for (auto& s : sets) basis.features.push_back(Feature{std::nullopt, s});
  } else {
    for (int r = 0; r <= n; ++r)
      for (const auto& s : sets) basis.features.push_back(Feature{r, s});
  }
  return basis;
}

std::vector<LabeledSample> read_samples(std::istream& in) {
  std::vector<LabeledSample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("sample line missing comma: " + line);
    std::string bits = line.substr(0, comma), label = line.substr(comma + 1);
    if (label != "0" && label != "1")
      throw std::invalid_argument("sample label must be 0 or 1: " + line);
    out.push_back({BitVec::from_string(bits), label == "1" ? 1 : 0});
  }
  return out;
}

void write_samples(std::ostream& out, const std::vector<LabeledSample>& s) {
  for (const auto& rec : s)
    out << rec.x.str() << ',' << rec.y << '\n';
}

Rational Hypothesis::raw_value(const BitVec& x) const {
  Rational acc = 0;
  for (size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    if (basis.features[j].eval(x)) acc += alpha[j];
  }
  return acc;
}

Rational Hypothesis::value(const BitVec& x) const {
  Rational v = raw_value(x);
  if (v < 0) return Rational(0);
  if (v > 1) return Rational(1);
  return v;
}

bool Hypothesis::boolean(const BitVec& x) const {
  if (!theta) throw std::logic_error("Hypothesis::boolean: theta unset");
  return value(x) >= *theta;
}

namespace {

struct Record {
  BitVec x;
  int y;
  long count;
};

// Duplicate (x, y) pairs collapse into weighted records; exact objective
// is unchanged. Ordered map keeps the reduction deterministic.
std::vector<Record> aggregate(const std::vector<LabeledSample>& samples) {
  std::map<std::pair<uint64_t, int>, long> counts;
  for (const auto& s : samples) {
    if (s.y != 0 && s.y != 1)
      throw std::invalid_argument("fit_lae: labels must be bits");
    ++counts[{s.x.raw(), s.y}];
  }
  std::vector<Record> out;
  out.reserve(counts.size());
  int n = samples.front().x.n();
  for (const auto& [key, cnt] : counts)
    out.push_back({BitVec(n, key.first), key.second, cnt});
  return out;
}

struct BlockFit {
  Rational objective;
  long pivots = 0;
};

// Solves the least-absolute-error LP for one block of records against the
// feature columns listed in feat_idx. Writes coefficients into alpha.
BlockFit fit_block(const std::vector<Record>& recs,
                   const FeatureBasis& basis,
                   const std::vector<size_t>& feat_idx,
                   std::vector<Rational>& alpha, const FitOptions& opts) {
  // Feature columns over the block's points; identical columns merge onto
  // their first representative (the LP value is invariant, and the merged
  // coefficient lands on the representative).
  std::map<std::vector<uint8_t>, size_t> column_rep;
  std::vector<size_t> reps;           // representative feature index
  std::vector<std::vector<uint8_t>> cols;  // distinct nonzero columns
  for (size_t f : feat_idx) {
    std::vector<uint8_t> col(recs.size());
    bool any = false;
    for (size_t p = 0; p < recs.size(); ++p) {
      col[p] = static_cast<uint8_t>(basis.features[f].eval(recs[p].x));
      any |= col[p] != 0;
    }
    if (!any) continue;  // feature never fires here; coefficient stays 0
    auto [it, inserted] = column_rep.try_emplace(std::move(col), f);
    if (inserted) {
      reps.push_back(f);
      cols.push_back(it->first);
    }
  }

  const int C = static_cast<int>(reps.size());
  const int P = static_cast<int>(recs.size());
  LinearProgram lp;
  const int nv = C + P;  // alpha_rep block, then one deviation var per record
  lp.direction = Direction::Minimize;
  lp.objective.assign(nv, Rational(0));
  lp.bounds.assign(nv, VarBound::Free);
  for (int p = 0; p < P; ++p) {
    lp.objective[C + p] = Rational(recs[p].count);
    lp.bounds[C + p] = VarBound::NonNegative;
  }
  // u_p >= |sum_j alpha_j col_j[p] - y_p| as two one-sided rows.
  for (int p = 0; p < P; ++p) {
    std::vector<Rational> g(nv), h(nv);
    for (int j = 0; j < C; ++j) {
      if (!cols[j][p]) continue;
      g[j] = 1;
      h[j] = -1;
    }
    g[C + p] = -1;
    h[C + p] = -1;
    lp.add_row(std::move(g), RowSense::LessEq, Rational(recs[p].y));
    lp.add_row(std::move(h), RowSense::LessEq, Rational(-recs[p].y));
  }

  LPSolution sol = solve_lp(lp, SolveOptions{opts.mode});
  if (sol.status != LPStatus::Optimal)
    throw std::logic_error("fit_lae: block LP not optimal");
  for (int j = 0; j < C; ++j) alpha[reps[j]] = sol.primal[j];
  return {sol.objective, sol.pivots};
}

}  // namespace

FitResult fit_lae(const std::vector<LabeledSample>& samples,
                  const FeatureBasis& basis, const FitOptions& opts) {
  if (samples.empty()) throw std::invalid_argument("fit_lae: no samples");
  for (const auto& s : samples)
    if (s.x.n() != basis.n)
      throw std::invalid_argument("fit_lae: sample dimension mismatch");
  long long m = static_cast<long long>(basis.features.size());
  long long size = m * static_cast<long long>(samples.size());
  if (size > opts.size_cap)
    throw std::length_error(
        "fit_lae: features x samples exceeds the size cap; raise "
        "FitOptions::size_cap to opt in");

  std::vector<Record> recs = aggregate(samples);

  FitResult res;
  res.hypothesis.basis = basis;
  res.hypothesis.alpha.assign(basis.features.size(), Rational(0));
  res.training_deviation = 0;

  if (basis.kind == FeatureBasis::Kind::Layered) {
    // Layer-r features vanish off layer r, so the LP decomposes by weight.
    std::vector<std::vector<size_t>> feats_by_layer(basis.n + 1);
    for (size_t f = 0; f < basis.features.size(); ++f)
      feats_by_layer[*basis.features[f].layer].push_back(f);
    std::vector<std::vector<Record>> recs_by_layer(basis.n + 1);
    for (const auto& r : recs) recs_by_layer[r.x.weight()].push_back(r);
    for (int r = 0; r <= basis.n; ++r) {
      if (recs_by_layer[r].empty()) continue;
      BlockFit fit = fit_block(recs_by_layer[r], basis, feats_by_layer[r],
                               res.hypothesis.alpha, opts);
      res.training_deviation += fit.objective;
      res.lp_pivots += fit.pivots;
    }
  } else {
    std::vector<size_t> all(basis.features.size());
    for (size_t f = 0; f < all.size(); ++f) all[f] = f;
    BlockFit fit = fit_block(recs, basis, all, res.hypothesis.alpha, opts);
    res.training_deviation = fit.objective;
    res.lp_pivots = fit.pivots;
  }

  // Clipping can only help against bit labels; check per record and confirm
  // the clipped empirical error is within the LP optimum.
  Rational clipped_total = 0;
  for (const auto& rec : recs) {
    Rational raw_dev = abs(res.hypothesis.raw_value(rec.x) - rec.y);
    Rational clip_dev = abs(res.hypothesis.value(rec.x) - rec.y);
    if (clip_dev > raw_dev)
      throw std::logic_error("fit_lae: clipping increased a deviation");
    clipped_total += Rational(rec.count) * clip_dev;
  }
  if (clipped_total > res.training_deviation)
    throw std::logic_error("fit_lae: clipped error above LP optimum");
  return res;
}

Hypothesis round_threshold(const Hypothesis& h,
                           const std::vector<LabeledSample>& samples) {
  if (samples.empty())
    throw std::invalid_argument("round_threshold: no samples");
  std::vector<Record> recs = aggregate(samples);
  std::vector<Rational> values(recs.size());
  Rational deviation = 0;
  for (size_t p = 0; p < recs.size(); ++p) {
    values[p] = h.value(recs[p].x);
    deviation += Rational(recs[p].count) * abs(values[p] - recs[p].y);
  }

  std::vector<Rational> candidates = values;
  candidates.push_back(Rational(0));
  candidates.push_back(Rational(1));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  Rational best_theta = candidates.front();
  long best_dis = -1;
  for (const Rational& theta : candidates) {
    long dis = 0;
    for (size_t p = 0; p < recs.size(); ++p) {
      int b = values[p] >= theta ? 1 : 0;
      if (b != recs[p].y) dis += recs[p].count;
    }
    if (best_dis < 0 || dis < best_dis) {
      best_dis = dis;
      best_theta = theta;
    }
  }

  // Rounding bound: at theta = 1/2 every disagreement contributes l1
  // deviation >= 1/2, so the optimum is at most twice the l1 error.
  if (Rational(best_dis) > 2 * deviation)
    throw std::logic_error("round_threshold: disagreement exceeds 2x l1");

  Hypothesis out = h;
  out.theta = best_theta;
  return out;
}

int learner_degree(DistKind kind, const Rational& epsilon, int n) {
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("learner_degree: epsilon outside (0,1)");
  constexpr long double kESquared = 7.3890560989306502274L;
  long double factor = kind == DistKind::Symmetric ? 8.0L : 4.0L;
  long double raw = factor * kESquared * log_rational(Rational(3) / epsilon);
  int t = static_cast<int>(std::ceil(raw));
  if (t < 1) t = 1;
  // The basis cannot exceed full degree; small n saturates.
  return std::min(t, n);
}

long long sample_budget(long long m, const Rational& epsilon, long long c) {
  if (m < 1 || c < 1) throw std::invalid_argument("sample_budget: bad m or c");
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("sample_budget: epsilon outside (0,1)");
  Integer num = Integer(static_cast<long>(c)) * Integer(static_cast<long>(m)) *
                epsilon.get_den() * epsilon.get_den();
  Integer den = epsilon.get_num() * epsilon.get_num();
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (!out.fits_slong_p())
    throw std::overflow_error("sample_budget: budget does not fit a long");
  return out.get_si();
}

FitResult agnostic_learn(const std::vector<LabeledSample>& samples,
                         DistKind kind, const Rational& epsilon,
                         const LearnOptions& opts) {
  if (samples.empty()) throw std::invalid_argument("agnostic_learn: no samples");
  int n = samples.front().x.n();
  int t = opts.degree ? *opts.degree : learner_degree(kind, epsilon, n);
  FeatureBasis basis =
      build_basis(kind == DistKind::Symmetric ? FeatureBasis::Kind::Layered
                                              : FeatureBasis::Kind::Monomial,
                  n, t);
  return fit_lae(samples, basis, opts.fit);
}

nlohmann::ordered_json hypothesis_to_json(const Hypothesis& h) {
  nlohmann::ordered_json j;
  j["basis"]["kind"] =
      h.basis.kind == FeatureBasis::Kind::Layered ? "layered" : "monomial";
  j["basis"]["n"] = h.basis.n;
  j["basis"]["t"] = h.basis.t;
  auto& a = j["alpha"] = nlohmann::ordered_json::array();
  for (const Rational& q : h.alpha) a.push_back(to_fraction_string(q));
  if (h.theta)
    j["theta"] = to_fraction_string(*h.theta);
  else
    j["theta"] = nullptr;
  return j;
}

Hypothesis hypothesis_from_json(const nlohmann::json& j) {
  Hypothesis h;
  std::string kind = j.at("basis").at("kind").get<std::string>();
  FeatureBasis::Kind k;
  if (kind == "layered")
    k = FeatureBasis::Kind::Layered;
  else if (kind == "monomial")
    k = FeatureBasis::Kind::Monomial;
  else
    throw std::invalid_argument("hypothesis: unknown basis kind");
  h.basis = build_basis(k, j.at("basis").at("n").get<int>(),
                        j.at("basis").at("t").get<int>());
  for (const auto& v : j.at("alpha"))
    h.alpha.push_back(rational_from_string(v.get<std::string>()));
  if (h.alpha.size() != h.basis.features.size())
    throw std::invalid_argument("hypothesis: alpha size mismatch");
  if (!j.at("theta").is_null())
    h.theta = rational_from_string(j.at("theta").get<std::string>());
  return h;
}

}  // namespace symdis
