#include "symdis/cube.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symdis {

Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

namespace {

void check_index_set(int n, const std::vector<int>& s, const char* what) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n)
      throw std::invalid_argument(std::string("Disjunction: ") + what +
                                  " index out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(std::string("Disjunction: ") + what +
                                  " indices not strictly increasing");
  }
}

}  // namespace

Disjunction::Disjunction(int n_, std::vector<int> pos_, std::vector<int> neg_)
    : n(n_), pos(std::move(pos_)), neg(std::move(neg_)) {
  if (n < 1 || n > 64) throw std::invalid_argument("Disjunction: bad n");
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  check_index_set(n, pos, "pos");
  check_index_set(n, neg, "neg");
  std::vector<int> both;
  std::set_intersection(pos.begin(), pos.end(), neg.begin(), neg.end(),
                        std::back_inserter(both));
  if (!both.empty())
    throw std::invalid_argument("Disjunction: pos and neg overlap");
}

Disjunction Disjunction::monotone(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("Disjunction: bad k");
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  return Disjunction(n, std::move(p), {});
}

bool Disjunction::eval(const BitVec& x) const {
  if (x.n() != n) throw std::invalid_argument("Disjunction::eval: wrong n");
  for (int i : pos)
    if (x.get(i)) return true;
  for (int i : neg)
    if (!x.get(i)) return true;
  return false;
}

WeightProfile::WeightProfile(int n_, std::vector<Rational> rho_)
    : n(n_), rho(std::move(rho_)) {
  if (n < 1 || n > 64) throw std::invalid_argument("WeightProfile: bad n");
  if (rho.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("WeightProfile: need n+1 layer weights");
  Rational sum = 0;
  for (const Rational& p : rho) {
    if (p < 0) throw std::invalid_argument("WeightProfile: negative weight");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("WeightProfile: weights must sum to 1");
}

WeightProfile WeightProfile::uniform(int n) {
  std::vector<Rational> rho(n + 1);
  Rational denom = pow_rational(Rational(2), n);
  for (int m = 0; m <= n; ++m) rho[m] = Rational(binomial(n, m)) / denom;
  return WeightProfile(n, std::move(rho));
}

WeightProfile WeightProfile::layer(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("WeightProfile: bad layer");
  std::vector<Rational> rho(n + 1, Rational(0));
  rho[r] = 1;
  return WeightProfile(n, std::move(rho));
}

Rational WeightProfile::density(const BitVec& x) const {
  if (x.n() != n) throw std::invalid_argument("WeightProfile: wrong n");
  int w = x.weight();
  if (rho[w] == 0) return Rational(0);
  return rho[w] / Rational(binomial(n, w));
}

ProductDistribution::ProductDistribution(int n_, std::vector<Rational> mu_)
    : n(n_), mu(std::move(mu_)) {
  if (n < 1 || n > 64) throw std::invalid_argument("ProductDistribution: bad n");
  if (mu.size() != static_cast<size_t>(n))
    throw std::invalid_argument("ProductDistribution: need n marginals");
  for (const Rational& p : mu)
    if (p < 0 || p > 1)
      throw std::invalid_argument("ProductDistribution: marginal outside [0,1]");
}

Rational ProductDistribution::density(const BitVec& x) const {
  if (x.n() != n) throw std::invalid_argument("ProductDistribution: wrong n");
  Rational d = 1;
  for (int i = 1; i <= n; ++i) d *= x.get(i) ? mu[i - 1] : 1 - mu[i - 1];
  return d;
}

Rational ProductDistribution::pr_all_zero() const {
  Rational d = 1;
  for (const Rational& p : mu) d *= 1 - p;
  return d;
}

int dimension(const CubeDistribution& d) {
  return std::visit([](const auto& v) { return v.n; }, d);
}

Rational density(const CubeDistribution& d, const BitVec& x) {
  return std::visit([&](const auto& v) { return v.density(x); }, d);
}

std::vector<std::vector<Rational>> layer_block_pmf(int n, int r, int k1,
                                                   int k2) {
  if (n < 1) throw std::invalid_argument("layer_block_pmf: bad n");
  if (r < 0 || r > n) throw std::invalid_argument("layer_block_pmf: bad r");
  if (k1 < 0 || k2 < 0 || k1 + k2 > n)
    throw std::invalid_argument("layer_block_pmf: bad block sizes");
  Rational total(binomial(n, r));
  std::vector<std::vector<Rational>> pmf(
      k1 + 1, std::vector<Rational>(k2 + 1, Rational(0)));
  Rational sum = 0;
  for (int a = 0; a <= k1; ++a)
    for (int b = 0; b <= k2; ++b) {
      Integer ways =
          binomial(k1, a) * binomial(k2, b) * binomial(n - k1 - k2, r - a - b);
      if (ways == 0) continue;
      pmf[a][b] = Rational(ways) / total;
      sum += pmf[a][b];
    }
  if (sum != 1) throw std::logic_error("layer_block_pmf: pmf does not sum to 1");
  return pmf;
}

std::vector<Rational> product_weight_pmf(const std::vector<Rational>& mu) {
  for (const Rational& p : mu)
    if (p < 0 || p > 1)
      throw std::invalid_argument("product_weight_pmf: marginal outside [0,1]");
  std::vector<Rational> pmf{Rational(1)};
  for (const Rational& p : mu) {
    std::vector<Rational> next(pmf.size() + 1, Rational(0));
    for (size_t w = 0; w < pmf.size(); ++w) {
      if (pmf[w] == 0) continue;
      next[w] += pmf[w] * (1 - p);
      next[w + 1] += pmf[w] * p;
    }
    pmf = std::move(next);
  }
  return pmf;
}

namespace {

// Serial reference for the enumeration kernel: accumulates
// sum over x in [lo, hi) of D(x) * h(x).
Rational expectation_range(const CubeFn& h, const CubeDistribution& d, int n,
                           uint64_t lo, uint64_t hi) {
  Rational acc = 0;
  for (uint64_t bits = lo; bits < hi; ++bits) {
    BitVec x(n, bits);
    Rational w = density(d, x);
    if (w == 0) continue;
    acc += w * h(x);
  }
  return acc;
}

}  // namespace

Rational cube_expectation(const CubeFn& h, const CubeDistribution& d,
                          int enum_cap, ExecMode mode) {
  int n = dimension(d);
  if (n > enum_cap)
    throw std::length_error("cube_expectation: n exceeds enumeration cap");
  uint64_t total = uint64_t{1} << n;
  if (!use_parallel(mode, static_cast<long long>(total))) {
    return expectation_range(h, d, n, 0, total);
  }
  // Fixed chunking, independent of thread count, so partial sums combine in
  // a deterministic order (exact arithmetic is associative anyway; this
  // keeps intermediate values reproducible too).
  const uint64_t chunks = 64;
  std::vector<Rational> partial(chunks, Rational(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (uint64_t c = 0; c < chunks; ++c) {
    uint64_t lo = total / chunks * c + std::min<uint64_t>(c, total % chunks);
    uint64_t hi =
        total / chunks * (c + 1) + std::min<uint64_t>(c + 1, total % chunks);
    partial[c] = expectation_range(h, d, n, lo, hi);
  }
  Rational acc = 0;
  for (const Rational& p : partial) acc += p;
  return acc;
}

Rational exact_l1_error(const CubeFn& f, const CubeFn& g,
                        const CubeDistribution& d, int enum_cap,
                        ExecMode mode) {
  return cube_expectation(
      [&](const BitVec& x) -> Rational { return abs(f(x) - g(x)); }, d,
      enum_cap, mode);
}

Rational exact_l2sq_error(const CubeFn& f, const CubeFn& g,
                          const CubeDistribution& d, int enum_cap,
                          ExecMode mode) {
  return cube_expectation(
      [&](const BitVec& x) -> Rational {
        Rational diff = f(x) - g(x);
        return diff * diff;
      },
      d, enum_cap, mode);
}

namespace {

BitVec sample_one(const WeightProfile& p, Rng& rng, const Integer& denom,
                  const std::vector<Integer>& cdf, std::vector<int>& scratch) {
  Integer u = rng.below_big(denom);
  int m = 0;
  while (cdf[m] <= u) ++m;
  // Uniform weight-m point via partial Fisher-Yates over 1..n.
  int n = p.n;
  scratch.resize(n);
  std::iota(scratch.begin(), scratch.end(), 1);
  BitVec x(n);
  for (int i = 0; i < m; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(n - i)));
    std::swap(scratch[i], scratch[j]);
    x.set(scratch[i], true);
  }
  return x;
}

}  // namespace

std::vector<BitVec> sample(const CubeDistribution& d, Rng& rng, size_t count) {
  std::vector<BitVec> out;
  out.reserve(count);
  if (const auto* p = std::get_if<WeightProfile>(&d)) {
    // Common denominator turns layer choice into one bounded integer draw.
    Integer denom = 1;
    for (const Rational& q : p->rho)
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> cdf(p->rho.size());
    Integer run = 0;
    for (size_t m = 0; m < p->rho.size(); ++m) {
      Rational scaled = p->rho[m] * Rational(denom);
      run += scaled.get_num();  // denominator is 1 by construction
      cdf[m] = run;
    }
    std::vector<int> scratch;
    for (size_t i = 0; i < count; ++i)
      out.push_back(sample_one(*p, rng, denom, cdf, scratch));
    return out;
  }
  const auto& prod = std::get<ProductDistribution>(d);
  for (size_t i = 0; i < count; ++i) {
    BitVec x(prod.n);
    for (int j = 1; j <= prod.n; ++j)
      if (rng.bernoulli(prod.mu[j - 1])) x.set(j, true);
    out.push_back(x);
  }
  return out;
}

std::vector<BitVec> sample(const CubeDistribution& d, uint64_t seed,
                           size_t count) {
  Rng rng(seed);
  return sample(d, rng, count);
}

nlohmann::ordered_json distribution_to_json(const CubeDistribution& d) {
  nlohmann::ordered_json j;
  if (const auto* p = std::get_if<WeightProfile>(&d)) {
    j["kind"] = "symmetric";
    j["n"] = p->n;
    auto& vals = j["values"] = nlohmann::ordered_json::array();
    for (const Rational& q : p->rho) vals.push_back(to_fraction_string(q));
  } else {
    const auto& prod = std::get<ProductDistribution>(d);
    j["kind"] = "product";
    j["n"] = prod.n;
    auto& vals = j["values"] = nlohmann::ordered_json::array();
    for (const Rational& q : prod.mu) vals.push_back(to_fraction_string(q));
  }
  return j;
}

CubeDistribution distribution_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("n") ||
      !j.contains("values"))
    throw std::invalid_argument("distribution: need kind, n, values");
  std::string kind = j.at("kind").get<std::string>();
  int n = j.at("n").get<int>();
  std::vector<Rational> vals;
  for (const auto& v : j.at("values"))
    vals.push_back(rational_from_string(v.get<std::string>()));
  if (kind == "symmetric") return WeightProfile(n, std::move(vals));
  if (kind == "product") return ProductDistribution(n, std::move(vals));
  throw std::invalid_argument("distribution: unknown kind '" + kind + "'");
}

}  // namespace symdis
