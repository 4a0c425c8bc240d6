#pragma once
// Boolean-cube combinatorics: disjunctions (clauses with positive and
// negated variables), symmetric distributions given by a weight profile,
// product distributions, exact enumeration of error functionals, and
// exact sampling.
#include <functional>
#include <variant>
#include <vector>

#include "json.hpp"
#include "symdis/bitvec.hpp"
#include "symdis/parallel.hpp"
#include "symdis/rational.hpp"
#include "symdis/rng.hpp"

namespace symdis {

/// C(n, k) as an exact integer; 0 when k < 0 or k > n.
Integer binomial(long n, long k);

/// A disjunction over {0,1}^n: OR of x_i for i in pos and of (1-x_i) for
/// i in neg. Index sets are 1-based, disjoint, kept sorted. Both empty
/// means the constant-0 predicate (the empty OR).
struct Disjunction {
  int n = 0;
  std::vector<int> pos, neg;

  Disjunction(int n, std::vector<int> pos, std::vector<int> neg);
  static Disjunction monotone(int n, int k);  // x_1 v ... v x_k

  int k1() const { return static_cast<int>(pos.size()); }
  int k2() const { return static_cast<int>(neg.size()); }
  bool eval(const BitVec& x) const;
};

/// A symmetric distribution on {0,1}^n: rho[m] is the probability of the
/// weight-m layer, split uniformly within the layer. rho must sum to 1.
struct WeightProfile {
  int n = 0;
  std::vector<Rational> rho;  // size n+1

  WeightProfile(int n, std::vector<Rational> rho);
  static WeightProfile uniform(int n);
  static WeightProfile layer(int n, int r);  // point mass on the r-th layer

  Rational density(const BitVec& x) const;
};

/// A product distribution with marginals mu_i = Pr[x_i = 1], each in [0,1].
struct ProductDistribution {
  int n = 0;
  std::vector<Rational> mu;  // size n

  ProductDistribution(int n, std::vector<Rational> mu);

  Rational density(const BitVec& x) const;
  Rational pr_all_zero() const;  // prod (1 - mu_i)
};

using CubeDistribution = std::variant<WeightProfile, ProductDistribution>;

int dimension(const CubeDistribution& d);
Rational density(const CubeDistribution& d, const BitVec& x);

/// Joint layer statistics: entry [a][b] is Pr[sum of block-1 coords = a and
/// sum of block-2 coords = b] when x is uniform on the weight-r layer and
/// the blocks are disjoint with sizes k1, k2. Hypergeometric in closed form.
std::vector<std::vector<Rational>> layer_block_pmf(int n, int r, int k1,
                                                   int k2);

/// Weight distribution of a product distribution (Bernoulli convolution):
/// entry [w] = Pr[sum x_i = w], size mu.size()+1.
std::vector<Rational> product_weight_pmf(const std::vector<Rational>& mu);

using CubeFn = std::function<Rational(const BitVec&)>;

inline constexpr int kDefaultEnumCap = 20;

/// E_D[h(x)] by full enumeration of the cube. Throws when n exceeds the cap.
Rational cube_expectation(const CubeFn& h, const CubeDistribution& d,
                          int enum_cap = kDefaultEnumCap,
                          ExecMode mode = ExecMode::Auto);

/// E_D[|f - g|], exact.
Rational exact_l1_error(const CubeFn& f, const CubeFn& g,
                        const CubeDistribution& d,
                        int enum_cap = kDefaultEnumCap,
                        ExecMode mode = ExecMode::Auto);

/// E_D[(f - g)^2], exact.
Rational exact_l2sq_error(const CubeFn& f, const CubeFn& g,
                          const CubeDistribution& d,
                          int enum_cap = kDefaultEnumCap,
                          ExecMode mode = ExecMode::Auto);

/// Exact sampling. Weight profiles draw a layer by CDF inversion over a
/// common denominator, then a uniform weight-m point; product distributions
/// draw coordinates as exact Bernoullis.
std::vector<BitVec> sample(const CubeDistribution& d, Rng& rng, size_t count);
std::vector<BitVec> sample(const CubeDistribution& d, uint64_t seed,
                           size_t count);

/// JSON round trip. Schema:
///   {"kind": "symmetric"|"product", "n": int, "values": ["p/q", ...]}
/// with values of length n+1 (profile rho) or n (marginals mu).
nlohmann::ordered_json distribution_to_json(const CubeDistribution& d);
CubeDistribution distribution_from_json(const nlohmann::json& j);

}  // namespace symdis
