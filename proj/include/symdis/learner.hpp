#pragma once
// Agnostic learning of disjunctions by l1 regression: feature bases
// (layer-indicator times monomial, or plain monomial), least-absolute-error
// fitting via the exact LP solver, and threshold rounding to a Boolean
// hypothesis.
#include <iosfwd>
#include <optional>
#include <vector>

#include "json.hpp"
#include "symdis/bitvec.hpp"
#include "symdis/lp.hpp"
#include "symdis/rational.hpp"

namespace symdis {

struct Feature {
  std::optional<int> layer;  // set for layered features: IND(weight = layer)
  std::vector<int> vars;     // 1-based monomial index set, sorted

  int eval(const BitVec& x) const;  // 0 or 1
};

struct FeatureBasis {
  enum class Kind { Layered, Monomial };
  Kind kind = Kind::Monomial;
  int n = 0, t = 0;
  std::vector<Feature> features;  // deterministic order
};

/// Layered: for each layer r ascending, all index sets with |T| <= t in
/// graded lexicographic order; count (n+1) * sum_{d<=t} C(n,d).
/// Monomial: the index sets alone. Errors when t > n or t < 0.
FeatureBasis build_basis(FeatureBasis::Kind kind, int n, int t);

struct LabeledSample {
  BitVec x;
  int y = 0;  // bit
};

/// Text format: one "bitstring,label" record per line, e.g. "0110,1".
std::vector<LabeledSample> read_samples(std::istream& in);
void write_samples(std::ostream& out, const std::vector<LabeledSample>& s);

struct Hypothesis {
  FeatureBasis basis;
  std::vector<Rational> alpha;
  std::optional<Rational> theta;

  Rational raw_value(const BitVec& x) const;  // sum alpha_j phi_j(x)
  Rational value(const BitVec& x) const;      // clipped to [0,1]
  bool boolean(const BitVec& x) const;        // [value(x) >= theta]
};

struct FitOptions {
  // Documented guard: features * samples must not exceed this. Large
  // instances must opt in explicitly.
  long long size_cap = 1'000'000;
  ExecMode mode = ExecMode::Auto;
};

struct FitResult {
  Hypothesis hypothesis;           // theta unset
  Rational training_deviation;     // minimal sum_i |h(x_i) - y_i|, exact
  long lp_pivots = 0;
};

/// Exact least-absolute-error fit of the labels over the basis. The LP is
/// solved per independent block (layers decouple for a layered basis) after
/// aggregating duplicate samples and merging features with identical
/// columns; none of these reductions change the optimal value.
FitResult fit_lae(const std::vector<LabeledSample>& samples,
                  const FeatureBasis& basis, const FitOptions& opts = {});

/// Chooses theta from {h(x_i)} + {0,1} minimizing empirical Boolean
/// disagreement, smallest optimal theta on ties. Also asserts the rounding
/// bound: disagreement <= 2 * empirical l1 deviation of the clipped h.
Hypothesis round_threshold(const Hypothesis& h,
                           const std::vector<LabeledSample>& samples);

enum class DistKind { Symmetric, Product };

/// Degree for the agnostic learner: ceil(8 e^2 ln(3/eps)) for symmetric
/// targets, ceil(4 e^2 ln(3/eps)) for product targets, capped at n (the
/// basis cannot exceed full degree).
int learner_degree(DistKind kind, const Rational& epsilon, int n);

/// Default sample budget ceil(c * m / eps^2) for an m-feature basis.
long long sample_budget(long long m, const Rational& epsilon,
                        long long c = 8);

struct LearnOptions {
  std::optional<int> degree;  // overrides learner_degree
  FitOptions fit;
};

/// Builds the basis for the distribution kind and fits. The caller chooses
/// the sample budget; see sample_budget.
FitResult agnostic_learn(const std::vector<LabeledSample>& samples,
                         DistKind kind, const Rational& epsilon,
                         const LearnOptions& opts = {});

nlohmann::ordered_json hypothesis_to_json(const Hypothesis& h);
Hypothesis hypothesis_from_json(const nlohmann::json& j);

}  // namespace symdis
