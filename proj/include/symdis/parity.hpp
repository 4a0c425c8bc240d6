#pragma once
// Disjunction-parity correlation and the noisy sparse-parity example
// generator. The correlation is computed by exhaustive enumeration under
// the +/-1 encodings 2*OR-1 and (-1)^(sum of S-coordinates).
#include <vector>

#include "symdis/learner.hpp"
#include "symdis/rational.hpp"

namespace symdis {

struct ParitySpec {
  int n = 0;
  std::vector<int> s;  // 1-based, sorted, nonempty
  Rational eta;        // noise rate in [0, 1/2)

  ParitySpec(int n, std::vector<int> s, Rational eta);
};

/// |E_{x uniform}[(2*OR_S(x)-1) * (-1)^(sum_{i in S} x_i)]| for |S| = s,
/// by enumeration over the 2^s relevant assignments; equals 2^-(s-1).
Rational or_parity_correlation(int s);

/// Uniform x; y = parity of x over S, flipped independently with
/// probability eta. Deterministic given seed.
std::vector<LabeledSample> noisy_parity_samples(const ParitySpec& spec,
                                                size_t count, uint64_t seed);

/// Empirical mean of (2*OR_S(x)-1) * (-1)^(parity of x on S) over the
/// sample points (labels unused). Errors on an empty sample.
Rational correlation_certificate(const std::vector<LabeledSample>& samples,
                                 const std::vector<int>& s);

}  // namespace symdis
