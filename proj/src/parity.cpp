#include "symdis/parity.hpp"

#include <algorithm>
#include <stdexcept>

#include "symdis/cube.hpp"
#include "symdis/rng.hpp"

namespace symdis {

ParitySpec::ParitySpec(int n_, std::vector<int> s_, Rational eta_)
    : n(n_), s(std::move(s_)), eta(std::move(eta_)) {
  if (n < 1 || n > 64) throw std::invalid_argument("ParitySpec: bad n");
  if (s.empty()) throw std::invalid_argument("ParitySpec: S must be nonempty");
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n)
      throw std::invalid_argument("ParitySpec: index out of range");
    if (i > 0 && s[i] == s[i - 1])
      throw std::invalid_argument("ParitySpec: duplicate index");
  }
  // eta = 0 is the noiseless generator; 1/2 would erase all signal.
  if (eta < 0 || eta >= Rational(1, 2))
    throw std::invalid_argument("ParitySpec: eta outside [0, 1/2)");
}

Rational or_parity_correlation(int s) {
  if (s < 1) throw std::invalid_argument("or_parity_correlation: s >= 1");
  if (s > 30) throw std::invalid_argument("or_parity_correlation: s too large");
  // Only the S-coordinates matter; enumerate their 2^s assignments.
  long long total = 1LL << s;
  long acc = 0;  // sum of (2*OR-1) * (-1)^weight, an integer
  for (long long bits = 0; bits < total; ++bits) {
    int w = __builtin_popcountll(bits);
    int or_pm = bits != 0 ? 1 : -1;
    int sign = (w % 2 == 0) ? 1 : -1;
    acc += or_pm * sign;
  }
  Rational mean = Rational(acc) / Rational(static_cast<long>(total));
  return abs(mean);
}

std::vector<LabeledSample> noisy_parity_samples(const ParitySpec& spec,
                                                size_t count, uint64_t seed) {
  Rng rng(seed);
  std::vector<LabeledSample> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    BitVec x(spec.n);
    for (int j = 1; j <= spec.n; ++j)
      if (rng.next() & 1) x.set(j, true);
    int parity = 0;
    for (int j : spec.s) parity ^= x.get(j) ? 1 : 0;
    int y = parity;
    if (spec.eta > 0 && rng.bernoulli(spec.eta)) y ^= 1;
    out.push_back({x, y});
  }
  return out;
}

Rational correlation_certificate(const std::vector<LabeledSample>& samples,
                                 const std::vector<int>& s) {
  if (samples.empty())
    throw std::invalid_argument("correlation_certificate: empty sample");
  if (s.empty())
    throw std::invalid_argument("correlation_certificate: S must be nonempty");
  long acc = 0;
  for (const auto& rec : samples) {
    int or_val = 0, parity = 0;
    for (int i : s) {
      int b = rec.x.get(i) ? 1 : 0;
      or_val |= b;
      parity ^= b;
    }
    acc += (2 * or_val - 1) * (parity ? -1 : 1);
  }
  return Rational(acc) / Rational(static_cast<long>(samples.size()));
}

}  // namespace symdis
