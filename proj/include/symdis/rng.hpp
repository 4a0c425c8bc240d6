#pragma once
// Deterministic random source. One seeded mt19937_64 stream per generator;
// every derived draw (bounded uniform, exact rational Bernoulli) consumes
// bits from that stream only, so a seed fixes the whole sample sequence.
#include <cstdint>
#include <random>

#include "symdis/rational.hpp"

namespace symdis {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  /// Uniform draw from [0, bound) by rejection; bound > 0.
  uint64_t below(uint64_t bound);

  /// Uniform draw from [0, bound) for big integers; bound > 0.
  Integer below_big(const Integer& bound);

  /// Exact Bernoulli with success probability p in [0,1].
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 eng_;
};

}  // namespace symdis
