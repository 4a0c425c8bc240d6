#include "symdis/rng.hpp"

#include <stdexcept>

namespace symdis {

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound 0");
  // Rejection on the top of the range keeps the draw exactly uniform.
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    uint64_t r = next();
    if (r < limit) return r % bound;
  }
}

Integer Rng::below_big(const Integer& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::below_big: bound <= 0");
  if (bound.fits_ulong_p()) return Integer(below(bound.get_ui()));
  size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  size_t words = (bits + 63) / 64;
  for (;;) {
    Integer r = 0;
    for (size_t w = 0; w < words; ++w) {
      r <<= 64;
      r += Integer(static_cast<unsigned long>(next()));
    }
    r >>= (words * 64 - bits);
    if (r < bound) return r;
  }
}

bool Rng::bernoulli(const Rational& p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("Rng::bernoulli: p not in [0,1]");
  if (p == 0) return false;
  if (p == 1) return true;
  // Draw U uniform over [0, den) and report U < num. Exact for any rational.
  return below_big(p.get_den()) < p.get_num();
}

}  // namespace symdis
