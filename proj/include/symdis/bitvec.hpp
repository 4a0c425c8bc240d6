#pragma once
// Points of the Boolean cube {0,1}^n for n <= 64, packed into a word.
// Coordinates are 1-based to match the usual [n] index convention.
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symdis {

class BitVec {
 public:
  BitVec() : n_(0), bits_(0) {}
  BitVec(int n, uint64_t bits = 0) : n_(n), bits_(bits) {
    if (n < 0 || n > 64) throw std::invalid_argument("BitVec: n out of range");
    if (n < 64) bits_ &= (uint64_t{1} << n) - 1;
  }

  /// Builds from a string like "0110"; character i holds coordinate i+1.
  static BitVec from_string(const std::string& s) {
    if (s.size() > 64) throw std::invalid_argument("BitVec: string too long");
    BitVec v(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(static_cast<int>(i) + 1, true);
      else if (s[i] != '0')
        throw std::invalid_argument("BitVec: bad character");
    }
    return v;
  }

  int n() const { return n_; }
  uint64_t raw() const { return bits_; }

  bool get(int i) const {
    check(i);
    return (bits_ >> (i - 1)) & 1;
  }
  void set(int i, bool v) {
    check(i);
    uint64_t m = uint64_t{1} << (i - 1);
    bits_ = v ? (bits_ | m) : (bits_ & ~m);
  }

  /// Hamming weight.
  int weight() const { return __builtin_popcountll(bits_); }

  std::string str() const {
    std::string s(n_, '0');
    for (int i = 1; i <= n_; ++i)
      if (get(i)) s[i - 1] = '1';
    return s;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const BitVec& a, const BitVec& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
  }

 private:
  void check(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("BitVec: index");
  }
  int n_;
  uint64_t bits_;
};

}  // namespace symdis
