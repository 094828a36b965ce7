#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace sidex {

// Raised when a configured work or size cap is exceeded. Caps are reported
// errors, never silent truncation.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dynamic bitset sized at construction. Only the operations the counting
// engine needs.
class Bitmask {
 public:
  Bitmask() = default;
  explicit Bitmask(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  static Bitmask all(int bits) {
    Bitmask m(bits);
    for (auto& x : m.w_) x = ~0ull;
    m.trim();
    return m;
  }

  int size() const { return bits_; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  Bitmask& operator&=(const Bitmask& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitmask& operator|=(const Bitmask& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }

  // Calls fn(i) for every set bit, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        int b = __builtin_ctzll(x);
        fn(static_cast<int>(k * 64 + b));
        x &= x - 1;
      }
    }
  }

 private:
  void trim() {
    int rem = bits_ & 63;
    if (rem && !w_.empty()) w_.back() &= (1ull << rem) - 1;
  }
  int bits_ = 0;
  std::vector<uint64_t> w_;
};

// Uniform integer in [0, n). Rejection sampling on the raw engine output so
// results do not depend on the standard library's distribution internals.
inline uint64_t rng_below(std::mt19937_64& rng, uint64_t n) {
  if (n == 0) return 0;
  uint64_t lim = ~0ull - ~0ull % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= lim);
  return x % n;
}

inline int rng_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng_below(rng, static_cast<uint64_t>(hi - lo + 1)));
}

}  // namespace sidex
