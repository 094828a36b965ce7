#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace sidex {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Falling factorial n·(n-1)···(n-k+1).
inline Int falling(const Int& n, unsigned long k) {
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= n - static_cast<long>(i);
  return r;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p", "p/q", or "-p/q". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& s);

// Exact double of a rational via mpq_get_d (correctly rounded).
inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace sidex
