#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace treecount {

// Exact scalars. All counts are BigInt; intermediate values with negative
// exponents live in Rat and are converted back with as_integer().
using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt factorial(long k) {
  BigInt f = 1;
  for (long j = 2; j <= k; ++j) f *= j;
  return f;
}

// Generalized binomial coefficient C(r, k) for any integer r (possibly
// negative), via the falling factorial. Zero for k < 0.
inline BigInt binomial(const BigInt& r, long k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (long j = 0; j < k; ++j) num *= r - j;
  BigInt q, rem;
  BigInt kf = factorial(k);
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), kf.get_mpz_t());
  if (rem != 0)
    throw std::logic_error("binomial: falling factorial not divisible by k!");
  return q;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// base^exp as an exact rational; exp may be negative, base must then be
// nonzero.
inline Rat pow_int_rational(const BigInt& base, long exp) {
  if (exp >= 0) return Rat(pow_big(base, static_cast<unsigned long>(exp)));
  if (base == 0)
    throw std::invalid_argument("pow_int_rational: zero base, negative exponent");
  return make_rat(1, pow_big(base, static_cast<unsigned long>(-exp)));
}

// Integer value of a reduced rational; throws if the denominator is not 1.
// Doubles as the integrality tripwire for every rational-path formula.
inline BigInt as_integer(const Rat& q) {
  if (q.get_den() != 1)
    throw std::logic_error("as_integer: " + q.get_str() + " is not integral");
  return q.get_num();
}

}  // namespace treecount
