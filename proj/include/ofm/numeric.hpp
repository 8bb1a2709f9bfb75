// Exact integer/rational arithmetic used throughout. Counts are arbitrary
// precision; nothing in this library touches floating point.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ofm {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// 2^e for possibly negative e.
inline BigRational pow2(long e) {
  BigRational r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
  return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Exact quotient; throws if d does not divide n (these divisions are all
// guaranteed exact by the counting identities, so failure means a bug).
inline BigInt exact_div(const BigInt& n, const BigInt& d) {
  if (d == 0 || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
    throw std::logic_error("exact_div: " + n.get_str() + " not divisible by " + d.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Rational -> integer, asserting integrality. Canonicalizes first: the
// two-argument mpq_class constructor stores num/den verbatim, so 21/3 must
// reduce to 7 before the denominator check.
inline BigInt to_integer(const BigRational& q) {
  BigRational r(q);
  r.canonicalize();
  if (r.get_den() != 1)
    throw std::logic_error("expected integral value, got " + r.get_str());
  return r.get_num();
}

}  // namespace ofm
