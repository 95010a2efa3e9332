#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degen {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

// Parses an optionally signed decimal integer. Throws InputInvalid on junk.
BigInt parse_bigint(std::string_view text);

inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt power(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Floor division and the matching nonnegative-or-signed remainder helper used
// by the normal form code: q = round-toward-minus-infinity(a / b).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nonnegative residue of a modulo m (m > 0).
inline BigInt mod_positive(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace degen
