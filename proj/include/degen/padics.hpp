#pragma once

// Fixed-precision arithmetic in Q_p, the Iwasawa logarithm (branch with
// log p = 0), Teichmuller lifts, and bounded detection of multiplicative
// relations among Tate parameters.

#include <cstdint>
#include <string>
#include <vector>

#include "degen/bigint.hpp"
#include "degen/zlattice.hpp"
#include "json.hpp"

namespace degen {

// x = p^val * unit with unit a p-adic unit known modulo p^prec. The tracked
// zero carries its absolute precision in `val` (x = O(p^val)).
class PadicNumber {
 public:
  PadicNumber() = default;

  static PadicNumber from_integer(const BigInt& p, const BigInt& value, long precision);
  static PadicNumber from_rational(const BigInt& p, const BigInt& num, const BigInt& den, long precision);
  static PadicNumber zero(const BigInt& p, long absolute_precision);
  // Builds p^val * unit; unit must be prime to p.
  static PadicNumber from_parts(const BigInt& p, long val, const BigInt& unit, long precision);

  const BigInt& prime() const { return p_; }
  bool is_zero() const { return zero_; }
  // Throws ZeroValuation on the tracked zero.
  long valuation() const;
  // Canonical residue of the unit part in [1, p^prec).
  const BigInt& unit() const { return unit_; }
  // Relative precision; 0 for the tracked zero.
  long precision() const { return zero_ ? 0 : prec_; }
  long absolute_precision() const { return zero_ ? val_ : val_ + prec_; }
  // Little-endian base-p digits of the unit, length precision().
  std::vector<long> unit_digits() const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber pow(long e) const;

  // Equality of the represented classes at the smaller absolute precision.
  bool congruent(const PadicNumber& other) const;
  std::string to_string() const;

  // Structural equality (same digits and precision).
  friend bool operator==(const PadicNumber&, const PadicNumber&) = default;

 private:
  BigInt p_ = 2;
  bool zero_ = true;
  long val_ = 0;
  BigInt unit_ = 0;
  long prec_ = 0;
};

bool is_prime(const BigInt& p);

// Throws ZeroValuation for zero input.
long valuation(const PadicNumber& x);

// The (p-1)-st root of unity congruent to u mod p. Throws NotAUnit.
PadicNumber teichmuller(const PadicNumber& u);

// log with log(p) = 0. Writes x = p^v w(u) <u> with <u> = 1 mod p (mod 4 when
// p = 2) and sums the series for log <u>. The result is exact to the absolute
// precision of the unit part of x. Throws ZeroInput.
PadicNumber iwasawa_log(const PadicNumber& x);

// Digits reserved against truncation when deciding that a combination of logs
// vanishes: ceil(N/8) + 4.
long precision_guard(long n);

struct RelationLattice {
  std::size_t n = 0;
  IntMatrix basis;  // rows, HNF of the saturated relation lattice
  std::size_t rank_r = 0;
  std::size_t padic_solution_dim = 0;
  long precision_used = 0;
  BigInt coeff_bound = 1;

  friend bool operator==(const RelationLattice&, const RelationLattice&) = default;
};

// Integer vectors with sum l_i v(q_i) = 0 and sum l_i log q_i = 0 to within
// the guard, found among |l_i| <= coeff_bound. Relations are modulo roots of
// unity (K^* tensor Q). Throws PrecisionExhausted when the coefficient box is
// large enough that congruences at the usable precision are unavoidable.
RelationLattice relation_lattice(const std::vector<PadicNumber>& qs, const BigInt& coeff_bound, long precision);

bool serre_tate_isogenous(const PadicNumber& q1, const PadicNumber& q2, const BigInt& coeff_bound, long precision);

// {"p","val","unit_digits","precision"} or, on input, {"num","den"} given as
// decimal strings (converted at `precision`).
nlohmann::json padic_to_json(const PadicNumber& x);
PadicNumber padic_from_json(const nlohmann::json& j, const BigInt& p, long precision);

}  // namespace degen
