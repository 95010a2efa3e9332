#include <algorithm>
#include <sstream>

#include "degen/errors.hpp"
#include "degen/padics.hpp"

namespace degen {

namespace {

long pvaluation(const BigInt& p, BigInt x) {
  long v = 0;
  while (x != 0 && mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

BigInt modulus(const BigInt& p, long k) { return power(p, static_cast<unsigned long>(std::max(0L, k))); }

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw NotAUnit("element is not invertible");
  return r;
}

void check_prime(const BigInt& p) {
  if (!is_prime(p)) throw InputInvalid("p = " + p.get_str() + " is not a prime");
}

}  // namespace

bool is_prime(const BigInt& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

PadicNumber PadicNumber::zero(const BigInt& p, long absolute_precision) {
  PadicNumber z;
  z.p_ = p;
  z.zero_ = true;
  z.val_ = absolute_precision;
  z.unit_ = 0;
  z.prec_ = 0;
  return z;
}

PadicNumber PadicNumber::from_parts(const BigInt& p, long val, const BigInt& unit, long precision) {
  if (precision <= 0) return zero(p, val + std::max(0L, precision));
  PadicNumber x;
  x.p_ = p;
  x.zero_ = false;
  x.val_ = val;
  x.prec_ = precision;
  x.unit_ = mod_positive(unit, modulus(p, precision));
  if (mpz_divisible_p(x.unit_.get_mpz_t(), p.get_mpz_t())) throw NotAUnit("unit part divisible by p");
  return x;
}

PadicNumber PadicNumber::from_integer(const BigInt& p, const BigInt& value, long precision) {
  return from_rational(p, value, BigInt(1), precision);
}

PadicNumber PadicNumber::from_rational(const BigInt& p, const BigInt& num, const BigInt& den, long precision) {
  check_prime(p);
  if (precision < 1) throw InputInvalid("precision must be positive");
  if (den == 0) throw InputInvalid("zero denominator");
  if (num == 0) return zero(p, precision);
  long a = pvaluation(p, num);
  long b = pvaluation(p, den);
  BigInt m = modulus(p, precision);
  BigInt un = num / modulus(p, a);
  BigInt ud = den / modulus(p, b);
  return from_parts(p, a - b, mod_positive(un, m) * inverse_mod(mod_positive(ud, m), m), precision);
}

long PadicNumber::valuation() const {
  if (zero_) throw ZeroValuation("valuation of zero");
  return val_;
}

std::vector<long> PadicNumber::unit_digits() const {
  std::vector<long> digits;
  if (zero_) return digits;
  BigInt u = unit_;
  BigInt d;
  for (long i = 0; i < prec_; ++i) {
    mpz_fdiv_qr(u.get_mpz_t(), d.get_mpz_t(), u.get_mpz_t(), p_.get_mpz_t());
    digits.push_back(d.get_si());
  }
  return digits;
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  return from_parts(p_, val_, BigInt(-unit_), prec_);
}

namespace {

// Normalises s * p^base known modulo p^abs into a PadicNumber.
PadicNumber normalise(const BigInt& p, const BigInt& s, long base, long abs) {
  BigInt r = mod_positive(s, modulus(p, abs - base));
  if (r == 0) return PadicNumber::zero(p, abs);
  long v = pvaluation(p, r);
  return PadicNumber::from_parts(p, base + v, r / modulus(p, v), abs - base - v);
}

void same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) throw ShapeMismatch("p-adic numbers over different primes");
}

}  // namespace

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  const BigInt& p = a.p_;
  long abs = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.zero_ && b.zero_) return PadicNumber::zero(p, abs);
  if (a.zero_ || b.zero_) {
    const PadicNumber& x = a.zero_ ? b : a;
    if (abs <= x.val_) return PadicNumber::zero(p, abs);
    return PadicNumber::from_parts(p, x.val_, x.unit_, abs - x.val_);
  }
  long m = std::min(a.val_, b.val_);
  if (abs <= m) return PadicNumber::zero(p, abs);
  BigInt s = a.unit_ * modulus(p, a.val_ - m) + b.unit_ * modulus(p, b.val_ - m);
  return normalise(p, s, m, abs);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  const BigInt& p = a.p_;
  if (a.zero_ || b.zero_) {
    long abs = 0;
    if (a.zero_ && b.zero_)
      abs = a.val_ + b.val_;
    else
      abs = a.zero_ ? a.val_ + b.val_ : b.val_ + a.val_;
    return PadicNumber::zero(p, abs);
  }
  long prec = std::min(a.prec_, b.prec_);
  return PadicNumber::from_parts(p, a.val_ + b.val_, a.unit_ * b.unit_, prec);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  if (b.zero_) throw ZeroInput("division by zero");
  const BigInt& p = a.p_;
  if (a.zero_) return PadicNumber::zero(p, a.val_ - b.val_);
  long prec = std::min(a.prec_, b.prec_);
  BigInt m = modulus(p, prec);
  return PadicNumber::from_parts(p, a.val_ - b.val_, a.unit_ * inverse_mod(mod_positive(b.unit_, m), m), prec);
}

PadicNumber PadicNumber::pow(long e) const {
  if (zero_) {
    if (e <= 0) throw ZeroInput("non-positive power of zero");
    return zero(p_, val_ * e);
  }
  BigInt m = modulus(p_, prec_);
  BigInt u = unit_;
  if (e < 0) u = inverse_mod(u, m);
  BigInt r;
  BigInt ee = e < 0 ? -e : e;
  mpz_powm(r.get_mpz_t(), u.get_mpz_t(), ee.get_mpz_t(), m.get_mpz_t());
  return from_parts(p_, val_ * e, r, prec_);
}

bool PadicNumber::congruent(const PadicNumber& other) const { return (*this - other).is_zero(); }

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << p_.get_str() << "^" << val_ << ")";
    return os.str();
  }
  os << p_.get_str() << "^" << val_ << " * " << unit_.get_str() << " + O(" << p_.get_str() << "^"
     << absolute_precision() << ")";
  return os.str();
}

long valuation(const PadicNumber& x) { return x.valuation(); }

}  // namespace degen
