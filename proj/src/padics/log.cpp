#include "degen/errors.hpp"
#include "degen/padics.hpp"

namespace degen {

namespace {

BigInt pk(const BigInt& p, long k) { return power(p, static_cast<unsigned long>(k)); }

long pvaluation(const BigInt& p, BigInt x) {
  long v = 0;
  while (x != 0 && mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

BigInt teichmuller_residue(const BigInt& p, const BigInt& u, long prec) {
  BigInt m = pk(p, prec);
  BigInt x = mod_positive(u, m);
  for (;;) {
    BigInt y;
    mpz_powm(y.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t(), m.get_mpz_t());
    if (y == x) return x;
    x = y;
  }
}

// log(1 + z) mod p^n for v_p(z) = vz >= 1 (>= 2 when p = 2).
BigInt log_one_plus(const BigInt& p, const BigInt& z, long vz, long n) {
  // Terms with k * vz - log_p(k) >= n vanish mod p^n; find the first such k.
  long stop = 1;
  while (stop * vz < n || pk(p, stop * vz - n) < stop) ++stop;
  long extra = 0;
  for (BigInt t = p; t <= stop; t *= p) ++extra;
  BigInt work = pk(p, n + extra);
  BigInt target = pk(p, n);
  BigInt sum = 0;
  BigInt zk = 1;
  for (long k = 1; k < stop; ++k) {
    zk = mod_positive(zk * z, work);
    BigInt kk = k;
    long a = pvaluation(p, kk);
    BigInt pa = pk(p, a);
    BigInt kprime = kk / pa;
    BigInt num = zk;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pa.get_mpz_t());
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), kprime.get_mpz_t(), target.get_mpz_t());
    BigInt term = mod_positive(num * inv, target);
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return mod_positive(sum, target);
}

}  // namespace

PadicNumber teichmuller(const PadicNumber& u) {
  if (u.is_zero() || u.valuation() != 0) throw NotAUnit("teichmuller needs a unit");
  return PadicNumber::from_parts(u.prime(), 0, teichmuller_residue(u.prime(), u.unit(), u.precision()), u.precision());
}

PadicNumber iwasawa_log(const PadicNumber& x) {
  if (x.is_zero()) throw ZeroInput("log of zero");
  const BigInt& p = x.prime();
  const long n = x.precision();
  BigInt m = pk(p, n);
  BigInt one_unit;
  if (p == 2) {
    one_unit = mod_positive(x.unit(), BigInt(4)) == 1 ? x.unit() : mod_positive(BigInt(-x.unit()), m);
  } else {
    BigInt omega = teichmuller_residue(p, x.unit(), n);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), omega.get_mpz_t(), m.get_mpz_t());
    one_unit = mod_positive(x.unit() * inv, m);
  }
  BigInt z = mod_positive(one_unit - 1, m);
  if (z == 0) return PadicNumber::zero(p, n);
  BigInt s = log_one_plus(p, z, pvaluation(p, z), n);
  if (s == 0) return PadicNumber::zero(p, n);
  long v = pvaluation(p, s);
  return PadicNumber::from_parts(p, v, s / pk(p, v), n - v);
}

long precision_guard(long n) { return (n + 7) / 8 + 4; }

}  // namespace degen
