#include <random>

#include "doctest.h"
#include "degen/errors.hpp"
#include "degen/padics.hpp"
#include "oracles.hpp"

using namespace degen;

namespace {

PadicNumber q_int(long p, long value, long prec = 64) { return PadicNumber::from_integer(BigInt(p), BigInt(value), prec); }

PadicNumber q_rat(long p, const BigRational& x, long prec = 64) {
  return PadicNumber::from_rational(BigInt(p), x.get_num(), x.get_den(), prec);
}

long pval(long p, BigInt x) {
  long v = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Exact rational partial sum of the log series for 1 + z, z in pZ.
BigRational log_series_partial(const BigRational& z, long terms) {
  BigRational sum = 0, zk = 1;
  for (long k = 1; k <= terms; ++k) {
    zk *= z;
    BigRational t = zk / BigRational(k);
    sum += (k % 2) ? t : BigRational(-t);
  }
  return sum;
}

// Integer relations with |l_i| <= bound among rationals, modulo +-1.
std::vector<std::vector<BigInt>> brute_relations(const std::vector<BigRational>& qs, long bound) {
  std::vector<std::vector<BigInt>> out;
  std::vector<long> l(qs.size(), -bound);
  for (;;) {
    BigRational prod = 1;
    bool nonzero = false;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (l[i] != 0) nonzero = true;
      BigRational base = l[i] >= 0 ? qs[i] : BigRational(1) / qs[i];
      for (long t = 0; t < std::abs(l[i]); ++t) prod *= base;
    }
    if (nonzero && (prod == 1 || prod == -1)) out.emplace_back(l.begin(), l.end());
    std::size_t i = 0;
    while (i < l.size() && l[i] == bound) l[i++] = -bound;
    if (i == l.size()) break;
    ++l[i];
  }
  return out;
}

}  // namespace

TEST_CASE("valuation examples") {
  CHECK(valuation(q_int(5, 5)) == 1);
  CHECK(valuation(q_rat(5, BigRational(1, 25))) == -2);
  CHECK(valuation(q_int(2, 6)) == 1);
  CHECK_THROWS_AS(valuation(PadicNumber::zero(BigInt(5), 10)), ZeroValuation);
  CHECK_THROWS_AS(q_int(6, 5), InputInvalid);
}

TEST_CASE("arithmetic agrees with rational arithmetic") {
  std::mt19937 rng(17);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::uniform_int_distribution<long> d(-2000, 2000);
      long a = d(rng), b = d(rng), c = d(rng);
      if (a == 0 || b == 0 || c == 0) continue;
      BigRational x(a, c), y(b, 1);
      x.canonicalize();
      PadicNumber px = q_rat(p, x, 30), py = q_rat(p, y, 30);
      CHECK((px * py).congruent(q_rat(p, x * y, 30)));
      CHECK((px / py).congruent(q_rat(p, x / y, 30)));
      if (x + y != 0) CHECK((px + py).congruent(q_rat(p, x + y, 30)));
      CHECK((px - px).is_zero());
      CHECK(px.pow(3).congruent(px * px * px));
      CHECK(px.pow(-2).congruent(q_rat(p, 1 / (x * x), 30)));
    }
  }
}

TEST_CASE("teichmuller lifts") {
  CHECK(teichmuller(q_int(5, 1)) == q_int(5, 1));
  CHECK(teichmuller(q_int(5, 6)) == q_int(5, 1));
  CHECK(teichmuller(q_int(5, 126)) == q_int(5, 1));
  PadicNumber w = teichmuller(q_int(5, 2, 40));
  CHECK(w.pow(4).congruent(q_int(5, 1, 40)));
  CHECK(w.unit_digits().front() == 2);
  CHECK(w.precision() == 40);
  CHECK(teichmuller(q_int(2, 7)) == q_int(2, 1));
  CHECK_THROWS_AS(teichmuller(q_int(5, 10)), NotAUnit);
  for (long p : {3L, 7L, 11L})
    for (long u = 1; u < p; ++u) {
      PadicNumber t = teichmuller(q_int(p, u, 25));
      CHECK(t.pow(p - 1).congruent(q_int(p, 1, 25)));
      CHECK(t.unit_digits().front() == u);
    }
}

TEST_CASE("iwasawa log examples") {
  CHECK(iwasawa_log(q_int(5, 1)).is_zero());
  CHECK(iwasawa_log(q_int(5, 5)).is_zero());
  CHECK(iwasawa_log(q_int(7, 49)).is_zero());
  CHECK_THROWS_AS(iwasawa_log(PadicNumber::zero(BigInt(5), 10)), ZeroInput);

  // log(1+p) against exact partial sums; 80 terms reach valuation >= 40.
  for (long p : {3L, 5L, 7L}) {
    const long n = 40;
    BigRational series = log_series_partial(BigRational(p), 80);
    PadicNumber oracle_value = q_rat(p, series, n + 10);
    PadicNumber got = iwasawa_log(q_int(p, 1 + p, n));
    CHECK(got.absolute_precision() == n);
    CHECK(got.congruent(oracle_value));
  }
  // p = 2: log(5) = log(1 + 4).
  PadicNumber two = iwasawa_log(q_int(2, 5, 40));
  CHECK(two.congruent(q_rat(2, log_series_partial(BigRational(4), 90), 50)));
  // The +-1 projection makes the sign invisible to the log.
  CHECK(iwasawa_log(q_int(2, -3, 40)).congruent(iwasawa_log(q_int(2, 3, 40))));
}

TEST_CASE("log property: additivity within the guard") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> d(-100000, 100000);
  int cases = 0;
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (int trial = 0; trial < 40; ++trial) {
      long a = d(rng), b = d(rng), c = 1 + std::abs(d(rng));
      if (a == 0 || b == 0) continue;
      const long n = 48;
      PadicNumber x = q_rat(p, BigRational(a, c), n), y = q_int(p, b, n);
      PadicNumber lhs = iwasawa_log(x * y);
      PadicNumber rhs = iwasawa_log(x) + iwasawa_log(y);
      PadicNumber diff = lhs - rhs;
      CHECK((diff.is_zero() || diff.valuation() >= n - precision_guard(n)));
      ++cases;
    }
  }
  CHECK(cases >= 190);
}

TEST_CASE("log of a teichmuller lift vanishes") {
  for (long p : {3L, 5L, 7L, 13L})
    for (long u = 1; u < p; ++u) CHECK(iwasawa_log(teichmuller(q_int(p, u, 32))).is_zero());
}

TEST_CASE("valuation of log(1 + p t) equals that of p t for odd p") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> d(1, 5000);
  for (long p : {3L, 5L, 7L})
    for (int trial = 0; trial < 40; ++trial) {
      long t = d(rng);
      PadicNumber l = iwasawa_log(q_int(p, 1 + p * t, 40));
      REQUIRE_FALSE(l.is_zero());
      CHECK(l.valuation() == 1 + pval(p, BigInt(t)));
    }
}

TEST_CASE("relation lattice examples") {
  const BigInt h(1000000);
  auto r1 = relation_lattice({q_int(5, 5), q_int(5, 25)}, h, 64);
  CHECK(r1.rank_r == 1);
  CHECK(r1.basis == IntMatrix{{2, -1}});
  CHECK(r1.padic_solution_dim == 1);

  auto r2 = relation_lattice({q_int(5, 5), q_int(5, 25), q_int(5, 125)}, h, 64);
  CHECK(r2.rank_r == 2);
  auto brute = brute_relations({BigRational(5), BigRational(25), BigRational(125)}, 5);
  CHECK(r2.basis == saturate(IntMatrix::from_rows(brute, 3)));
  CHECK(saturate(IntMatrix{{2, -1, 0}, {3, 0, -1}}) == r2.basis);

  auto q = q_int(5, 30);  // 5 * (1 + 5)
  auto r3 = relation_lattice({q, q, q}, h, 64);
  CHECK(r3.rank_r == 2);
  CHECK(r3.padic_solution_dim == 2);

  auto r4 = relation_lattice({q_int(5, 5), q_int(5, 30), q_int(5, 130)}, BigInt(10000), 64);
  CHECK(r4.rank_r == 0);
  CHECK(r4.padic_solution_dim == 1);
  CHECK(r4.basis.rows() == 0);

  CHECK_THROWS_AS(relation_lattice({q_int(5, 3)}, h, 64), InputInvalid);
  CHECK_THROWS_AS(relation_lattice({q_int(5, 5), q_int(5, 30), q_int(5, 130)}, h, 16), PrecisionExhausted);
}

TEST_CASE("relation lattice agrees with brute force over rationals") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> e(1, 3), u(1, 4), sgn(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    // q_i = 5^e_i * unit_i with units drawn from {1, 2, 6, 11} and signs.
    const long units[] = {1, 2, 6, 11};
    std::vector<BigRational> qs;
    std::vector<PadicNumber> pq;
    for (int i = 0; i < 3; ++i) {
      BigInt v = power(BigInt(5), e(rng)) * units[u(rng) - 1] * (sgn(rng) ? 1 : -1);
      qs.emplace_back(v);
      pq.push_back(PadicNumber::from_integer(BigInt(5), v, 64));
    }
    auto lat = relation_lattice(pq, BigInt(1000), 64);
    auto brute = brute_relations(qs, 4);
    IntMatrix expected = saturate(IntMatrix::from_rows(brute, 3));
    CHECK(lat.basis == expected);
    CHECK(lat.rank_r <= lat.padic_solution_dim);
    CHECK(lat.padic_solution_dim <= 2);
  }
}

TEST_CASE("relation lattice monotonicity in H and N") {
  std::vector<PadicNumber> qs{q_int(7, 7), q_int(7, 7 * 8), q_int(7, 7 * 64 * 7)};
  std::size_t prev = 0;
  for (long h : {1L, 2L, 5L, 100L, 10000L}) {
    auto lat = relation_lattice(qs, BigInt(h), 64);
    CHECK(lat.rank_r >= prev);
    prev = lat.rank_r;
  }
  CHECK(prev == 1);
  prev = 0;
  for (long n : {32L, 48L, 64L, 96L}) {
    auto lat = relation_lattice(qs, BigInt(100), n);
    CHECK(lat.rank_r >= prev);
    prev = lat.rank_r;
  }
}

TEST_CASE("serre-tate examples") {
  const BigInt h(10000);
  CHECK(serre_tate_isogenous(q_int(5, 5), q_int(5, 125), h, 64));
  CHECK(serre_tate_isogenous(q_int(5, 30), q_int(5, 30), h, 64));
  CHECK_FALSE(serre_tate_isogenous(q_int(5, 5), q_int(5, 30), h, 64));
  // A root of unity factor does not break isogeny: 5 and 5 * w(2).
  PadicNumber tw = q_int(5, 5) * teichmuller(q_int(5, 2));
  CHECK(serre_tate_isogenous(q_int(5, 5), tw, h, 64));
}

TEST_CASE("json round trip and validation") {
  PadicNumber x = q_rat(7, BigRational(50, 49), 20);
  auto j = padic_to_json(x);
  CHECK(j["val"] == -2);
  CHECK(j["unit_digits"].size() == 20);
  CHECK(padic_from_json(j, BigInt(7), 64) == x);
  nlohmann::json r = {{"num", "3"}, {"den", "14"}};
  CHECK(padic_from_json(r, BigInt(7), 20) == q_rat(7, BigRational(3, 14), 20));
  CHECK(padic_from_json(nlohmann::json("125"), BigInt(5), 10) == q_int(5, 125, 10));
  nlohmann::json bad = {{"p", 7}, {"val", 0}, {"unit_digits", {0, 1}}, {"precision", 2}};
  CHECK_THROWS_AS(padic_from_json(bad, BigInt(7), 10), InputInvalid);
  bad["unit_digits"] = {9, 1};
  CHECK_THROWS_AS(padic_from_json(bad, BigInt(7), 10), InputInvalid);
  auto zj = padic_to_json(PadicNumber::zero(BigInt(3), 12));
  CHECK(padic_from_json(zj, BigInt(3), 12).is_zero());
}
