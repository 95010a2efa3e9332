#include <algorithm>

#include "degen/kernels.hpp"

namespace degen::kernels {

namespace {

struct Box {
  std::size_t n;
  long bound;
  long side;
  long long total;
};

Box make_box(std::size_t n, long bound) {
  Box b{n, bound, 2 * bound + 1, 1};
  for (std::size_t i = 0; i < n; ++i) b.total *= b.side;
  return b;
}

void decode(const Box& b, long long index, std::vector<long>& l) {
  for (std::size_t i = 0; i < b.n; ++i) {
    l[i] = static_cast<long>(index % b.side) - b.bound;
    index /= b.side;
  }
}

bool canonical_nonzero(const std::vector<long>& l) {
  for (long x : l)
    if (x != 0) return x > 0;
  return false;
}

// Rejects most candidates with machine arithmetic modulo a divisor of the
// modulus that fits in 62 bits, then confirms survivors exactly.
class Checker {
 public:
  Checker(const std::vector<long>& v, const std::vector<BigInt>& s, const BigInt& p, long exponent)
      : v_(v), s_(s), modulus_(power(p, static_cast<unsigned long>(exponent))) {
    BigInt f = 1;
    const BigInt limit = BigInt(1) << 62;
    for (long e = 0; e < exponent && f * p < limit; ++e) f *= p;
    filter_ = f.get_ui();
    for (const BigInt& x : s) residues_.push_back(mod_positive(x, f).get_ui());
  }

  bool operator()(const std::vector<long>& l) const {
    long vsum = 0;
    for (std::size_t i = 0; i < l.size(); ++i) vsum += l[i] * v_[i];
    if (vsum != 0) return false;
    __int128 quick = 0;
    for (std::size_t i = 0; i < l.size(); ++i) quick = (quick + static_cast<__int128>(l[i]) * residues_[i]) % filter_;
    if (quick != 0) return false;
    BigInt acc = 0;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] != 0) acc += l[i] * s_[i];
    return mpz_divisible_p(acc.get_mpz_t(), modulus_.get_mpz_t()) != 0;
  }

 private:
  const std::vector<long>& v_;
  const std::vector<BigInt>& s_;
  BigInt modulus_;
  unsigned long long filter_ = 1;
  std::vector<unsigned long long> residues_;
};

std::vector<std::vector<long>> scan(const Checker& check, const Box& box, long long lo, long long hi) {
  std::vector<std::vector<long>> found;
  std::vector<long> l(box.n);
  for (long long idx = lo; idx < hi; ++idx) {
    decode(box, idx, l);
    if (!canonical_nonzero(l)) continue;
    if (check(l)) found.push_back(l);
  }
  return found;
}

}  // namespace

std::vector<std::vector<long>> box_relation_search_serial(const std::vector<long>& valuations,
                                                          const std::vector<BigInt>& residues, const BigInt& p,
                                                          long exponent, long bound) {
  Box box = make_box(valuations.size(), bound);
  Checker check(valuations, residues, p, exponent);
  auto found = scan(check, box, 0, box.total);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::vector<long>> box_relation_search_parallel(const std::vector<long>& valuations,
                                                            const std::vector<BigInt>& residues, const BigInt& p,
                                                            long exponent, long bound) {
  Box box = make_box(valuations.size(), bound);
  Checker check(valuations, residues, p, exponent);
  std::vector<std::vector<long>> merged;
#pragma omp parallel
  {
    std::vector<std::vector<long>> local;
    std::vector<long> l(box.n);
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < box.total; ++idx) {
      decode(box, idx, l);
      if (canonical_nonzero(l) && check(l)) local.push_back(l);
    }
#pragma omp critical
    merged.insert(merged.end(), local.begin(), local.end());
  }
  std::sort(merged.begin(), merged.end());
  return merged;
}

}  // namespace degen::kernels
