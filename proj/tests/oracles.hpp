#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the normal form code of the library.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "degen/zlattice.hpp"

namespace oracle {

using degen::BigInt;
using degen::BigRational;
using degen::IntMatrix;

// Laplace expansion; fine for the small sizes used in tests.
inline BigInt minor_det(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return a(rows[0], cols[0]);
  BigInt total = 0;
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    if (a(rows[0], cols[c]) == 0) continue;
    std::vector<std::size_t> sub;
    for (std::size_t t = 0; t < k; ++t)
      if (t != c) sub.push_back(cols[t]);
    BigInt term = a(rows[0], cols[c]) * minor_det(a, rest, sub);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// gcd of all k x k minors.
inline BigInt determinantal_divisor(const IntMatrix& a, std::size_t k) {
  BigInt g = 0;
  for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& r) {
    for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& c) { g = degen::gcd_of(g, minor_det(a, r, c)); });
  });
  return g;
}

// Nonzero invariant factors d_k = D_k / D_{k-1}.
inline std::vector<BigInt> invariant_factors(const IntMatrix& a) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    BigInt dk = determinantal_divisor(a, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

inline std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<BigRational>> m(a.rows(), std::vector<BigRational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[rank][c];
      for (std::size_t t = c; t < a.cols(); ++t) m[r][t] -= f * m[rank][t];
    }
    ++rank;
  }
  return rank;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Random unimodular W together with W^-1, built from elementary operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  IntMatrix w = IntMatrix::identity(n);
  IntMatrix w_inv = IntMatrix::identity(n);
  if (n < 2) return {w, w_inv};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    BigInt f = coef(rng);
    w.add_row_multiple(a, b, f);
    w_inv.add_col_multiple(b, a, BigInt(-f));
  }
  return {w, w_inv};
}

}  // namespace oracle
