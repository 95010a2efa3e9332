#include <optional>
#include <utility>

#include "degen/errors.hpp"
#include "degen/zlattice.hpp"

namespace degen {

namespace {

// Tracks D = U A V together with U^-1 and V^-1 under elementary operations.
struct SnfState {
  IntMatrix D, U, V, U_inv, V_inv;

  explicit SnfState(const IntMatrix& a)
      : D(a),
        U(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        U_inv(IntMatrix::identity(a.rows())),
        V_inv(IntMatrix::identity(a.cols())) {}

  void row_add(std::size_t dst, std::size_t src, const BigInt& f) {
    if (f == 0) return;
    D.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
    U_inv.add_col_multiple(src, dst, BigInt(-f));
  }
  void row_swap(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void row_negate(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
    U_inv.negate_col(r);
  }
  void col_add(std::size_t dst, std::size_t src, const BigInt& f) {
    if (f == 0) return;
    D.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    V_inv.add_row_multiple(src, dst, BigInt(-f));
  }
  void col_swap(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }

  std::optional<std::pair<std::size_t, std::size_t>> pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < D.rows(); ++i)
      for (std::size_t j = t; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        BigInt a = abs_value(D(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    return best;
  }

  bool move_pivot(std::size_t t) {
    auto p = pivot(t);
    if (!p) return false;
    row_swap(t, p->first);
    col_swap(t, p->second);
    return true;
  }
};

}  // namespace

std::vector<BigInt> SnfDecomposition::diagonal() const {
  std::size_t n = std::min(D.rows(), D.cols());
  std::vector<BigInt> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = D(i, i);
  return d;
}

SnfDecomposition snf(const IntMatrix& a) {
  SnfState s(a);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    if (!s.move_pivot(t)) break;
    for (;;) {
      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.D(i, t) == 0) continue;
        s.row_add(i, t, BigInt(-floor_div(s.D(i, t), s.D(t, t))));
        if (s.D(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.D(t, j) == 0) continue;
        s.col_add(j, t, BigInt(-floor_div(s.D(t, j), s.D(t, t))));
        if (s.D(t, j) != 0) cleared = false;
      }
      if (!cleared) {
        s.move_pivot(t);
        continue;
      }
      // Row and column are clear; the pivot must also divide the rest.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.D(i, j) % s.D(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      s.row_add(t, *bad_row, BigInt(1));
    }
    if (s.D(t, t) < 0) s.row_negate(t);
  }
  return {std::move(s.U), std::move(s.D), std::move(s.V), std::move(s.U_inv), std::move(s.V_inv), t};
}

IntMatrix hnf_rows(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (!best || abs_value(h(i, c)) < abs_value(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, BigInt(-floor_div(h(i, c), h(r, c))));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row_multiple(i, r, BigInt(-floor_div(h(i, c), h(r, c))));
    ++r;
  }
  return h.block(0, r, 0, h.cols());
}

namespace {

// Fraction-free elimination; returns rank and (for square input) determinant.
std::pair<std::size_t, BigInt> bareiss(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigInt prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t i = rank; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (!piv) continue;
    if (*piv != rank) {
      m.swap_rows(*piv, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(rank, c) * m(i, j) - m(i, c) * m(rank, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  BigInt det = 0;
  if (rows == cols && rank == rows) det = rows == 0 ? BigInt(1) : BigInt(sign * m(rows - 1, cols - 1));
  return {rank, det};
}

}  // namespace

std::size_t rank_of(const IntMatrix& a) { return bareiss(a).first; }

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  return bareiss(a).second;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfDecomposition s = snf(a);
  return s.V.block(0, a.cols(), s.rank, a.cols());
}

}  // namespace degen
