#include "degen/errors.hpp"
#include "degen/zlattice.hpp"

namespace degen {

namespace {

struct GramSchmidt {
  std::vector<std::vector<BigRational>> mu;
  std::vector<BigRational> norms;  // |b*_i|^2
};

BigRational dot(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

GramSchmidt orthogonalise(const std::vector<std::vector<BigInt>>& b) {
  const std::size_t k = b.size();
  GramSchmidt gs{std::vector<std::vector<BigRational>>(k, std::vector<BigRational>(k, 0)),
                 std::vector<BigRational>(k, 0)};
  std::vector<std::vector<BigRational>> star(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<BigRational> v(b[i].begin(), b[i].end());
    std::vector<BigRational> bi = v;
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = dot(bi, star[j]) / gs.norms[j];
      for (std::size_t t = 0; t < v.size(); ++t) v[t] -= gs.mu[i][j] * star[j][t];
    }
    gs.norms[i] = dot(v, v);
    if (gs.norms[i] == 0) throw ShapeMismatch("lll_reduce: rows are linearly dependent");
    star[i] = std::move(v);
  }
  return gs;
}

BigInt round_nearest(const BigRational& x) {
  BigRational shifted = x + BigRational(1, 2);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q;
}

void size_reduce(std::vector<std::vector<BigInt>>& b, GramSchmidt& gs, std::size_t k, std::size_t j) {
  BigInt q = round_nearest(gs.mu[k][j]);
  if (q == 0) return;
  for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
  for (std::size_t t = 0; t < j; ++t) gs.mu[k][t] -= q * gs.mu[j][t];
  gs.mu[k][j] -= q;
}

}  // namespace

IntMatrix lll_reduce(const IntMatrix& rows) {
  std::vector<std::vector<BigInt>> b;
  for (std::size_t r = 0; r < rows.rows(); ++r) b.push_back(rows.row_vector(r));
  if (b.size() <= 1) return rows;
  GramSchmidt gs = orthogonalise(b);
  const BigRational delta(3, 4);
  std::size_t k = 1;
  while (k < b.size()) {
    size_reduce(b, gs, k, k - 1);
    if (gs.norms[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norms[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gs = orthogonalise(b);
      k = k > 1 ? k - 1 : 1;
    } else {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(b, gs, k, j);
      ++k;
    }
  }
  return IntMatrix::from_rows(b, rows.cols());
}

}  // namespace degen
