#include "degen/errors.hpp"
#include "degen/tatemodules.hpp"

namespace degen {

JacobianData jacobian(std::size_t n, int j, std::size_t max_curves) {
  if (j < 1 || j > static_cast<int>(n)) throw IndexOutOfRange("j = " + std::to_string(j) + " outside [1, n]");
  const MonodromyModule m = kunneth(2 * j - 1, n, j, max_curves);
  const WeightTable table = filtration_dims(m);

  JacobianData jd;
  jd.n = n;
  jd.j = j;
  jd.betti = m.dim();
  auto plus = m.words_of_weight(1);
  auto minus = m.words_of_weight(-1);
  jd.lambda_rank = plus.size();
  jd.lambda_prime_rank = minus.size();
  jd.dim_J = jd.lambda_prime_rank;
  jd.tate_module_dim = jd.lambda_rank + jd.lambda_prime_rank;
  for (std::size_t k = 0; k < table.weights.size(); ++k)
    if (table.weights[k] <= -3 && table.graded[k] > 0) jd.lost_dims.push_back({table.weights[k], table.graded[k]});
  for (std::size_t i : plus) jd.lambda_words.push_back(m.basis[i]);
  for (std::size_t i : minus) jd.lambda_prime_words.push_back(m.basis[i]);

  std::vector<std::size_t> col_of(m.dim(), minus.size());
  for (std::size_t c = 0; c < minus.size(); ++c) col_of[minus[c]] = c;
  std::vector<std::size_t> row_of(m.dim(), plus.size());
  for (std::size_t r = 0; r < plus.size(); ++r) row_of[plus[r]] = r;

  jd.pairing.assign(plus.size(), std::vector<KStarExponent>(minus.size(), KStarExponent::zero(n)));
  for (const auto& a : m.arrows) {
    if (row_of[a.source] == plus.size() || col_of[a.target] == minus.size()) continue;
    auto& cell = jd.pairing[row_of[a.source]][col_of[a.target]];
    cell = cell + a.label;
  }
  return jd;
}

BigInt hodge_number(std::size_t n, std::size_t a, std::size_t b) {
  BigInt x, y;
  mpz_bin_uiui(x.get_mpz_t(), n, a);
  mpz_bin_uiui(y.get_mpz_t(), n, b);
  return x * y;
}

bool period_pairing_valuation_check(const JacobianData& jd, const std::vector<BigInt>& valuations) {
  if (valuations.size() != jd.n) throw ShapeMismatch("need one valuation per curve");
  const std::size_t rows = jd.pairing.size();
  const std::size_t cols = rows == 0 ? jd.lambda_prime_rank : jd.pairing.front().size();
  if (rows != cols) return false;
  IntMatrix s(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    // Scaling a row by a positive integer keeps the determinant's vanishing.
    BigInt l = 1;
    for (const auto& cell : jd.pairing[r])
      for (const auto& x : cell.exps) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      BigRational sum = 0;
      for (std::size_t i = 0; i < jd.n; ++i) sum += jd.pairing[r][c].exps[i] * BigRational(valuations[i]);
      sum *= l;
      s(r, c) = sum.get_num();
    }
  }
  return determinant(s) != 0;
}

}  // namespace degen
