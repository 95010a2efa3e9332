#include <algorithm>

#include "degen/errors.hpp"
#include "degen/padics.hpp"

namespace degen {

namespace {

// Residue of x in Z_p modulo p^n; x must have nonnegative valuation.
BigInt integral_residue(const PadicNumber& x, long n) {
  BigInt m = power(x.prime(), static_cast<unsigned long>(n));
  if (x.is_zero()) return 0;
  return mod_positive(x.unit() * power(x.prime(), static_cast<unsigned long>(x.valuation())), m);
}

}  // namespace

RelationLattice relation_lattice(const std::vector<PadicNumber>& qs, const BigInt& coeff_bound, long precision) {
  if (qs.empty()) throw InputInvalid("relation_lattice needs at least one parameter");
  if (coeff_bound < 1) throw InputInvalid("coefficient bound must be at least 1");
  const BigInt& p = qs.front().prime();
  const std::size_t n = qs.size();
  long usable = precision;
  for (const auto& q : qs) {
    if (q.prime() != p) throw InputInvalid("Tate parameters over different primes");
    if (q.is_zero() || q.valuation() < 1) throw InputInvalid("Tate parameters need valuation >= 1, got " + q.to_string());
    usable = std::min(usable, q.precision());
  }
  const long threshold = usable - precision_guard(usable);
  if (threshold < 1)
    throw PrecisionExhausted("precision " + std::to_string(usable) + " leaves no digits after the guard; raise N");

  std::vector<BigInt> logs;
  IntMatrix vrow(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    logs.push_back(integral_residue(iwasawa_log(qs[i]), usable));
    vrow(0, i) = qs[i].valuation();
  }

  RelationLattice out;
  out.n = n;
  out.precision_used = usable;
  out.coeff_bound = coeff_bound;

  // Rank over Q_p of [v; log] at the threshold precision.
  const BigInt pt = power(p, static_cast<unsigned long>(threshold));
  std::size_t qp_rank = 1;
  for (std::size_t i = 0; i < n && qp_rank == 1; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mod_positive(vrow(0, i) * logs[j] - vrow(0, j) * logs[i], pt) != 0) {
        qp_rank = 2;
        break;
      }
  out.padic_solution_dim = n - qp_rank;

  IntMatrix kv = kernel_basis(vrow);  // n x k, relations of the valuation row
  const std::size_t k = kv.cols();
  if (k == 0) {
    out.basis = IntMatrix(0, n);
    return out;
  }
  // With (2H+1)^k >= p^T the box holds two vectors with equal log residues,
  // so congruences could not be told apart from relations.
  if (power(BigInt(2 * coeff_bound + 1), k) >= pt)
    throw PrecisionExhausted("coefficient box (2H+1)^" + std::to_string(k) + " reaches p^" + std::to_string(threshold) +
                             "; raise N or lower H");

  // L_T = {c in Z^k : sum c_j s_j = 0 mod p^T}, s_j the log of kernel vector j.
  IntMatrix congruence(1, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < n; ++i) s += kv(i, j) * logs[i];
    congruence(0, j) = mod_positive(s, pt);
  }
  congruence(0, k) = pt;
  IntMatrix lt = kernel_basis(congruence).block(0, k, 0, k);
  IntMatrix candidates = lll_reduce((kv * lt).transpose());

  const BigInt full = power(p, static_cast<unsigned long>(usable));
  std::vector<std::vector<BigInt>> accepted;
  for (std::size_t r = 0; r < candidates.rows(); ++r) {
    auto row = candidates.row(r);
    bool small = std::all_of(row.begin(), row.end(), [&](const BigInt& x) { return abs_value(x) <= coeff_bound; });
    if (!small) continue;
    BigInt vsum = 0, lsum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      vsum += row[i] * vrow(0, i);
      lsum += row[i] * logs[i];
    }
    // A genuine relation has log exactly zero, hence zero to full precision.
    if (vsum == 0 && mod_positive(lsum, full) == 0) accepted.push_back(candidates.row_vector(r));
  }
  out.basis = saturate(IntMatrix::from_rows(accepted, n));
  out.rank_r = out.basis.rows();
  return out;
}

bool serre_tate_isogenous(const PadicNumber& q1, const PadicNumber& q2, const BigInt& coeff_bound, long precision) {
  return relation_lattice({q1, q2}, coeff_bound, precision).rank_r == 1;
}

}  // namespace degen
