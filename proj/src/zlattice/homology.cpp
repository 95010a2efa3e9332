#include "degen/errors.hpp"
#include "degen/zlattice.hpp"

namespace degen {

std::vector<BigInt> HomologyData::coordinates(std::span<const BigInt> cycle) const {
  std::vector<BigInt> x = projection.apply(cycle);
  for (std::size_t g = 0; g < orders.size(); ++g)
    if (orders[g] != 0) x[g] = mod_positive(x[g], orders[g]);
  return x;
}

HomologyData homology_with_lift(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw ShapeMismatch("homology: d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                        std::to_string(d_out.cols()) + " columns");
  if (!(d_out * d_in).is_zero()) throw CompositionNonzero("homology: d_out * d_in is not zero");

  const std::size_t c = d_out.cols();
  SnfDecomposition out = snf(d_out);
  // Columns rank.. of V are a saturated basis of the cycles; the matching rows
  // of V^-1 read off cycle coordinates in that basis.
  IntMatrix cycles = out.V.block(0, c, out.rank, c);
  IntMatrix to_cycle_coords = out.V_inv.block(out.rank, c, 0, c);
  IntMatrix boundaries = to_cycle_coords * d_in;

  SnfDecomposition bnd = snf(boundaries);
  const std::size_t k = cycles.cols();
  std::vector<BigInt> diag = bnd.diagonal();

  HomologyData h;
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < bnd.rank; ++i) {
    if (diag[i] == 1) continue;
    selected.push_back(i);
    h.orders.push_back(diag[i]);
    h.group.torsion.push_back(diag[i]);
  }
  for (std::size_t i = bnd.rank; i < k; ++i) {
    selected.push_back(i);
    h.orders.emplace_back(0);
  }
  h.group.free_rank = k - bnd.rank;
  h.projection = bnd.U.select_rows(selected) * to_cycle_coords;
  h.lift = cycles * bnd.U_inv.select_cols(selected);
  return h;
}

FgAbGroup homology(const IntMatrix& d_in, const IntMatrix& d_out) { return homology_with_lift(d_in, d_out).group; }

IntMatrix induced_map(const HomologyData& source, const HomologyData& target, const IntMatrix& f) {
  if (f.cols() != source.lift.rows() || f.rows() != target.projection.cols())
    throw ShapeMismatch("induced_map: chain map shape does not match the complexes");
  IntMatrix m(target.generator_count(), source.generator_count());
  IntMatrix images = f * source.lift;
  for (std::size_t g = 0; g < source.generator_count(); ++g) {
    std::vector<BigInt> col = images.col_vector(g);
    std::vector<BigInt> coords = target.coordinates(col);
    for (std::size_t t = 0; t < coords.size(); ++t) m(t, g) = coords[t];
  }
  return m;
}

IntMatrix free_part(const HomologyData& source, const HomologyData& target, const IntMatrix& induced) {
  return induced.block(target.torsion_count(), target.generator_count(), source.torsion_count(),
                       source.generator_count());
}

IsogenyReport isogeny_check(const IntMatrix& f, const FgAbGroup& source, const FgAbGroup& target) {
  if (f.cols() != source.free_rank || f.rows() != target.free_rank)
    throw ShapeMismatch("isogeny_check: map is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                        " but free ranks are " + std::to_string(target.free_rank) + " <- " +
                        std::to_string(source.free_rank));
  SnfDecomposition s = snf(f);
  IsogenyReport rep;
  rep.kernel_rank = f.cols() - s.rank;
  rep.is_isogeny = rep.kernel_rank == 0 && s.rank == f.rows();
  if (rep.is_isogeny) rep.exponent = s.rank == 0 ? BigInt(1) : s.D(s.rank - 1, s.rank - 1);
  return rep;
}

IntMatrix dual_isogeny(const IntMatrix& f, const BigInt& exponent) {
  if (f.rows() != f.cols()) throw ShapeMismatch("dual_isogeny: map must be square");
  SnfDecomposition s = snf(f);
  if (s.rank != f.rows()) throw ShapeMismatch("dual_isogeny: map is not injective");
  // f = U^-1 D V^-1, so e f^-1 = V (e D^-1) U.
  IntMatrix scaled(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    if (exponent % s.D(i, i) != 0) throw ShapeMismatch("dual_isogeny: exponent is not a multiple of the invariants");
    scaled(i, i) = exponent / s.D(i, i);
  }
  return s.V * scaled * s.U;
}

IntMatrix saturate(const IntMatrix& rows) {
  if (rows.rows() == 0) return IntMatrix(0, rows.cols());
  SnfDecomposition s = snf(rows);
  return hnf_rows(s.V_inv.block(0, s.rank, 0, rows.cols()));
}

}  // namespace degen
