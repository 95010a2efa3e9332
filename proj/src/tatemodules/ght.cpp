#include <algorithm>

#include <spdlog/spdlog.h>

#include "degen/errors.hpp"
#include "degen/tatemodules.hpp"

namespace degen {

std::string to_string(GhtCase c) {
  switch (c) {
    case GhtCase::TwoRelations: return "two_relations";
    case GhtCase::OneRelationIsogeny: return "one_relation_isogeny";
    case GhtCase::OneRelationExotic: return "one_relation_exotic";
    case GhtCase::NoRelations: return "no_relations";
  }
  return "unknown";
}

std::string to_string(GhtStatus s) { return s == GhtStatus::Proved ? "proved" : "conjectural"; }

namespace {

// Rows spanning the annihilator of the lattice: pi(x) = 0 iff x lies in L tensor Q.
IntMatrix quotient_projection(const RelationLattice& lat) {
  if (lat.basis.rows() == 0) return IntMatrix::identity(lat.n);
  return kernel_basis(lat.basis).transpose();
}

bool degenerate(const BasisWord& w) {
  return std::any_of(w.letters.begin(), w.letters.end(), [](Letter l) { return l == Letter::One || l == Letter::Point; });
}

}  // namespace

GhtReport enriched_monodromy(const RelationLattice& lat) {
  if (lat.n != 3) throw InputInvalid("enriched monodromy is implemented for three curves");
  if (lat.basis.rows() != lat.rank_r) throw InputInvalid("lattice rank disagrees with its basis");
  if (lat.rank_r > 2) throw InputInvalid("a relation lattice of rank 3 forces a q of valuation zero");

  const MonodromyModule m = kunneth(3, 3, 2);
  const auto minus1 = m.words_of_weight(-1);  // T^1_1
  const auto plus1 = m.words_of_weight(1);    // T^{-1}_2
  std::vector<std::size_t> col_minus1(m.dim(), minus1.size()), col_plus1(m.dim(), plus1.size());
  for (std::size_t c = 0; c < minus1.size(); ++c) col_minus1[minus1[c]] = c;
  for (std::size_t c = 0; c < plus1.size(); ++c) col_plus1[plus1[c]] = c;

  // N_1: column c is the K^* tensor Q class carried into M_{-3} by word c.
  IntMatrix a(3, minus1.size());
  IntMatrix n_mat(minus1.size(), plus1.size());
  for (const auto& arrow : m.arrows) {
    const int tw = m.basis[arrow.target].weight();
    if (tw == -3 && col_minus1[arrow.source] < minus1.size())
      for (std::size_t i = 0; i < 3; ++i) {
        if (arrow.label.exps[i].get_den() != 1) throw InputInvalid("non-integral arrow label");
        a(i, col_minus1[arrow.source]) += arrow.label.exps[i].get_num();
      }
    if (tw == -1 && col_plus1[arrow.source] < plus1.size()) n_mat(col_minus1[arrow.target], col_plus1[arrow.source]) += 1;
  }

  const IntMatrix pi = quotient_projection(lat);
  const IntMatrix pa = pi * a;
  GhtReport rep;
  rep.r = lat.rank_r;
  rep.ker_N1_dim = minus1.size() - rank_of(pa);
  rep.ker_N1prime_dim = plus1.size() - rank_of(pa * n_mat);
  for (std::size_t c = 0; c < minus1.size(); ++c) {
    bool zero = true;
    for (std::size_t i = 0; i < 3; ++i) zero = zero && a(i, c) == 0;
    if (zero && degenerate(m.basis[minus1[c]])) ++rep.degenerate_in_kernel;
  }
  rep.predicted_dim_J2a = 6 + lat.rank_r;
  rep.coeff_bound = lat.coeff_bound;
  rep.precision = lat.precision_used;

  if (lat.rank_r == 2) {
    rep.ght_case = GhtCase::TwoRelations;
  } else if (lat.rank_r == 0) {
    rep.ght_case = GhtCase::NoRelations;
  } else {
    std::size_t support = 0;
    for (std::size_t i = 0; i < 3; ++i) support += lat.basis(0, i) != 0;
    rep.ght_case = support == 2 ? GhtCase::OneRelationIsogeny : GhtCase::OneRelationExotic;
  }
  rep.status = rep.ght_case == GhtCase::OneRelationExotic ? GhtStatus::Conjectural : GhtStatus::Proved;
  spdlog::debug("enriched monodromy: r = {}, ker N_1 = {}, case {}", rep.r, rep.ker_N1_dim, to_string(rep.ght_case));
  return rep;
}

}  // namespace degen
