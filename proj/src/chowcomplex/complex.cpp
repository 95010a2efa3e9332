#include <algorithm>

#include "degen/chowcomplex.hpp"
#include "degen/errors.hpp"

namespace degen {

namespace {

using Offsets = std::map<IndexSet, std::size_t>;

Offsets stratum_offsets(const FibreDescription& fibre, std::size_t s, int codim) {
  Offsets off;
  std::size_t running = 0;
  for (const IndexSet& I : fibre.strata_of_size(s)) {
    off[I] = running;
    running += fibre.chow_rank(I, codim);
  }
  return off;
}

ChowTerm make_term(const FibreDescription& fibre, int i, int j) {
  ChowTerm t;
  t.i = i;
  t.j = j;
  for (int k = std::max(0, i); k <= i + j; ++k) {
    Summand s;
    s.k = k;
    s.codim = i + j - k;
    s.stratum_size = static_cast<std::size_t>(2 * k - i + 1);
    s.offset = t.rank;
    for (const IndexSet& I : fibre.strata_of_size(s.stratum_size)) s.rank += fibre.chow_rank(I, s.codim);
    t.rank += s.rank;
    t.summands.push_back(s);
  }
  return t;
}

const Summand* find_summand(const ChowTerm& t, int k) {
  for (const Summand& s : t.summands)
    if (s.k == k) return &s;
  return nullptr;
}

long gysin_sign(GysinSign policy, std::size_t target_size) {
  switch (policy) {
    case GysinSign::Positive:
      return 1;
    case GysinSign::Negative:
      return -1;
    case GysinSign::AlternatingBySize:
      return target_size % 2 == 0 ? 1 : -1;
  }
  return 1;
}

const IntMatrix& lookup(const std::map<MapKey, IntMatrix>& maps, const MapKey& key, const char* what) {
  auto it = maps.find(key);
  if (it == maps.end()) throw InputInvalid(std::string("missing ") + what + " map");
  return it->second;
}

IntMatrix differential_of(const FibreDescription& fibre, const ChowTerm& src, const ChowTerm& tgt,
                          const BuildOptions& options) {
  IntMatrix d(tgt.rank, src.rank);
  const int i = src.i;
  for (const Summand& from : src.summands) {
    if (from.rank == 0) continue;
    const std::size_t s = from.stratum_size;
    const int c = from.codim;
    Offsets src_off = stratum_offsets(fibre, s, c);

    // Restriction into summand k + 1: CH^c(Y^(s)) -> CH^c(Y^(s+1)).
    if (const Summand* to = find_summand(tgt, from.k + 1); to && to->rank > 0) {
      Offsets tgt_off = stratum_offsets(fibre, s + 1, c);
      for (const auto& [J, row0] : tgt_off) {
        if (fibre.chow_rank(J, c) == 0) continue;
        for (std::size_t pos = 0; pos < J.size(); ++pos) {
          IndexSet I = J;
          I.erase(I.begin() + static_cast<long>(pos));
          if (fibre.chow_rank(I, c) == 0) continue;
          const IntMatrix& m = lookup(fibre.restrictions, {I, J, c}, "restriction");
          d.add_block(to->offset + row0, from.offset + src_off.at(I), m, pos % 2 == 0 ? 1 : -1);
        }
      }
    }
    // Gysin into summand k: CH^c(Y^(s)) -> CH^{c+1}(Y^(s-1)), present for k >= i + 1.
    if (from.k >= i + 1 && s >= 2) {
      const Summand* to = find_summand(tgt, from.k);
      if (!to || to->rank == 0) continue;
      Offsets tgt_off = stratum_offsets(fibre, s - 1, c + 1);
      for (const auto& [I, col0] : src_off) {
        if (fibre.chow_rank(I, c) == 0) continue;
        for (std::size_t pos = 0; pos < I.size(); ++pos) {
          IndexSet small = I;
          small.erase(small.begin() + static_cast<long>(pos));
          if (fibre.chow_rank(small, c + 1) == 0) continue;
          const IntMatrix& m = lookup(fibre.gysin, {I, small, c}, "gysin");
          long sign = (pos % 2 == 0 ? 1 : -1) * gysin_sign(options.gysin_sign, small.size());
          d.add_block(to->offset + tgt_off.at(small), from.offset + col0, m, sign);
        }
      }
    }
  }
  return d;
}

}  // namespace

ChowTerm ChowComplexRow::term(int i) const {
  if (i < i_min || i > i_max) {
    ChowTerm t;
    t.i = i;
    t.j = j;
    return t;
  }
  return terms[static_cast<std::size_t>(i - i_min)];
}

IntMatrix ChowComplexRow::differential(int i) const {
  if (i < i_min || i > i_max) return IntMatrix(term(i + 1).rank, term(i).rank);
  return differentials[static_cast<std::size_t>(i - i_min)];
}

ChowComplexRow build_complex(const FibreDescription& fibre, int j, const BuildOptions& options) {
  ChowComplexRow row;
  row.j = j;
  row.i_min = -fibre.d - 1;
  row.i_max = fibre.d + 1;
  for (int i = row.i_min; i <= row.i_max; ++i) row.terms.push_back(make_term(fibre, i, j));
  for (int i = row.i_min; i <= row.i_max; ++i) {
    ChowTerm next = i < row.i_max ? row.terms[static_cast<std::size_t>(i + 1 - row.i_min)] : make_term(fibre, i + 1, j);
    row.differentials.push_back(differential_of(fibre, row.terms[static_cast<std::size_t>(i - row.i_min)], next, options));
  }
  for (int i = row.i_min; i < row.i_max; ++i) {
    IntMatrix dd = row.differential(i + 1) * row.differential(i);
    if (!dd.is_zero())
      throw CompositionNonzero("d^" + std::to_string(i + 1) + " o d^" + std::to_string(i) + " != 0 in row j = " +
                               std::to_string(j));
  }
  return row;
}

IntMatrix chain_monodromy(const FibreDescription& fibre, int i, int j) {
  ChowTerm src = make_term(fibre, i, j);
  ChowTerm tgt = make_term(fibre, i + 2, j - 1);
  IntMatrix n(tgt.rank, src.rank);
  for (const Summand& from : src.summands) {
    if (from.k < i + 1 || from.rank == 0) continue;
    const Summand* to = find_summand(tgt, from.k + 1);
    if (!to) continue;
    n.set_block(to->offset, from.offset, IntMatrix::identity(from.rank));
  }
  return n;
}

}  // namespace degen
