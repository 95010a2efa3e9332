#pragma once

// Chow complexes C^i_j of a totally degenerate special fibre, their homology
// T^i_j, the monodromy operator N and weight tables.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "degen/weights.hpp"
#include "degen/zlattice.hpp"
#include "json.hpp"

namespace degen {

// Sorted, 1-based component indices.
using IndexSet = std::vector<int>;

struct StratumData {
  IndexSet I;
  // chow[m] for codimension m = 0 .. d - (|I| - 1). Only free ranks enter the
  // complexes; torsion is carried for reporting.
  std::vector<FgAbGroup> chow;
  std::vector<std::vector<std::string>> labels;
};

using MapKey = std::tuple<IndexSet, IndexSet, int>;

struct FibreDescription {
  int n = 0;
  int d = 0;
  std::map<IndexSet, StratumData> strata;
  // (I, J, m): CH^m(Y_I) -> CH^m(Y_J) for I subset J, |J| = |I| + 1.
  std::map<MapKey, IntMatrix> restrictions;
  // (J, I, m): CH^m(Y_J) -> CH^{m+1}(Y_I) for I subset J, |J| = |I| + 1.
  std::map<MapKey, IntMatrix> gysin;

  // Free rank of CH^m(Y_I); zero when the stratum or the group is absent.
  std::size_t chow_rank(const IndexSet& I, int m) const;
  std::vector<IndexSet> strata_of_size(std::size_t s) const;
  void add_stratum(IndexSet I, const std::vector<std::size_t>& ranks);
};

// Global sign on the Gysin part of the differential, on top of the alternating
// sign (-1)^{position of the removed index}. AlternatingBySize multiplies by
// (-1)^{|I|} with I the target stratum; it is kept for comparison only and
// fails d o d = 0 on geometric data.
enum class GysinSign { Positive, Negative, AlternatingBySize };

struct BuildOptions {
  GysinSign gysin_sign = GysinSign::Positive;
};

struct Violation {
  std::string kind;  // closure, index, dimension, connected, shape, missing, d_squared
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const FibreDescription& fibre, const BuildOptions& options = {});

// One summand CH^codim(Y^{(stratum_size)}) of C^i_j, laid out as the strata of
// that size in lexicographic order, each contributing its Chow basis.
struct Summand {
  int k = 0;
  int codim = 0;
  std::size_t stratum_size = 0;
  std::size_t offset = 0;
  std::size_t rank = 0;
};

struct ChowTerm {
  int i = 0;
  int j = 0;
  std::vector<Summand> summands;
  std::size_t rank = 0;
};

struct ChowComplexRow {
  int j = 0;
  int i_min = 0;  // terms stored for i in [i_min, i_max]; zero outside
  int i_max = 0;
  std::vector<ChowTerm> terms;
  std::vector<IntMatrix> differentials;  // differentials[i - i_min]: C^i -> C^{i+1}

  ChowTerm term(int i) const;
  // d^i_j; a zero matrix of the right shape outside the stored range.
  IntMatrix differential(int i) const;
};

// Throws InputInvalid on missing data and CompositionNonzero if d o d != 0.
ChowComplexRow build_complex(const FibreDescription& fibre, int j, const BuildOptions& options = {});

// Chain-level N: C^i_j -> C^{i+2}_{j-1}, identity on the summands in common.
IntMatrix chain_monodromy(const FibreDescription& fibre, int i, int j);

// All rows j = 0..d and all T^i_j, computed once. Immutable afterwards, so
// concurrent queries are safe.
class FibreAnalysis {
 public:
  explicit FibreAnalysis(FibreDescription fibre, const BuildOptions& options = {}, bool parallel = true);

  const FibreDescription& fibre() const { return fibre_; }
  const ChowComplexRow& row(int j) const;
  // T^i_j with its lift; zero group outside i in [-d, d], j in [0, d].
  const HomologyData& t(int i, int j) const;
  // Induced map T^i_j -> T^{i+2}_{j-1}, in generator coordinates.
  IntMatrix monodromy(int i, int j) const;
  // N^i : T^{-i}_{j+i} -> T^i_j on torsion-free quotients.
  IsogenyReport prop2(int i, int j) const;
  WeightTable weight_table(int m) const;

 private:
  FibreDescription fibre_;
  std::vector<ChowComplexRow> rows_;
  std::vector<HomologyData> t_;  // indexed (i + d) * (d + 1) + j
  HomologyData empty_;
};

FgAbGroup t_group(const FibreDescription& fibre, int i, int j);
IntMatrix monodromy_N(const FibreDescription& fibre, int i, int j);
IsogenyReport check_prop2(const FibreDescription& fibre, int i, int j);
WeightTable weight_table(const FibreDescription& fibre, int m);

// Built-in fibres.
FibreDescription ngon_fibre(int n);                  // Tate curve: cycle of n rational curves
FibreDescription ngon_times_p1_fibre(int n);         // (n-gon) x P^1
FibreDescription triangulated_torus_fibre(int a, int b);  // abelian surface, dP6 components
FibreDescription smooth_fibre(int d, const std::vector<std::size_t>& chow_ranks);

FibreDescription fibre_from_json(const nlohmann::json& j);
nlohmann::json fibre_to_json(const FibreDescription& fibre);

}  // namespace degen
