#pragma once

// Formal monodromy-filtered modules for products of Tate elliptic curves.
// Modules are split: a basis of words, each spanning a Tate twist, plus N
// arrows labelled by the extension class (a monomial in the q_i).

#include <string>
#include <vector>

#include "degen/bigint.hpp"
#include "degen/padics.hpp"
#include "degen/weights.hpp"
#include "degen/zlattice.hpp"

namespace degen {

// One: H^0(E). F: the sub Q_p of H^1(E) (weight -1). E: the quotient
// Q_p(-1) of H^1(E) (weight +1). Point: H^2(E) = Q_p(-1).
enum class Letter { One, F, E, Point };

struct BasisWord {
  std::vector<Letter> letters;  // one per curve
  int twist = 0;                // global Tate twist of the ambient module

  // Centered weight #E - #F: H^m(t) sits in [-m, m] for every t.
  int weight() const;
  // The Galois character Q_p(k) spanned by the word: k = twist - #E - #Point.
  int tate_twist() const;
  std::string to_string() const;
  friend bool operator==(const BasisWord&, const BasisWord&) = default;
  friend auto operator<=>(const BasisWord&, const BasisWord&) = default;
};

// An element of K^* tensor Q written as an exponent vector over q_1..q_n.
struct KStarExponent {
  std::vector<BigRational> exps;

  static KStarExponent zero(std::size_t n) { return {std::vector<BigRational>(n, 0)}; }
  static KStarExponent unit(std::size_t n, std::size_t i);
  bool is_zero() const;
  // Trivial in K^* tensor Q modulo the relation lattice (rows of `lattice`).
  bool is_trivial_modulo(const IntMatrix& lattice) const;
  KStarExponent operator+(const KStarExponent& o) const;
  std::string to_string() const;
  friend bool operator==(const KStarExponent&, const KStarExponent&) = default;
};

struct NArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  KStarExponent label;
  friend bool operator==(const NArrow&, const NArrow&) = default;
};

struct MonodromyModule {
  std::size_t n = 0;
  std::vector<std::size_t> support;  // curves (0-based) carrying H^1 or H^2
  int degree = 0;                    // cohomological degree
  int twist = 0;
  std::vector<BasisWord> basis;
  std::vector<NArrow> arrows;

  std::size_t dim() const { return basis.size(); }
  // N as an integer matrix (target x source), one per arrow.
  IntMatrix n_matrix() const;
  // Basis indices of the given weight, in basis order.
  std::vector<std::size_t> words_of_weight(int w) const;
};

constexpr std::size_t kDefaultMaxCurves = 6;

// H^a(E_i)(twist) inside a product of n curves; curve is 1-based.
MonodromyModule h1_module(std::size_t curve, std::size_t n, int twist = 1);
MonodromyModule cohomology_module(std::size_t curve, std::size_t n, int a, int twist = 0);

// Tensor product with disjoint supports; N by the Leibniz rule, labels
// inherited. `twist` is added to the sum of the factors' twists.
MonodromyModule tensor(const std::vector<MonodromyModule>& mods, int twist);
MonodromyModule direct_sum(const std::vector<MonodromyModule>& mods);

// H^m(E_1 x ... x E_n)(twist) by Kunneth: the sum over a in {0,1,2}^n with
// sum a = m, pieces ordered lexicographically in a.
MonodromyModule kunneth(int m, std::size_t n, int twist, std::size_t max_curves = kDefaultMaxCurves);

WeightTable filtration_dims(const MonodromyModule& mod);

// The map V + W(1) -> M_0 (V tensor W) of a pair of H^1 modules: v -> v (x) w_0,
// w -> v_0 (x) w with v_0, w_0 the lowest-weight words.
struct InclusionReport {
  IntMatrix map;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t kernel_dim = 0;
};
InclusionReport bottom_inclusion_map(const MonodromyModule& v, const MonodromyModule& w);

struct WeightRank {
  int weight = 0;
  std::size_t rank = 0;
  friend bool operator==(const WeightRank&, const WeightRank&) = default;
};

struct JacobianData {
  std::size_t n = 0;
  int j = 0;
  std::size_t lambda_rank = 0;
  std::size_t lambda_prime_rank = 0;
  std::size_t dim_J = 0;
  std::size_t tate_module_dim = 0;
  std::vector<WeightRank> lost_dims;  // weights <= -3 inside M_1
  std::size_t betti = 0;              // dim H^{2j-1}
  // rows: weight +1 words (Lambda), cols: weight -1 words (Lambda').
  std::vector<std::vector<KStarExponent>> pairing;
  std::vector<BasisWord> lambda_words;
  std::vector<BasisWord> lambda_prime_words;
};

JacobianData jacobian(std::size_t n, int j, std::size_t max_curves = kDefaultMaxCurves);

BigInt hodge_number(std::size_t n, std::size_t a, std::size_t b);

// det(sum_i v_i P_i) != 0 with P_i the i-th exponent component of the pairing.
bool period_pairing_valuation_check(const JacobianData& jd, const std::vector<BigInt>& valuations);

enum class GhtCase { TwoRelations, OneRelationIsogeny, OneRelationExotic, NoRelations };
enum class GhtStatus { Proved, Conjectural };
std::string to_string(GhtCase c);
std::string to_string(GhtStatus s);

struct GhtReport {
  std::size_t r = 0;
  std::size_t ker_N1_dim = 0;
  std::size_t ker_N1prime_dim = 0;
  std::size_t degenerate_in_kernel = 0;  // Kunneth-degenerate words of T^1_1 killed by N_1
  std::size_t predicted_dim_J2a = 0;
  GhtCase ght_case = GhtCase::NoRelations;
  GhtStatus status = GhtStatus::Proved;
  BigInt coeff_bound = 1;
  long precision = 0;
  friend bool operator==(const GhtReport&, const GhtReport&) = default;
};

// Needs lattice.n == 3.
GhtReport enriched_monodromy(const RelationLattice& lattice);

}  // namespace degen
