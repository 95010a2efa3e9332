#pragma once

// Exact linear algebra over Z: Smith and Hermite normal forms, homology of
// complexes of free abelian groups, isogeny verdicts, saturation and LLL.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degen/bigint.hpp"

namespace degen {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  // Builds a matrix from row vectors; all rows must share a length. An empty
  // list yields a 0 x cols matrix.
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<BigInt> row_vector(std::size_t r) const;
  std::vector<BigInt> col_vector(std::size_t c) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  // Rows [r0, r1) and columns [c0, c1).
  IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
  // Copies `m` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& m);
  void add_block(std::size_t r0, std::size_t c0, const IntMatrix& m, long sign = 1);

  std::vector<BigInt> apply(std::span<const BigInt> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const BigInt& s, const IntMatrix& a);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
// Kronecker product a (x) b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Finitely generated abelian group Z^free_rank + sum Z/d_i with d_1 | d_2 | ...
struct FgAbGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static FgAbGroup free(std::size_t rank) { return {rank, {}}; }
  // Canonicalises arbitrary cyclic orders into invariant factors (units dropped).
  static FgAbGroup from_cyclic_orders(std::size_t free_rank, std::vector<BigInt> orders);

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

// U * A * V = D, with U and V unimodular. The inverses are carried along so
// callers can change coordinates in both directions without re-solving.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
};

// Pivot rule: smallest nonzero absolute value, then lowest row, then lowest
// column. Output is therefore a function of the input alone.
SnfDecomposition snf(const IntMatrix& a);

// Row-style Hermite normal form of the row lattice: nonzero rows only, positive
// pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hnf_rows(const IntMatrix& a);

std::size_t rank_of(const IntMatrix& a);
BigInt determinant(const IntMatrix& a);

// Columns form a Z-basis of {x : A x = 0}; the basis is saturated.
IntMatrix kernel_basis(const IntMatrix& a);

// Cycles modulo boundaries, with representatives.
struct HomologyData {
  FgAbGroup group;
  // Orders of the generators, torsion ones first (ascending divisibility) then
  // free ones (order 0).
  std::vector<BigInt> orders;
  // chain_dim x generators: column g is a cycle representing generator g.
  IntMatrix lift;
  // generators x chain_dim: coordinates of a cycle in the quotient. Torsion
  // coordinates must be reduced modulo their order (see reduce()).
  IntMatrix projection;

  std::size_t generator_count() const { return orders.size(); }
  std::size_t torsion_count() const { return group.torsion.size(); }
  // Coordinates of a cycle, torsion entries reduced into [0, order).
  std::vector<BigInt> coordinates(std::span<const BigInt> cycle) const;
};

// ker(d_out) / im(d_in). Throws ShapeMismatch or CompositionNonzero.
HomologyData homology_with_lift(const IntMatrix& d_in, const IntMatrix& d_out);
FgAbGroup homology(const IntMatrix& d_in, const IntMatrix& d_out);

// Matrix of the map induced on homology by a chain map `f` from the chain
// group of `source` to that of `target`: generators(target) x generators(source).
IntMatrix induced_map(const HomologyData& source, const HomologyData& target, const IntMatrix& f);

// Restriction of an induced map to torsion-free quotients.
IntMatrix free_part(const HomologyData& source, const HomologyData& target, const IntMatrix& induced);

struct IsogenyReport {
  bool is_isogeny = false;
  std::optional<BigInt> exponent;
  std::size_t kernel_rank = 0;
  friend bool operator==(const IsogenyReport&, const IsogenyReport&) = default;
};

// `f` acts on torsion-free quotients: f.cols() == source.free_rank and
// f.rows() == target.free_rank, else ShapeMismatch.
IsogenyReport isogeny_check(const IntMatrix& f, const FgAbGroup& source, const FgAbGroup& target);

// The dual isogeny g with f g = e and g f = e; requires a square isogeny.
IntMatrix dual_isogeny(const IntMatrix& f, const BigInt& exponent);

// Basis (HNF rows) of {v in Z^n : m v in rowspan(L) for some m >= 1}.
IntMatrix saturate(const IntMatrix& rows);

// LLL reduction (delta = 3/4) of linearly independent rows, exact arithmetic.
IntMatrix lll_reduce(const IntMatrix& rows);

}  // namespace degen
