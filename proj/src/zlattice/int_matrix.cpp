#include <algorithm>
#include <sstream>

#include "degen/errors.hpp"
#include "degen/zlattice.hpp"

namespace degen {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputInvalid("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputInvalid("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InputInvalid("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged initializer for IntMatrix");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeMismatch("ragged rows for IntMatrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<BigInt> IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<BigInt> IntMatrix::col_vector(std::size_t c) const {
  std::vector<BigInt> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_) throw ShapeMismatch("block out of range");
  IntMatrix b(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) b(r - r0, c - c0) = (*this)(r, c);
  return b;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) m(r, i) = (*this)(r, idx[i]);
  return m;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeMismatch("set_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

void IntMatrix::add_block(std::size_t r0, std::size_t c0, const IntMatrix& m, long sign) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeMismatch("add_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) += sign * m(r, c);
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> v) const {
  if (v.size() != cols_) throw ShapeMismatch("matrix-vector size mismatch");
  std::vector<BigInt> out(rows_, BigInt(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum shape mismatch");
  IntMatrix m = a;
  m.add_block(0, 0, b, 1);
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix difference shape mismatch");
  IntMatrix m = a;
  m.add_block(0, 0, b, -1);
  return m;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
  IntMatrix m = a;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
  return m;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack column mismatch");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

FgAbGroup FgAbGroup::from_cyclic_orders(std::size_t free_rank, std::vector<BigInt> orders) {
  // Invariant factors of a diagonal matrix are its Smith form.
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  FgAbGroup g{free_rank, {}};
  for (const BigInt& x : snf(d).diagonal()) {
    if (x == 0) {
      ++g.free_rank;
    } else if (x != 1) {
      g.torsion.push_back(x);
    }
  }
  return g;
}

std::string FgAbGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const BigInt& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace degen
