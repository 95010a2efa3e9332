#include <algorithm>
#include <map>

#include "degen/errors.hpp"
#include "degen/tatemodules.hpp"

namespace degen {

int BasisWord::weight() const {
  int w = 0;
  for (Letter l : letters) w += (l == Letter::E) - (l == Letter::F);
  return w;
}

int BasisWord::tate_twist() const {
  int k = twist;
  for (Letter l : letters) k -= (l == Letter::E || l == Letter::Point);
  return k;
}

std::string BasisWord::to_string() const {
  std::string s;
  for (Letter l : letters) {
    switch (l) {
      case Letter::One: s += '1'; break;
      case Letter::F: s += 'f'; break;
      case Letter::E: s += 'e'; break;
      case Letter::Point: s += 'p'; break;
    }
  }
  if (twist != 0) s += "(" + std::to_string(twist) + ")";
  return s;
}

KStarExponent KStarExponent::unit(std::size_t n, std::size_t i) {
  KStarExponent k = zero(n);
  k.exps.at(i) = 1;
  return k;
}

bool KStarExponent::is_zero() const {
  return std::all_of(exps.begin(), exps.end(), [](const BigRational& x) { return x == 0; });
}

namespace {

std::vector<BigInt> clear_denominators(const std::vector<BigRational>& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out;
  for (const auto& x : v) out.emplace_back(BigInt(x.get_num() * (l / x.get_den())));
  return out;
}

}  // namespace

bool KStarExponent::is_trivial_modulo(const IntMatrix& lattice) const {
  if (lattice.rows() > 0 && lattice.cols() != exps.size()) throw ShapeMismatch("lattice width differs from exponent length");
  std::vector<BigInt> x = clear_denominators(exps);
  if (lattice.rows() == 0) return is_zero();
  IntMatrix annihilator = kernel_basis(lattice).transpose();
  for (const BigInt& y : annihilator.apply(x))
    if (y != 0) return false;
  return true;
}

KStarExponent KStarExponent::operator+(const KStarExponent& o) const {
  if (o.exps.size() != exps.size()) throw ShapeMismatch("exponent vectors of different length");
  KStarExponent r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
  return r;
}

std::string KStarExponent::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "q" + std::to_string(i + 1);
    if (exps[i] != 1) s += "^" + exps[i].get_str();
  }
  return s.empty() ? "1" : s;
}

IntMatrix MonodromyModule::n_matrix() const {
  IntMatrix m(dim(), dim());
  for (const auto& a : arrows) m(a.target, a.source) += 1;
  return m;
}

std::vector<std::size_t> MonodromyModule::words_of_weight(int w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].weight() == w) out.push_back(i);
  return out;
}

MonodromyModule cohomology_module(std::size_t curve, std::size_t n, int a, int twist) {
  if (curve < 1 || curve > n) throw IndexOutOfRange("curve index " + std::to_string(curve) + " outside [1, n]");
  if (a < 0 || a > 2) throw IndexOutOfRange("H^a(E) needs a in {0, 1, 2}");
  MonodromyModule m;
  m.n = n;
  m.degree = a;
  m.twist = twist;
  std::vector<Letter> letters(n, Letter::One);
  auto word = [&](Letter l) {
    auto w = letters;
    w[curve - 1] = l;
    return BasisWord{w, twist};
  };
  if (a == 0) {
    m.basis.push_back(word(Letter::One));
    return m;
  }
  m.support = {curve - 1};
  if (a == 2) {
    m.basis.push_back(word(Letter::Point));
    return m;
  }
  m.basis = {word(Letter::F), word(Letter::E)};
  m.arrows.push_back({1, 0, KStarExponent::unit(n, curve - 1)});
  return m;
}

MonodromyModule h1_module(std::size_t curve, std::size_t n, int twist) { return cohomology_module(curve, n, 1, twist); }

MonodromyModule tensor(const std::vector<MonodromyModule>& mods, int twist) {
  if (mods.empty()) throw InputInvalid("tensor of no modules");
  MonodromyModule out;
  out.n = mods.front().n;
  out.twist = twist;
  std::vector<int> owner(out.n, -1);
  for (std::size_t f = 0; f < mods.size(); ++f) {
    const auto& m = mods[f];
    if (m.n != out.n) throw ShapeMismatch("tensor factors live on different numbers of curves");
    out.degree += m.degree;
    out.twist += m.twist;
    for (std::size_t c : m.support) {
      if (owner[c] >= 0) throw ShapeMismatch("tensor factors share curve " + std::to_string(c + 1));
      owner[c] = static_cast<int>(f);
      out.support.push_back(c);
    }
  }
  std::sort(out.support.begin(), out.support.end());

  // Mixed-radix enumeration, first factor slowest.
  std::vector<std::size_t> radix;
  std::size_t total = 1;
  for (const auto& m : mods) {
    radix.push_back(m.dim());
    total *= m.dim();
  }
  auto index_of = [&](const std::vector<std::size_t>& digits) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < mods.size(); ++f) idx = idx * radix[f] + digits[f];
    return idx;
  };
  std::vector<std::vector<std::vector<const NArrow*>>> outgoing(mods.size());
  for (std::size_t f = 0; f < mods.size(); ++f) {
    outgoing[f].resize(mods[f].dim());
    for (const auto& a : mods[f].arrows) outgoing[f][a.source].push_back(&a);
  }

  std::vector<std::size_t> digits(mods.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    BasisWord w{std::vector<Letter>(out.n, Letter::One), out.twist};
    for (std::size_t c = 0; c < out.n; ++c)
      if (owner[c] >= 0) {
        std::size_t f = static_cast<std::size_t>(owner[c]);
        w.letters[c] = mods[f].basis[digits[f]].letters[c];
      }
    out.basis.push_back(std::move(w));
    for (std::size_t f = 0; f < mods.size(); ++f)
      for (const NArrow* a : outgoing[f][digits[f]]) {
        auto tgt = digits;
        tgt[f] = a->target;
        out.arrows.push_back({idx, index_of(tgt), a->label});
      }
    for (std::size_t f = mods.size(); f-- > 0;) {
      if (++digits[f] < radix[f]) break;
      digits[f] = 0;
    }
  }
  return out;
}

MonodromyModule direct_sum(const std::vector<MonodromyModule>& mods) {
  if (mods.empty()) throw InputInvalid("direct sum of no modules");
  MonodromyModule out;
  out.n = mods.front().n;
  out.degree = mods.front().degree;
  out.twist = mods.front().twist;
  for (const auto& m : mods) {
    if (m.n != out.n || m.twist != out.twist) throw ShapeMismatch("direct sum summands disagree on n or twist");
    std::size_t offset = out.basis.size();
    out.basis.insert(out.basis.end(), m.basis.begin(), m.basis.end());
    for (const auto& a : m.arrows) out.arrows.push_back({a.source + offset, a.target + offset, a.label});
    out.support.insert(out.support.end(), m.support.begin(), m.support.end());
    out.degree = std::max(out.degree, m.degree);
  }
  std::sort(out.support.begin(), out.support.end());
  out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
  return out;
}

MonodromyModule kunneth(int m, std::size_t n, int twist, std::size_t max_curves) {
  if (n < 1 || n > max_curves)
    throw IndexOutOfRange("n = " + std::to_string(n) + " outside [1, " + std::to_string(max_curves) + "]");
  if (m < 0 || m > static_cast<int>(2 * n)) throw IndexOutOfRange("degree m = " + std::to_string(m) + " outside [0, 2n]");
  std::vector<MonodromyModule> pieces;
  std::vector<int> a(n, 0);
  while (true) {
    int sum = 0;
    for (int x : a) sum += x;
    if (sum == m) {
      std::vector<MonodromyModule> factors;
      for (std::size_t i = 0; i < n; ++i) factors.push_back(cohomology_module(i + 1, n, a[i], 0));
      pieces.push_back(tensor(factors, twist));
    }
    std::size_t k = n;
    while (k > 0 && a[k - 1] == 2) a[--k] = 0;
    if (k == 0) break;
    ++a[k - 1];
  }
  MonodromyModule out = direct_sum(pieces);
  out.degree = m;
  return out;
}

WeightTable filtration_dims(const MonodromyModule& mod) {
  int top = mod.degree;
  for (const auto& w : mod.basis) top = std::max(top, std::abs(w.weight()));
  std::vector<std::size_t> graded(static_cast<std::size_t>(2 * top + 1), 0);
  for (const auto& w : mod.basis) ++graded[static_cast<std::size_t>(w.weight() + top)];
  return make_weight_table(mod.degree, -top, top, graded);
}

InclusionReport bottom_inclusion_map(const MonodromyModule& v, const MonodromyModule& w) {
  auto lowest = [](const MonodromyModule& m) {
    if (m.basis.empty()) throw InputInvalid("empty module");
    int lo = m.basis.front().weight();
    for (const auto& b : m.basis) lo = std::min(lo, b.weight());
    auto idx = m.words_of_weight(lo);
    if (idx.size() != 1) throw InputInvalid("module has no unique lowest-weight word");
    return idx.front();
  };
  const std::size_t v0 = lowest(v), w0 = lowest(w);
  MonodromyModule m = tensor({v, w}, 0);
  std::map<std::size_t, std::size_t> row_of;  // tensor index -> row in M_0
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.basis[i].weight() <= 0) row_of.emplace(i, row_of.size());

  InclusionReport rep;
  rep.source_dim = v.dim() + w.dim();
  rep.target_dim = row_of.size();
  rep.map = IntMatrix(rep.target_dim, rep.source_dim);
  auto put = [&](std::size_t tensor_idx, std::size_t col) {
    auto it = row_of.find(tensor_idx);
    if (it == row_of.end()) throw InputInvalid("image leaves M_0");
    rep.map(it->second, col) = 1;
  };
  for (std::size_t a = 0; a < v.dim(); ++a) put(a * w.dim() + w0, a);
  for (std::size_t b = 0; b < w.dim(); ++b) put(v0 * w.dim() + b, v.dim() + b);
  rep.kernel_dim = rep.source_dim - rank_of(rep.map);
  return rep;
}

}  // namespace degen
