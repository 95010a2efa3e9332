#include <algorithm>
#include <array>

#include "degen/chowcomplex.hpp"
#include "degen/errors.hpp"

namespace degen {

namespace {

IndexSet sorted(IndexSet I) {
  std::sort(I.begin(), I.end());
  return I;
}

// Components 1..n arranged in a cycle; double points {i, i+1 mod n}.
std::vector<IndexSet> cycle_edges(int n) {
  std::vector<IndexSet> e;
  for (int i = 1; i <= n; ++i) e.push_back(sorted({i, i % n + 1}));
  return e;
}

}  // namespace

FibreDescription ngon_fibre(int n) {
  if (n < 3) throw InputInvalid("n-gon needs n >= 3");
  FibreDescription f;
  f.n = n;
  f.d = 1;
  for (int i = 1; i <= n; ++i) f.add_stratum({i}, {1, 1});
  for (const IndexSet& e : cycle_edges(n)) {
    f.add_stratum(e, {1});
    for (int c : e) {
      f.restrictions[{IndexSet{c}, e, 0}] = IntMatrix{{1}};
      f.gysin[{e, IndexSet{c}, 0}] = IntMatrix{{1}};
    }
  }
  return f;
}

FibreDescription ngon_times_p1_fibre(int n) {
  if (n < 3) throw InputInvalid("n-gon needs n >= 3");
  FibreDescription f;
  f.n = n;
  f.d = 2;
  // Y_i = P^1 x P^1, CH^1 basis (F, G): F the fibre over a point of the n-gon
  // factor, G a horizontal section. Double curves are copies of F.
  for (int i = 1; i <= n; ++i) {
    f.add_stratum({i}, {1, 2, 1});
    f.strata[{i}].labels = {{"Y"}, {"F", "G"}, {"pt"}};
  }
  for (const IndexSet& e : cycle_edges(n)) {
    f.add_stratum(e, {1, 1});
    for (int c : e) {
      f.restrictions[{IndexSet{c}, e, 0}] = IntMatrix{{1}};
      f.restrictions[{IndexSet{c}, e, 1}] = IntMatrix{{0, 1}};
      f.gysin[{e, IndexSet{c}, 0}] = IntMatrix{{1}, {0}};
      f.gysin[{e, IndexSet{c}, 1}] = IntMatrix{{1}};
    }
  }
  return f;
}

FibreDescription triangulated_torus_fibre(int a, int b) {
  if (a < 3 || b < 3) throw InputInvalid("triangulated torus needs a, b >= 3");
  // Each vertex of the standard triangulation of R^2 / (aZ x bZ) is a toric
  // del Pezzo surface of degree 6 whose boundary rays are the six edge
  // directions u_1..u_6. Edge v -> v + u_r is the curve D_r on Y_v.
  static const std::array<std::array<int, 2>, 6> u{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
  // D_1..D_6 in the basis D_1..D_4 of CH^1.
  static const std::array<std::array<long, 4>, 6> coords{
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, -1}, {-1, 0, 1, 1}}};
  auto dot = [](int r, int s) -> long {  // D_r . D_s on the hexagon
    if (r == s) return -1;
    int gap = (r - s + 6) % 6;
    return (gap == 1 || gap == 5) ? 1 : 0;
  };
  auto index = [&](int x, int y) { return ((x % a + a) % a) * b + ((y % b + b) % b) + 1; };

  FibreDescription f;
  f.n = a * b;
  f.d = 2;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) {
      f.add_stratum({index(x, y)}, {1, 4, 1});
      f.strata[{index(x, y)}].labels = {{"Y"}, {"D1", "D2", "D3", "D4"}, {"pt"}};
    }
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) {
      int v = index(x, y);
      for (int r = 0; r < 6; ++r) {
        int w = index(x + u[r][0], y + u[r][1]);
        IndexSet e = sorted({v, w});
        if (!f.strata.count(e)) f.add_stratum(e, {1, 1});
        IndexSet V{v};
        f.restrictions[{V, e, 0}] = IntMatrix{{1}};
        IntMatrix res(1, 4), gys(4, 1);
        for (int s = 0; s < 4; ++s) {
          res(0, s) = dot(s, r);
          gys(s, 0) = coords[r][s];
        }
        f.restrictions[{V, e, 1}] = res;
        f.gysin[{e, V, 0}] = gys;
        f.gysin[{e, V, 1}] = IntMatrix{{1}};

        int t = index(x + u[(r + 1) % 6][0], y + u[(r + 1) % 6][1]);
        IndexSet tri = sorted({v, w, t});
        if (!f.strata.count(tri)) f.add_stratum(tri, {1});
      }
    }
  for (const auto& [I, data] : f.strata) {
    if (I.size() != 3) continue;
    for (std::size_t pos = 0; pos < 3; ++pos) {
      IndexSet e = I;
      e.erase(e.begin() + static_cast<long>(pos));
      f.restrictions[{e, I, 0}] = IntMatrix{{1}};
      f.gysin[{I, e, 0}] = IntMatrix{{1}};
    }
  }
  return f;
}

FibreDescription smooth_fibre(int d, const std::vector<std::size_t>& chow_ranks) {
  if (static_cast<int>(chow_ranks.size()) != d + 1) throw InputInvalid("smooth fibre needs d + 1 Chow ranks");
  FibreDescription f;
  f.n = 1;
  f.d = d;
  f.add_stratum({1}, chow_ranks);
  return f;
}

}  // namespace degen
