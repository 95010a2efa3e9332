#include <random>

#include "doctest.h"
#include "degen/chowcomplex.hpp"
#include "degen/errors.hpp"
#include "degen/kernels.hpp"
#include "fibre_oracles.hpp"
#include "oracles.hpp"

using namespace degen;

namespace {

bool has_kind(const std::vector<Violation>& v, const std::string& kind) {
  for (const auto& x : v)
    if (x.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(ngon_fibre(4)).empty());
  CHECK(validate(ngon_times_p1_fibre(3)).empty());
  CHECK(validate(triangulated_torus_fibre(3, 3)).empty());

  FibreDescription missing = ngon_fibre(3);
  missing.strata.erase(IndexSet{2});
  CHECK(has_kind(validate(missing), "closure"));

  FibreDescription shape = ngon_fibre(3);
  shape.gysin[{IndexSet{1, 2}, IndexSet{1}, 0}] = IntMatrix{{1, 1}};
  CHECK(has_kind(validate(shape), "shape"));

  FibreDescription absent = ngon_fibre(3);
  absent.restrictions.erase({IndexSet{1}, IndexSet{1, 2}, 0});
  CHECK(has_kind(validate(absent), "missing"));

  FibreDescription bad_index = ngon_fibre(3);
  bad_index.add_stratum({9}, {1, 1});
  CHECK(has_kind(validate(bad_index), "index"));

  FibreDescription bad_dim = ngon_fibre(3);
  bad_dim.strata[{1}].chow.pop_back();
  CHECK(has_kind(validate(bad_dim), "dimension"));

  // Geometric data that only the constant Gysin sign keeps a complex.
  auto torus = triangulated_torus_fibre(3, 3);
  CHECK(validate(torus, {GysinSign::Negative}).empty());
  CHECK(has_kind(validate(torus, {GysinSign::AlternatingBySize}), "d_squared"));
  CHECK_THROWS_AS(build_complex(torus, 1, {GysinSign::AlternatingBySize}), CompositionNonzero);

}

TEST_CASE("check_prop2 reports a failed isogeny as a verdict") {
  FibreDescription f = ngon_fibre(4);
  for (auto& [key, m] : f.gysin) m = IntMatrix{{0}};
  REQUIRE(validate(f).empty());
  auto rep = check_prop2(f, 1, 0);
  CHECK_FALSE(rep.is_isogeny);
  CHECK(rep.kernel_rank == 3);
  CHECK_FALSE(rep.exponent.has_value());
}

TEST_CASE("build_complex term ranks") {
  for (int n : {3, 4, 5}) {
    auto row1 = build_complex(ngon_fibre(n), 1);
    CHECK(row1.term(-1).rank == static_cast<std::size_t>(n));
    CHECK(row1.term(0).rank == static_cast<std::size_t>(n));
    CHECK(row1.term(1).rank == 0);
    auto row0 = build_complex(ngon_fibre(n), 0);
    CHECK(row0.term(0).rank == static_cast<std::size_t>(n));
    CHECK(row0.term(1).rank == static_cast<std::size_t>(n));
  }
  auto f = ngon_fibre(4);
  for (int j : {-1, 2, 3}) {
    auto row = build_complex(f, j);
    for (int i = -3; i <= 3; ++i) CHECK(row.term(i).rank == 0);
  }
  auto smooth = smooth_fibre(3, {1, 5, 5, 1});
  for (int j = 0; j <= 3; ++j) {
    auto row = build_complex(smooth, j);
    for (int i = -4; i <= 4; ++i)
      CHECK(row.term(i).rank == (i == 0 ? smooth.chow_rank({1}, j) : 0));
  }
}

TEST_CASE("n-gon T-groups, weight table and monodromy match the oracle") {
  for (int n : {3, 4, 5, 6}) {
    FibreAnalysis a(ngon_fibre(n));
    oracle::NgonOracle o(n);
    std::size_t rank_g = oracle::rational_rank(o.G);
    std::size_t rank_r = oracle::rational_rank(o.R);
    CHECK(a.t(-1, 1).group == FgAbGroup::free(static_cast<std::size_t>(n) - rank_g));
    CHECK(a.t(0, 1).group == oracle::cokernel_oracle(o.G));
    CHECK(a.t(0, 0).group == FgAbGroup::free(static_cast<std::size_t>(n) - rank_r));
    CHECK(a.t(1, 0).group == oracle::cokernel_oracle(o.R));
    CHECK(a.t(0, 1).group == FgAbGroup::free(1));
    for (int i : {-2, 2})
      for (int j : {0, 1}) CHECK(a.t(i, j).group.is_zero());

    auto wt = a.weight_table(1);
    CHECK(wt.graded == std::vector<std::size_t>{1, 0, 1});
    CHECK(a.weight_table(0).graded == std::vector<std::size_t>{1});
    CHECK(a.weight_table(2).graded_at(0) == 1);

    // Exponent of N: gcd of maximal minors of [R | g].
    IntMatrix aug(n, n + 1);
    aug.set_block(0, 0, o.R);
    auto g = o.cycle();
    for (int t = 0; t < n; ++t) aug(t, n) = g[static_cast<std::size_t>(t)];
    BigInt exponent = oracle::determinantal_divisor(aug, static_cast<std::size_t>(n));
    CHECK(exponent == n);

    IntMatrix nmat = a.monodromy(-1, 1);
    REQUIRE(nmat.rows() == 1);
    REQUIRE(nmat.cols() == 1);
    CHECK(abs_value(nmat(0, 0)) == exponent);
    auto rep = a.prop2(1, 0);
    CHECK(rep.is_isogeny);
    CHECK(rep.exponent == BigInt(n));
    CHECK(a.prop2(0, 0).exponent == BigInt(1));
    CHECK(a.prop2(0, 1).exponent == BigInt(1));
  }
}

TEST_CASE("smooth component: T^0_j = CH^j and N vanishes") {
  auto f = smooth_fibre(2, {1, 3, 1});
  FibreAnalysis a(f);
  for (int j = 0; j <= 2; ++j) {
    CHECK(a.t(0, j).group == FgAbGroup::free(f.chow_rank({1}, j)));
    CHECK(a.t(1, j).group.is_zero());
    CHECK(a.monodromy(0, j).is_zero());
  }
  CHECK(t_group(f, 0, 1) == FgAbGroup::free(3));
}

TEST_CASE("surface fibres: expected T ranks") {
  FibreAnalysis cyl(ngon_times_p1_fibre(5));
  CHECK(cyl.weight_table(1).graded == std::vector<std::size_t>{1, 0, 1});
  CHECK(cyl.weight_table(2).graded == std::vector<std::size_t>{0, 0, 2, 0, 0});
  CHECK(cyl.weight_table(3).graded == std::vector<std::size_t>{0, 0, 1, 0, 1, 0, 0});
  CHECK(cyl.weight_table(4).graded_at(0) == 1);
  CHECK(cyl.prop2(1, 0).exponent == BigInt(5));
  CHECK(cyl.prop2(1, 1).exponent == BigInt(5));

  FibreAnalysis torus(triangulated_torus_fibre(3, 4));
  CHECK(torus.weight_table(0).graded == std::vector<std::size_t>{1});
  CHECK(torus.weight_table(1).graded == std::vector<std::size_t>{2, 0, 2});
  CHECK(torus.weight_table(2).graded == std::vector<std::size_t>{1, 0, 4, 0, 1});
  CHECK(torus.weight_table(3).graded == std::vector<std::size_t>{0, 0, 2, 0, 2, 0, 0});
  CHECK(torus.weight_table(4).graded_at(0) == 1);
  CHECK(torus.weight_table(2).total() == 6);
  for (int i = 0; i <= 2; ++i) CHECK(torus.prop2(i, 0).is_isogeny);
}

TEST_CASE("N o N is the double shift on common summands") {
  auto f = triangulated_torus_fibre(3, 3);
  for (int i = -2; i <= 0; ++i)
    for (int j = 2; j <= 2; ++j) {
      IntMatrix nn = chain_monodromy(f, i + 2, j - 1) * chain_monodromy(f, i, j);
      ChowTerm src = build_complex(f, j).term(i);
      ChowTerm tgt = build_complex(f, j - 2).term(i + 4);
      IntMatrix expected(tgt.rank, src.rank);
      for (const auto& s : src.summands) {
        if (s.k < i + 2 || s.rank == 0) continue;
        for (const auto& t : tgt.summands)
          if (t.k == s.k + 2) expected.set_block(t.offset, s.offset, IntMatrix::identity(s.rank));
      }
      CHECK(nn == expected);
    }
}

TEST_CASE("property: d o d = 0, N commutes with d, Euler characteristic") {
  std::mt19937 rng(77);
  auto samples = oracle::sample_fibres();
  int cases = 0;
  for (int trial = 0; trial < 110; ++trial) {
    FibreDescription f = oracle::rebased(samples[static_cast<std::size_t>(trial) % samples.size()], rng);
    REQUIRE(validate(f).empty());
    for (int j = 0; j <= f.d; ++j) {
      auto row = build_complex(f, j);
      for (int i = -f.d - 1; i <= f.d; ++i) CHECK((row.differential(i + 1) * row.differential(i)).is_zero());
      if (j >= 1) {
        auto lower = build_complex(f, j - 1);
        for (int i = -f.d - 1; i <= f.d; ++i)
          CHECK(chain_monodromy(f, i + 1, j) * row.differential(i) == lower.differential(i + 2) * chain_monodromy(f, i, j));
      }
    }
    ++cases;
  }
  CHECK(cases >= 100);

  for (const auto& f : samples) {
    FibreAnalysis a(f);
    for (int j = 0; j <= f.d; ++j) {
      long chi_c = 0, chi_t = 0;
      for (int i = -f.d; i <= f.d; ++i) {
        long sign = (i % 2 == 0) ? 1 : -1;
        chi_c += sign * static_cast<long>(a.row(j).term(i).rank);
        chi_t += sign * static_cast<long>(a.t(i, j).group.free_rank);
      }
      CHECK(chi_c == chi_t);
    }
  }
}

TEST_CASE("property: T ranks are invariant under basis change and weights are symmetric") {
  std::mt19937 rng(5);
  auto samples = oracle::sample_fibres();
  for (int trial = 0; trial < 27; ++trial) {
    const auto& base = samples[static_cast<std::size_t>(trial) % samples.size()];
    FibreAnalysis a(base), b(oracle::rebased(base, rng));
    for (int j = 0; j <= base.d; ++j)
      for (int i = -base.d; i <= base.d; ++i) CHECK(a.t(i, j).group == b.t(i, j).group);
    for (int m = 0; m <= 2 * base.d; ++m) {
      auto wt = b.weight_table(m);
      for (std::size_t w = 0; w < wt.graded.size(); ++w) CHECK(wt.graded[w] == wt.graded[wt.graded.size() - 1 - w]);
      for (std::size_t w = 1; w < wt.cumulative.size(); ++w) CHECK(wt.cumulative[w] >= wt.cumulative[w - 1]);
    }
    for (int i = 0; i <= base.d; ++i)
      for (int j = 0; i + j <= base.d; ++j) {
        auto rep = b.prop2(i, j);
        if (rep.is_isogeny) CHECK(b.t(-i, j + i).group.free_rank == b.t(i, j).group.free_rank);
        CHECK(rep.exponent == a.prop2(i, j).exponent);
      }
  }
}

TEST_CASE("n-gon ranks do not depend on n") {
  FibreAnalysis a3(ngon_fibre(3));
  for (int n : {4, 5}) {
    FibreAnalysis an(ngon_fibre(n));
    for (int j = 0; j <= 1; ++j)
      for (int i = -1; i <= 1; ++i) CHECK(an.t(i, j).group == a3.t(i, j).group);
  }
}

TEST_CASE("serial and parallel T grids agree") {
  for (const auto& f : oracle::sample_fibres()) {
    std::vector<ChowComplexRow> rows;
    for (int j = 0; j <= f.d; ++j) rows.push_back(build_complex(f, j));
    auto s = kernels::t_group_grid_serial(rows, f.d);
    auto p = kernels::t_group_grid_parallel(rows, f.d);
    REQUIRE(s.size() == p.size());
    for (std::size_t c = 0; c < s.size(); ++c) {
      CHECK(s[c].group == p[c].group);
      CHECK(s[c].lift == p[c].lift);
      CHECK(s[c].projection == p[c].projection);
    }
  }
}

TEST_CASE("fibre json round trip and torsion echo") {
  for (const auto& f : oracle::sample_fibres()) {
    auto j = fibre_to_json(f);
    auto back = fibre_from_json(j);
    CHECK(back.n == f.n);
    CHECK(back.restrictions == f.restrictions);
    CHECK(back.gysin == f.gysin);
    CHECK(fibre_to_json(back) == j);
  }
  auto j = fibre_to_json(ngon_fibre(3));
  j["strata"][0]["torsion"] = nlohmann::json::array({nlohmann::json::array(), nlohmann::json::array({"2", "3"})});
  auto f = fibre_from_json(j);
  CHECK(f.strata.begin()->second.chow[1] == FgAbGroup{1, {6}});
  CHECK(validate(f).empty());
  CHECK(fibre_to_json(f)["strata"][0]["torsion"][1] == nlohmann::json::array({"6"}));
  CHECK(FibreAnalysis(f).t(0, 1).group == FgAbGroup::free(1));

  CHECK_THROWS_AS(fibre_from_json(nlohmann::json::object()), InputInvalid);
  auto bad = fibre_to_json(ngon_fibre(3));
  bad["restrictions"][0]["matrix"] = nlohmann::json::array({nlohmann::json::array({"x"})});
  CHECK_THROWS_AS(fibre_from_json(bad), InputInvalid);
  FibreDescription gap = ngon_fibre(3);
  gap.strata.erase(IndexSet{3});
  CHECK_THROWS_AS(FibreAnalysis{gap}, InputInvalid);
}
