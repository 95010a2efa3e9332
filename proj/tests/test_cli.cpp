#include <doctest.h>

#include "degen/cli.hpp"
#include "degen/errors.hpp"

using namespace degen;
using namespace degen::cli;

namespace {

AnalysisRequest tate(std::vector<std::string> qs, BigInt p = 5) {
  AnalysisRequest r;
  r.mode = Mode::TateProduct;
  r.p = p;
  r.qs = std::move(qs);
  return r;
}

AnalysisRequest ngon(int n, int degree) {
  AnalysisRequest r;
  r.mode = Mode::Ngon;
  r.n = n;
  r.degree = degree;
  return r;
}

const NamedTable& table_named(const Report& r, const std::string& name) {
  for (const auto& t : r.tables)
    if (t.name == name) return t;
  FAIL("no table " << name);
  return r.tables.front();
}

}  // namespace

TEST_CASE("ngon report") {
  Report r = run(ngon(5, 1));
  CHECK(r.mode == "ngon");
  const auto& t = table_named(r, "H^1").table;
  CHECK(t.graded_at(-1) == 1);
  CHECK(t.graded_at(1) == 1);
  REQUIRE(r.isogenies.size() == 1);
  CHECK(r.isogenies[0].verdict.is_isogeny);
  CHECK(*r.isogenies[0].verdict.exponent == 5);
  CHECK(r.t_groups.size() == 6);
}

TEST_CASE("tate product report for (5, 25, 125)") {
  Report r = run(tate({"5", "25", "125"}));
  REQUIRE(r.lattice);
  CHECK(r.lattice->rank_r == 2);
  REQUIRE(r.ght);
  CHECK(r.ght->predicted_dim_J2a == 8);
  CHECK(r.ght->ght_case == GhtCase::TwoRelations);
  REQUIRE(r.jacobians.size() == 3);
  CHECK(r.jacobians[1].j == 2);
  CHECK(r.jacobians[1].dim_J == 9);
  CHECK(r.jacobians[1].valuation_check);
  CHECK(table_named(r, "V_1 (x) V_2 (x) V_3 (-1)").table.cumulative == std::vector<std::size_t>{1, 1, 4, 4, 7, 7, 8});
  CHECK(table_named(r, "H^3(2)").table.cumulative == std::vector<std::size_t>{1, 1, 10, 10, 19, 19, 20});
  CHECK(r.serre_tate.size() == 3);
  for (const auto& e : r.serre_tate) CHECK(e.isogenous);
}

TEST_CASE("tate product from a description with rational q") {
  AnalysisRequest req;
  req.mode = Mode::TateProduct;
  req.input = nlohmann::json{{"p", 7},
                             {"precision", 40},
                             {"coeff_bound", "1000"},
                             {"curves", {{{"q", {{"num", "56"}}}}, {{"q", {{"num", "7"}, {"den", "8"}}}}, {{"q", 49}}}}};
  Report r = run(req);
  REQUIRE(r.ght);
  CHECK(r.ght->r == 1);
  CHECK(r.ght->ght_case == GhtCase::OneRelationExotic);
  CHECK(r.ght->status == GhtStatus::Conjectural);
  CHECK(r.ght->coeff_bound == 1000);
  CHECK(r.ght->precision == 40);
  CHECK(r.input.at("precision") == "40");
}

TEST_CASE("json round trip") {
  for (const auto& req : {tate({"5", "25", "125"}), tate({"10", "35/2"}, 5), tate({"3", "9", "27", "12"}, 3), ngon(4, 1), ngon(6, 2)}) {
    Report r = run(req);
    std::string text = emit(r, Format::Json);
    Report back = report_from_json(nlohmann::json::parse(text));
    CHECK(back == r);
    CHECK(emit(back, Format::Json) == text);
  }
  AnalysisRequest fibre;
  fibre.mode = Mode::Fibre;
  fibre.input = fibre_to_json(ngon_times_p1_fibre(4));
  fibre.degree = 2;
  Report r = run(fibre);
  CHECK(report_from_json(to_json(r)) == r);
}

TEST_CASE("emit is deterministic") {
  for (Format f : {Format::Json, Format::Markdown}) {
    CHECK(emit(run(tate({"5", "25", "125"})), f) == emit(run(tate({"5", "25", "125"})), f));
    CHECK(emit(run(ngon(5, 1)), f) == emit(run(ngon(5, 1)), f));
  }
}

TEST_CASE("markdown carries the filtration rows") {
  std::string md = emit(run(tate({"5", "25", "125"})), Format::Markdown);
  CHECK(md.find("\n1 1 10 10 19 19 20\n") != std::string::npos);
  CHECK(md.find("\n1 1 4 4 7 7 8\n") != std::string::npos);
  CHECK(md.find("\n-3 -2 -1 0 1 2 3\n") != std::string::npos);
}

TEST_CASE("invalid requests") {
  AnalysisRequest empty_fibre;
  empty_fibre.mode = Mode::Fibre;
  empty_fibre.input = nlohmann::json{{"n", 1}, {"d", 1}, {"strata", nlohmann::json::array()}};
  CHECK_THROWS_AS(run(empty_fibre), InputInvalid);
  AnalysisRequest no_input;
  no_input.mode = Mode::Fibre;
  CHECK_THROWS_AS(run(no_input), InputInvalid);
  CHECK_THROWS_AS(run(ngon(2, 1)), InputInvalid);
  CHECK_THROWS_AS(run(tate({"6", "25"})), InputInvalid);  // unit q
  CHECK_THROWS_AS(run(tate({"5", "25"}, 6)), InputInvalid);
  CHECK_THROWS_AS(run(tate({"5", "0"})), InputInvalid);
  auto low = tate({"5", "25"});
  low.precision = 8;
  CHECK_THROWS_AS(run(low), InputInvalid);
  auto big_j = tate({"5", "25"});
  big_j.j = 3;
  CHECK_THROWS_AS(run(big_j), InputInvalid);
  CHECK_THROWS_AS(report_from_json(nlohmann::json{{"schema_version", "1"}}), InputInvalid);
}

TEST_CASE("precision exhaustion surfaces") {
  auto req = tate({"5", "25"});
  req.precision = 16;
  req.coeff_bound = BigInt("1000000000000", 10);
  try {
    run(req);
    FAIL("expected PrecisionExhausted");
  } catch (const std::exception& e) {
    CHECK(exit_code_for(e) == 3);
  }
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(InputInvalid("x")) == 2);
  CHECK(exit_code_for(IndexOutOfRange("x")) == 2);
  CHECK(exit_code_for(PrecisionExhausted("x")) == 3);
  CHECK(exit_code_for(std::runtime_error("x")) == 1);
}
