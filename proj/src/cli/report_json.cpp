#include "degen/cli.hpp"
#include "degen/errors.hpp"

namespace degen::cli {

namespace {

using nlohmann::json;

template <class T>
std::string num(T x) {
  return std::to_string(x);
}
std::string num(const BigInt& x) { return x.get_str(); }

BigInt big(const json& j) { return parse_bigint(j.get<std::string>()); }
long lng(const json& j) { return std::stol(j.get<std::string>()); }
std::size_t sz(const json& j) { return std::stoul(j.get<std::string>()); }
int integer(const json& j) { return std::stoi(j.get<std::string>()); }

template <class T, class F>
json array_of(const std::vector<T>& v, F f) {
  json a = json::array();
  for (const auto& x : v) a.push_back(f(x));
  return a;
}

json table_json(const WeightTable& t) {
  auto s = [](auto x) { return num(x); };
  return {{"degree", num(t.degree)},
          {"weights", array_of(t.weights, s)},
          {"graded", array_of(t.graded, s)},
          {"cumulative", array_of(t.cumulative, s)}};
}

WeightTable table_from(const json& j) {
  WeightTable t;
  t.degree = integer(j.at("degree"));
  for (const auto& x : j.at("weights")) t.weights.push_back(integer(x));
  for (const auto& x : j.at("graded")) t.graded.push_back(sz(x));
  for (const auto& x : j.at("cumulative")) t.cumulative.push_back(sz(x));
  return t;
}

json group_json(const FgAbGroup& g) {
  return {{"free_rank", num(g.free_rank)}, {"torsion", array_of(g.torsion, [](const BigInt& x) { return num(x); })}};
}

FgAbGroup group_from(const json& j) {
  FgAbGroup g;
  g.free_rank = sz(j.at("free_rank"));
  for (const auto& x : j.at("torsion")) g.torsion.push_back(big(x));
  return g;
}

json exponent_json(const KStarExponent& k) {
  return array_of(k.exps, [](const BigRational& x) { return x.get_str(); });
}

KStarExponent exponent_from(const json& j) {
  KStarExponent k;
  for (const auto& x : j) k.exps.emplace_back(x.get<std::string>());
  for (auto& x : k.exps) x.canonicalize();
  return k;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(array_of(m.row_vector(r), [](const BigInt& x) { return num(x); }));
  return rows;
}

IntMatrix matrix_from(const json& j, std::size_t cols) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : j) {
    rows.emplace_back();
    for (const auto& x : r) rows.back().push_back(big(x));
  }
  return IntMatrix::from_rows(rows, cols);
}

}  // namespace

json to_json(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["tool_version"] = r.tool_version;
  j["mode"] = r.mode;
  j["input"] = r.input;
  j["tables"] = array_of(r.tables, [](const NamedTable& t) { return json{{"name", t.name}, {"table", table_json(t.table)}}; });
  j["t_groups"] = array_of(r.t_groups, [](const TGroupEntry& t) {
    return json{{"i", num(t.i)}, {"j", num(t.j)}, {"group", group_json(t.group)}};
  });
  j["isogenies"] = array_of(r.isogenies, [](const IsogenyEntry& e) {
    json v{{"i", num(e.i)},
           {"j", num(e.j)},
           {"is_isogeny", e.verdict.is_isogeny},
           {"kernel_rank", num(e.verdict.kernel_rank)},
           {"exponent", nullptr}};
    if (e.verdict.exponent) v["exponent"] = num(*e.verdict.exponent);
    return v;
  });
  j["jacobians"] = array_of(r.jacobians, [](const JacobianEntry& e) {
    json pairing = json::array();
    for (const auto& row : e.pairing) pairing.push_back(array_of(row, exponent_json));
    return json{{"j", num(e.j)},
                {"dim_J", num(e.dim_J)},
                {"lambda_rank", num(e.lambda_rank)},
                {"lambda_prime_rank", num(e.lambda_prime_rank)},
                {"tate_module_dim", num(e.tate_module_dim)},
                {"betti", num(e.betti)},
                {"lost_dims", array_of(e.lost_dims, [](const WeightRank& w) {
                   return json{{"weight", num(w.weight)}, {"rank", num(w.rank)}};
                 })},
                {"pairing", pairing},
                {"valuation_check", e.valuation_check}};
  });
  j["lattice"] = nullptr;
  if (r.lattice) {
    const auto& l = *r.lattice;
    j["lattice"] = {{"n", num(l.n)},
                    {"rank_r", num(l.rank_r)},
                    {"basis", matrix_json(l.basis)},
                    {"padic_solution_dim", num(l.padic_solution_dim)},
                    {"precision_used", num(l.precision_used)},
                    {"coeff_bound", num(l.coeff_bound)}};
  }
  j["serre_tate"] = array_of(r.serre_tate, [](const SerreTateEntry& e) {
    return json{{"first", num(e.first)}, {"second", num(e.second)}, {"isogenous", e.isogenous}};
  });
  j["ght"] = nullptr;
  if (r.ght) {
    const auto& g = *r.ght;
    j["ght"] = {{"r", num(g.r)},
                {"ker_N1_dim", num(g.ker_N1_dim)},
                {"ker_N1prime_dim", num(g.ker_N1prime_dim)},
                {"degenerate_in_kernel", num(g.degenerate_in_kernel)},
                {"predicted_dim_J2a", num(g.predicted_dim_J2a)},
                {"case", to_string(g.ght_case)},
                {"status", to_string(g.status)},
                {"coeff_bound", num(g.coeff_bound)},
                {"precision", num(g.precision)}};
  }
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<std::string>();
    if (r.schema_version != kSchemaVersion) throw InputInvalid("unsupported schema_version " + r.schema_version);
    r.tool_version = j.at("tool_version").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.input = j.at("input");
    for (const auto& t : j.at("tables")) r.tables.push_back({t.at("name").get<std::string>(), table_from(t.at("table"))});
    for (const auto& t : j.at("t_groups")) r.t_groups.push_back({integer(t.at("i")), integer(t.at("j")), group_from(t.at("group"))});
    for (const auto& e : j.at("isogenies")) {
      IsogenyEntry x{integer(e.at("i")), integer(e.at("j")), {}};
      x.verdict.is_isogeny = e.at("is_isogeny").get<bool>();
      x.verdict.kernel_rank = sz(e.at("kernel_rank"));
      if (!e.at("exponent").is_null()) x.verdict.exponent = big(e.at("exponent"));
      r.isogenies.push_back(x);
    }
    for (const auto& e : j.at("jacobians")) {
      JacobianEntry x;
      x.j = integer(e.at("j"));
      x.dim_J = sz(e.at("dim_J"));
      x.lambda_rank = sz(e.at("lambda_rank"));
      x.lambda_prime_rank = sz(e.at("lambda_prime_rank"));
      x.tate_module_dim = sz(e.at("tate_module_dim"));
      x.betti = sz(e.at("betti"));
      for (const auto& w : e.at("lost_dims")) x.lost_dims.push_back({integer(w.at("weight")), sz(w.at("rank"))});
      for (const auto& row : e.at("pairing")) {
        x.pairing.emplace_back();
        for (const auto& cell : row) x.pairing.back().push_back(exponent_from(cell));
      }
      x.valuation_check = e.at("valuation_check").get<bool>();
      r.jacobians.push_back(std::move(x));
    }
    if (!j.at("lattice").is_null()) {
      const auto& l = j.at("lattice");
      RelationLattice lat;
      lat.n = sz(l.at("n"));
      lat.rank_r = sz(l.at("rank_r"));
      lat.basis = matrix_from(l.at("basis"), lat.n);
      lat.padic_solution_dim = sz(l.at("padic_solution_dim"));
      lat.precision_used = lng(l.at("precision_used"));
      lat.coeff_bound = big(l.at("coeff_bound"));
      r.lattice = lat;
    }
    for (const auto& e : j.at("serre_tate"))
      r.serre_tate.push_back({sz(e.at("first")), sz(e.at("second")), e.at("isogenous").get<bool>()});
    if (!j.at("ght").is_null()) {
      const auto& g = j.at("ght");
      GhtReport x;
      x.r = sz(g.at("r"));
      x.ker_N1_dim = sz(g.at("ker_N1_dim"));
      x.ker_N1prime_dim = sz(g.at("ker_N1prime_dim"));
      x.degenerate_in_kernel = sz(g.at("degenerate_in_kernel"));
      x.predicted_dim_J2a = sz(g.at("predicted_dim_J2a"));
      const std::string c = g.at("case").get<std::string>();
      bool found = false;
      for (GhtCase k : {GhtCase::TwoRelations, GhtCase::OneRelationIsogeny, GhtCase::OneRelationExotic, GhtCase::NoRelations})
        if (to_string(k) == c) {
          x.ght_case = k;
          found = true;
        }
      if (!found) throw InputInvalid("unknown GHT case '" + c + "'");
      x.status = g.at("status").get<std::string>() == "proved" ? GhtStatus::Proved : GhtStatus::Conjectural;
      x.coeff_bound = big(g.at("coeff_bound"));
      x.precision = lng(g.at("precision"));
      r.ght = x;
    }
    return r;
  } catch (const json::exception& e) {
    throw InputInvalid(std::string("malformed report: ") + e.what());
  } catch (const std::logic_error& e) {  // stoi and friends
    throw InputInvalid(std::string("malformed report number: ") + e.what());
  }
}

}  // namespace degen::cli
