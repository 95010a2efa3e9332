#include <algorithm>

#include "degen/chowcomplex.hpp"
#include "degen/errors.hpp"

namespace degen {

namespace {

BigInt entry(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InputInvalid("matrix entries must be integers or decimal strings");
}

IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows_hint, std::size_t cols_hint) {
  if (!j.is_array()) throw InputInvalid("matrix must be an array of rows");
  if (j.empty()) return IntMatrix(0, cols_hint);
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputInvalid("matrix row must be an array");
    std::vector<BigInt> row;
    for (const auto& x : r) row.push_back(entry(x));
    if (!rows.empty() && row.size() != rows.front().size()) throw InputInvalid("ragged matrix");
    rows.push_back(std::move(row));
  }
  (void)rows_hint;
  return IntMatrix::from_rows(rows, cols_hint);
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

IndexSet index_set(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputInvalid(std::string(what) + " must be an array of component indices");
  IndexSet I;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputInvalid(std::string(what) + " entries must be integers");
    I.push_back(x.get<int>());
  }
  std::sort(I.begin(), I.end());
  return I;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputInvalid(std::string("missing field '") + key + "'");
  return j.at(key);
}

void read_maps(const nlohmann::json& j, const char* key, bool gysin, FibreDescription& f) {
  if (!j.contains(key)) return;
  for (const auto& m : j.at(key)) {
    IndexSet from = index_set(field(m, "from_I"), "from_I");
    IndexSet to = index_set(field(m, "to_J"), "to_J");
    int codim = field(m, "codim").get<int>();
    std::size_t rows = f.chow_rank(to, gysin ? codim + 1 : codim);
    std::size_t cols = f.chow_rank(from, codim);
    IntMatrix mat = matrix_from_json(field(m, "matrix"), rows, cols);
    auto& target = gysin ? f.gysin : f.restrictions;
    if (!target.emplace(MapKey{from, to, codim}, mat).second)
      throw InputInvalid(std::string("duplicate ") + key + " entry");
  }
}

void write_maps(const std::map<MapKey, IntMatrix>& maps, nlohmann::json& out) {
  out = nlohmann::json::array();
  for (const auto& [key, m] : maps)
    out.push_back({{"from_I", std::get<0>(key)}, {"to_J", std::get<1>(key)}, {"codim", std::get<2>(key)},
                   {"matrix", matrix_to_json(m)}});
}

}  // namespace

FibreDescription fibre_from_json(const nlohmann::json& j) {
  FibreDescription f;
  f.n = field(j, "n").get<int>();
  f.d = field(j, "d").get<int>();
  const auto& strata = field(j, "strata");
  if (!strata.is_array() || strata.empty()) throw InputInvalid("'strata' must be a nonempty array");
  for (const auto& s : strata) {
    StratumData data;
    data.I = index_set(field(s, "I"), "I");
    const auto& ranks = field(s, "chow_ranks");
    std::vector<std::vector<BigInt>> torsion(ranks.size());
    if (s.contains("torsion")) {
      const auto& t = s.at("torsion");
      if (!t.is_array() || t.size() != ranks.size()) throw InputInvalid("'torsion' must list one array per codimension");
      for (std::size_t m = 0; m < t.size(); ++m)
        for (const auto& x : t[m]) torsion[m].push_back(entry(x));
    }
    for (std::size_t m = 0; m < ranks.size(); ++m) {
      long r = ranks[m].get<long>();
      if (r < 0) throw InputInvalid("negative Chow rank");
      data.chow.push_back(FgAbGroup::from_cyclic_orders(static_cast<std::size_t>(r), torsion[m]));
    }
    if (s.contains("labels")) data.labels = s.at("labels").get<std::vector<std::vector<std::string>>>();
    if (!f.strata.emplace(data.I, data).second) throw InputInvalid("duplicate stratum");
  }
  read_maps(j, "restrictions", false, f);
  read_maps(j, "gysin", true, f);
  return f;
}

nlohmann::json fibre_to_json(const FibreDescription& f) {
  nlohmann::json j;
  j["n"] = f.n;
  j["d"] = f.d;
  j["strata"] = nlohmann::json::array();
  for (const auto& [I, data] : f.strata) {
    nlohmann::json s;
    s["I"] = I;
    std::vector<std::size_t> ranks;
    nlohmann::json torsion = nlohmann::json::array();
    bool any_torsion = false;
    for (const auto& g : data.chow) {
      ranks.push_back(g.free_rank);
      nlohmann::json t = nlohmann::json::array();
      for (const auto& x : g.torsion) t.push_back(to_decimal(x));
      any_torsion = any_torsion || !g.torsion.empty();
      torsion.push_back(t);
    }
    s["chow_ranks"] = ranks;
    if (any_torsion) s["torsion"] = torsion;
    if (!data.labels.empty()) s["labels"] = data.labels;
    j["strata"].push_back(s);
  }
  write_maps(f.restrictions, j["restrictions"]);
  write_maps(f.gysin, j["gysin"]);
  return j;
}

}  // namespace degen
