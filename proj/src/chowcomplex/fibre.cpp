#include <algorithm>

#include "degen/chowcomplex.hpp"
#include "degen/errors.hpp"

namespace degen {

namespace {

std::string set_name(const IndexSet& I) {
  std::string s = "{";
  for (std::size_t t = 0; t < I.size(); ++t) s += (t ? "," : "") + std::to_string(I[t]);
  return s + "}";
}

std::string map_name(const char* what, const MapKey& key) {
  return std::string(what) + " " + set_name(std::get<0>(key)) + "->" + set_name(std::get<1>(key)) + " codim " +
         std::to_string(std::get<2>(key));
}

IndexSet without(const IndexSet& J, std::size_t pos) {
  IndexSet I = J;
  I.erase(I.begin() + static_cast<long>(pos));
  return I;
}

}  // namespace

std::size_t FibreDescription::chow_rank(const IndexSet& I, int m) const {
  auto it = strata.find(I);
  if (it == strata.end() || m < 0 || static_cast<std::size_t>(m) >= it->second.chow.size()) return 0;
  return it->second.chow[static_cast<std::size_t>(m)].free_rank;
}

std::vector<IndexSet> FibreDescription::strata_of_size(std::size_t s) const {
  std::vector<IndexSet> out;
  for (const auto& [I, data] : strata)
    if (I.size() == s) out.push_back(I);
  return out;
}

void FibreDescription::add_stratum(IndexSet I, const std::vector<std::size_t>& ranks) {
  StratumData s;
  s.I = I;
  for (std::size_t r : ranks) s.chow.push_back(FgAbGroup::free(r));
  strata[std::move(I)] = std::move(s);
}

std::vector<Violation> validate(const FibreDescription& fibre, const BuildOptions& options) {
  std::vector<Violation> out;
  if (fibre.n < 1 || fibre.d < 0) out.push_back({"dimension", "need n >= 1 and d >= 0"});
  if (fibre.strata.empty()) out.push_back({"dimension", "no strata"});

  for (const auto& [I, data] : fibre.strata) {
    if (I.empty() || !std::is_sorted(I.begin(), I.end()) || std::adjacent_find(I.begin(), I.end()) != I.end()) {
      out.push_back({"index", "index set " + set_name(I) + " is not strictly increasing and nonempty"});
      continue;
    }
    if (I.front() < 1 || I.back() > fibre.n)
      out.push_back({"index", "index set " + set_name(I) + " outside 1.." + std::to_string(fibre.n)});
    if (static_cast<int>(I.size()) > fibre.d + 1)
      out.push_back({"dimension", "stratum " + set_name(I) + " has more than d + 1 indices"});
    std::size_t expect = static_cast<std::size_t>(std::max(0, fibre.d - static_cast<int>(I.size()) + 2));
    if (data.chow.size() != expect)
      out.push_back({"dimension", "stratum " + set_name(I) + " lists " + std::to_string(data.chow.size()) +
                                      " Chow groups, expected " + std::to_string(expect)});
    if (!data.chow.empty() && data.chow[0].free_rank == 0)
      out.push_back({"connected", "stratum " + set_name(I) + " has CH^0 of rank 0"});
    for (std::size_t pos = 0; I.size() > 1 && pos < I.size(); ++pos)
      if (!fibre.strata.count(without(I, pos)))
        out.push_back({"closure", "stratum " + set_name(I) + " present but " + set_name(without(I, pos)) + " missing"});
  }
  for (int c = 1; c <= fibre.n; ++c)
    if (!fibre.strata.count(IndexSet{c})) out.push_back({"closure", "component " + std::to_string(c) + " missing"});

  auto check_maps = [&](const std::map<MapKey, IntMatrix>& maps, const char* what, bool gysin) {
    for (const auto& [key, m] : maps) {
      const auto& [from, to, codim] = key;
      const IndexSet& big = gysin ? from : to;
      const IndexSet& small = gysin ? to : from;
      bool adjacent = big.size() == small.size() + 1 && std::includes(big.begin(), big.end(), small.begin(), small.end());
      if (!adjacent || !fibre.strata.count(from) || !fibre.strata.count(to)) {
        out.push_back({"shape", map_name(what, key) + " does not join adjacent strata"});
        continue;
      }
      std::size_t rows = fibre.chow_rank(to, gysin ? codim + 1 : codim);
      std::size_t cols = fibre.chow_rank(from, codim);
      if (m.rows() != rows || m.cols() != cols)
        out.push_back({"shape", map_name(what, key) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    ", expected " + std::to_string(rows) + "x" + std::to_string(cols)});
    }
  };
  check_maps(fibre.restrictions, "restriction", false);
  check_maps(fibre.gysin, "gysin", true);

  for (const auto& [J, data] : fibre.strata) {
    if (J.size() < 2) continue;
    for (std::size_t pos = 0; pos < J.size(); ++pos) {
      IndexSet I = without(J, pos);
      if (!fibre.strata.count(I)) continue;
      for (int m = 0; m <= fibre.d; ++m) {
        if (fibre.chow_rank(I, m) > 0 && fibre.chow_rank(J, m) > 0 && !fibre.restrictions.count({I, J, m}))
          out.push_back({"missing", map_name("restriction", {I, J, m})});
        if (fibre.chow_rank(J, m) > 0 && fibre.chow_rank(I, m + 1) > 0 && !fibre.gysin.count({J, I, m}))
          out.push_back({"missing", map_name("gysin", {J, I, m})});
      }
    }
  }
  if (!out.empty()) return out;

  for (int j = 0; j <= fibre.d; ++j) {
    try {
      build_complex(fibre, j, options);
    } catch (const CompositionNonzero& e) {
      out.push_back({"d_squared", "row j = " + std::to_string(j) + ": " + e.what()});
    }
  }
  return out;
}

}  // namespace degen
