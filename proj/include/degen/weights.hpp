#pragma once

#include <cstddef>
#include <vector>

namespace degen {

// Graded ranks by weight and the cumulative dimensions of the increasing
// filtration M_k = sum_{w <= k} g_w.
struct WeightTable {
  int degree = 0;
  std::vector<int> weights;
  std::vector<std::size_t> graded;
  std::vector<std::size_t> cumulative;

  std::size_t total() const { return cumulative.empty() ? 0 : cumulative.back(); }
  std::size_t graded_at(int w) const {
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] == w) return graded[i];
    return 0;
  }
  friend bool operator==(const WeightTable&, const WeightTable&) = default;
};

// Builds a table over weights [lo, hi] from graded ranks.
inline WeightTable make_weight_table(int degree, int lo, int hi, const std::vector<std::size_t>& graded) {
  WeightTable t;
  t.degree = degree;
  std::size_t running = 0;
  for (int w = lo; w <= hi; ++w) {
    t.weights.push_back(w);
    std::size_t g = graded[static_cast<std::size_t>(w - lo)];
    t.graded.push_back(g);
    running += g;
    t.cumulative.push_back(running);
  }
  return t;
}

}  // namespace degen
