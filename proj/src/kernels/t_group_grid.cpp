#include "degen/kernels.hpp"

namespace degen::kernels {

namespace {

HomologyData cell(const std::vector<ChowComplexRow>& rows, int d, std::size_t index) {
  int i = static_cast<int>(index / static_cast<std::size_t>(d + 1)) - d;
  int j = static_cast<int>(index % static_cast<std::size_t>(d + 1));
  const ChowComplexRow& row = rows[static_cast<std::size_t>(j)];
  return homology_with_lift(row.differential(i - 1), row.differential(i));
}

}  // namespace

std::vector<HomologyData> t_group_grid_serial(const std::vector<ChowComplexRow>& rows, int d) {
  const std::size_t cells = static_cast<std::size_t>(2 * d + 1) * static_cast<std::size_t>(d + 1);
  std::vector<HomologyData> out(cells);
  for (std::size_t c = 0; c < cells; ++c) out[c] = cell(rows, d, c);
  return out;
}

std::vector<HomologyData> t_group_grid_parallel(const std::vector<ChowComplexRow>& rows, int d) {
  const long cells = static_cast<long>(2 * d + 1) * (d + 1);
  std::vector<HomologyData> out(static_cast<std::size_t>(cells));
  // Each cell writes only its own slot.
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < cells; ++c) out[static_cast<std::size_t>(c)] = cell(rows, d, static_cast<std::size_t>(c));
  return out;
}

}  // namespace degen::kernels
