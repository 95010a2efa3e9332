#include <spdlog/spdlog.h>

#include "degen/chowcomplex.hpp"
#include "degen/errors.hpp"
#include "degen/kernels.hpp"

namespace degen {

FibreAnalysis::FibreAnalysis(FibreDescription fibre, const BuildOptions& options, bool parallel)
    : fibre_(std::move(fibre)) {
  auto problems = validate(fibre_, options);
  if (!problems.empty()) {
    std::string msg = "invalid fibre:";
    for (const auto& v : problems) msg += " [" + v.kind + "] " + v.detail + ";";
    throw InputInvalid(msg);
  }
  for (int j = 0; j <= fibre_.d; ++j) rows_.push_back(build_complex(fibre_, j, options));
  t_ = parallel ? kernels::t_group_grid_parallel(rows_, fibre_.d) : kernels::t_group_grid_serial(rows_, fibre_.d);
  spdlog::debug("fibre analysis: n = {}, d = {}, {} T-groups", fibre_.n, fibre_.d, t_.size());
}

const ChowComplexRow& FibreAnalysis::row(int j) const {
  if (j < 0 || j > fibre_.d) throw IndexOutOfRange("row j = " + std::to_string(j) + " outside [0, d]");
  return rows_[static_cast<std::size_t>(j)];
}

const HomologyData& FibreAnalysis::t(int i, int j) const {
  const int d = fibre_.d;
  if (i < -d || i > d || j < 0 || j > d) return empty_;
  return t_[static_cast<std::size_t>((i + d) * (d + 1) + j)];
}

IntMatrix FibreAnalysis::monodromy(int i, int j) const {
  return induced_map(t(i, j), t(i + 2, j - 1), chain_monodromy(fibre_, i, j));
}

IsogenyReport FibreAnalysis::prop2(int i, int j) const {
  if (i < 0) throw IndexOutOfRange("check_prop2 needs i >= 0");
  const HomologyData& src = t(-i, j + i);
  const HomologyData& tgt = t(i, j);
  IntMatrix composite = IntMatrix::identity(src.lift.rows());
  for (int step = 0; step < i; ++step) composite = chain_monodromy(fibre_, -i + 2 * step, j + i - step) * composite;
  IntMatrix induced = induced_map(src, tgt, composite);
  return isogeny_check(free_part(src, tgt, induced), src.group, tgt.group);
}

WeightTable FibreAnalysis::weight_table(int m) const {
  std::vector<std::size_t> graded;
  for (int w = -m; w <= m; ++w) {
    if ((m + w) % 2 != 0) {
      graded.push_back(0);
      continue;
    }
    graded.push_back(t(-w, (m + w) / 2).group.free_rank);
  }
  return make_weight_table(m, -m, m, graded);
}

FgAbGroup t_group(const FibreDescription& fibre, int i, int j) { return FibreAnalysis(fibre).t(i, j).group; }

IntMatrix monodromy_N(const FibreDescription& fibre, int i, int j) { return FibreAnalysis(fibre).monodromy(i, j); }

IsogenyReport check_prop2(const FibreDescription& fibre, int i, int j) { return FibreAnalysis(fibre).prop2(i, j); }

WeightTable weight_table(const FibreDescription& fibre, int m) { return FibreAnalysis(fibre).weight_table(m); }

}  // namespace degen
