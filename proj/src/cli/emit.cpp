#include <sstream>

#include "degen/cli.hpp"

namespace degen::cli {

namespace {

template <class T>
std::string joined(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

std::string markdown(const Report& r) {
  std::ostringstream out;
  out << "# degen report: " << r.mode << "\n\n";
  out << "tool " << r.tool_version << ", schema " << r.schema_version << "\n\n";
  out << "## Input\n\n```json\n" << r.input.dump() << "\n```\n";

  if (!r.tables.empty()) {
    out << "\n## Filtration tables\n";
    for (const auto& t : r.tables) {
      out << "\n### " << t.name << "\n\nlevels, then dim M_w:\n\n```\n";
      out << joined(t.table.weights) << "\n" << joined(t.table.cumulative) << "\n```\n";
    }
  }
  if (!r.t_groups.empty()) {
    out << "\n## T-groups\n\n| i | j | T^i_j |\n|---|---|---|\n";
    for (const auto& t : r.t_groups) out << "| " << t.i << " | " << t.j << " | " << t.group.to_string() << " |\n";
  }
  if (!r.isogenies.empty()) {
    out << "\n## Monodromy isogenies\n\n| map | isogeny | exponent | kernel rank |\n|---|---|---|---|\n";
    for (const auto& e : r.isogenies) {
      out << "| N^" << e.i << ": T^" << -e.i << "_" << e.j + e.i << " -> T^" << e.i << "_" << e.j << " | "
          << (e.verdict.is_isogeny ? "yes" : "no") << " | " << (e.verdict.exponent ? e.verdict.exponent->get_str() : "-")
          << " | " << e.verdict.kernel_rank << " |\n";
    }
  }
  if (!r.jacobians.empty()) {
    out << "\n## Intermediate Jacobians\n\n"
        << "| j | dim J | Tate module | lost (weight:rank) | B_{2j-1} | valuation check |\n|---|---|---|---|---|---|\n";
    for (const auto& e : r.jacobians) {
      std::string lost;
      for (const auto& w : e.lost_dims) lost += (lost.empty() ? "" : ", ") + std::to_string(w.weight) + ":" + std::to_string(w.rank);
      out << "| " << e.j << " | " << e.dim_J << " | " << e.tate_module_dim << " | " << (lost.empty() ? "-" : lost) << " | "
          << e.betti << " | " << (e.valuation_check ? "nondegenerate" : "degenerate") << " |\n";
    }
  }
  if (r.lattice) {
    const auto& l = *r.lattice;
    out << "\n## Relation lattice\n\nrank " << l.rank_r << ", p-adic solution dimension " << l.padic_solution_dim
        << ", coefficient bound " << l.coeff_bound.get_str() << ", precision " << l.precision_used << "\n";
    if (l.basis.rows() > 0) {
      out << "\n```\n";
      for (std::size_t i = 0; i < l.basis.rows(); ++i) out << joined(l.basis.row_vector(i)) << "\n";
      out << "```\n";
    }
  }
  if (!r.serre_tate.empty()) {
    out << "\n## Pairwise isogeny (Serre-Tate)\n\n| curves | isogenous |\n|---|---|\n";
    for (const auto& e : r.serre_tate) out << "| " << e.first << ", " << e.second << " | " << (e.isogenous ? "yes" : "no") << " |\n";
  }
  if (r.ght) {
    const auto& g = *r.ght;
    out << "\n## Enriched monodromy\n\n"
        << "- r = " << g.r << "\n- dim ker N_1 = " << g.ker_N1_dim << "\n- dim ker N'_1 = " << g.ker_N1prime_dim
        << "\n- predicted dim J^2_a = " << g.predicted_dim_J2a << "\n- case: " << to_string(g.ght_case) << " ("
        << to_string(g.status) << ")\n";
  }
  return out.str();
}

}  // namespace

std::string emit(const Report& report, Format format) {
  if (format == Format::Markdown) return markdown(report);
  return to_json(report).dump(2) + "\n";
}

}  // namespace degen::cli
