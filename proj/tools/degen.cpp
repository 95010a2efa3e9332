#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "degen/cli.hpp"
#include "degen/errors.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw degen::InputInvalid("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw degen::InputInvalid(path + ": " + e.what());
  }
}

void configure_logging() {
  spdlog::set_default_logger(spdlog::stderr_color_mt("degen"));
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("DEGEN_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace degen::cli;
  configure_logging();

  CLI::App app{"Weight-monodromy and intermediate-Jacobian toolkit"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  auto* analyze = app.add_subcommand("analyze", "Run an analysis and print a report");
  analyze->require_subcommand(1);

  AnalysisRequest req;
  std::string p_text, bound_text = "1000000", format = "json", input_path;
  std::vector<std::string> qs;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  };

  auto* tate = analyze->add_subcommand("tate-product", "Product of Tate elliptic curves");
  tate->add_option("--p", p_text, "Residue characteristic");
  tate->add_option("--q", qs, "Tate parameters, integers or a/b")->delimiter(',');
  tate->add_option("--input", input_path, "Product description JSON");
  tate->add_option("--precision", req.precision, "p-adic digits");
  tate->add_option("--coeff-bound", bound_text, "Relation coefficient bound H");
  tate->add_option("--j", req.j, "Intermediate Jacobian index");
  add_format(tate);

  auto* fibre = analyze->add_subcommand("fibre", "Totally degenerate special fibre from JSON");
  fibre->add_option("--input", input_path, "Fibre description JSON")->required();
  fibre->add_option("--degree", req.degree, "Cohomological degree m")->required();
  add_format(fibre);

  auto* ngon = analyze->add_subcommand("ngon", "Cycle of n rational curves");
  ngon->add_option("--n", req.n, "Number of components")->required();
  ngon->add_option("--degree", req.degree, "Cohomological degree m")->required();
  add_format(ngon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tate->parsed()) req.mode = Mode::TateProduct;
    if (fibre->parsed()) req.mode = Mode::Fibre;
    if (ngon->parsed()) req.mode = Mode::Ngon;
    if (!p_text.empty()) req.p = degen::parse_bigint(p_text);
    req.qs = qs;
    req.coeff_bound = degen::parse_bigint(bound_text);
    req.format = format_from_string(format);
    if (!input_path.empty()) req.input = load_json(input_path);
    std::cout << emit(run(req), req.format);
    return 0;
  } catch (const std::exception& e) {
    int code = exit_code_for(e);
    std::cerr << "degen: " << e.what() << "\n";
    if (code == 3) std::cerr << "degen: raise --precision (or lower --coeff-bound) and retry\n";
    return code;
  }
}
