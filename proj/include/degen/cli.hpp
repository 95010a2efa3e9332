#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degen/bigint.hpp"
#include "degen/chowcomplex.hpp"
#include "degen/padics.hpp"
#include "degen/tatemodules.hpp"
#include "degen/weights.hpp"
#include "json.hpp"

namespace degen::cli {

inline constexpr const char* kSchemaVersion = "1";
const char* tool_version();

enum class Mode { TateProduct, Fibre, Ngon };
enum class Format { Json, Markdown };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);
Format format_from_string(const std::string& s);

struct AnalysisRequest {
  Mode mode = Mode::TateProduct;
  // tate-product: either p and qs inline, or `input` holding a product description.
  BigInt p = 0;
  std::vector<std::string> qs;  // integers or a/b
  std::optional<nlohmann::json> input;
  long precision = 64;
  BigInt coeff_bound = 1000000;
  int j = 2;
  // fibre: `input` holds the fibre description. ngon: n.
  int n = 0;
  int degree = 1;
  Format format = Format::Json;
};

// Throws InputInvalid listing every problem found.
void validate(const AnalysisRequest& request);

struct NamedTable {
  std::string name;
  WeightTable table;
  friend bool operator==(const NamedTable&, const NamedTable&) = default;
};

struct TGroupEntry {
  int i = 0;
  int j = 0;
  FgAbGroup group;
  friend bool operator==(const TGroupEntry&, const TGroupEntry&) = default;
};

// N^i : T^{-i}_{j+i} -> T^i_j.
struct IsogenyEntry {
  int i = 0;
  int j = 0;
  IsogenyReport verdict;
  friend bool operator==(const IsogenyEntry&, const IsogenyEntry&) = default;
};

struct JacobianEntry {
  int j = 0;
  std::size_t dim_J = 0;
  std::size_t lambda_rank = 0;
  std::size_t lambda_prime_rank = 0;
  std::size_t tate_module_dim = 0;
  std::size_t betti = 0;
  std::vector<WeightRank> lost_dims;
  std::vector<std::vector<KStarExponent>> pairing;
  bool valuation_check = false;
  friend bool operator==(const JacobianEntry&, const JacobianEntry&) = default;
};

struct SerreTateEntry {
  std::size_t first = 0;  // 1-based curve indices
  std::size_t second = 0;
  bool isogenous = false;
  friend bool operator==(const SerreTateEntry&, const SerreTateEntry&) = default;
};

struct Report {
  std::string schema_version = kSchemaVersion;
  std::string tool_version;
  std::string mode;
  nlohmann::json input;
  std::vector<NamedTable> tables;
  std::vector<TGroupEntry> t_groups;
  std::vector<IsogenyEntry> isogenies;
  std::vector<JacobianEntry> jacobians;
  std::optional<RelationLattice> lattice;
  std::vector<SerreTateEntry> serre_tate;
  std::optional<GhtReport> ght;
  friend bool operator==(const Report&, const Report&) = default;
};

Report run(const AnalysisRequest& request);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

std::string emit(const Report& report, Format format);

// 0 success, 2 invalid input, 3 precision exhausted, 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace degen::cli
