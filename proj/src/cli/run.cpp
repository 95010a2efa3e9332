#include <spdlog/spdlog.h>

#include "degen/cli.hpp"
#include "degen/errors.hpp"

#ifndef DEGEN_VERSION
#define DEGEN_VERSION "0.0.0"
#endif

namespace degen::cli {

const char* tool_version() { return DEGEN_VERSION; }

std::string to_string(Mode m) {
  switch (m) {
    case Mode::TateProduct: return "tate-product";
    case Mode::Fibre: return "fibre";
    case Mode::Ngon: return "ngon";
  }
  return "unknown";
}

Mode mode_from_string(const std::string& s) {
  if (s == "tate-product") return Mode::TateProduct;
  if (s == "fibre") return Mode::Fibre;
  if (s == "ngon") return Mode::Ngon;
  throw InputInvalid("unknown mode '" + s + "'");
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "markdown") return Format::Markdown;
  throw InputInvalid("unknown format '" + s + "'");
}

void validate(const AnalysisRequest& r) {
  std::vector<std::string> problems;
  if (r.precision < 16) problems.push_back("precision must be >= 16");
  if (r.coeff_bound < 1) problems.push_back("coeff-bound must be >= 1");
  switch (r.mode) {
    case Mode::TateProduct:
      if (!r.input && (r.p == 0 || r.qs.empty())) problems.push_back("tate-product needs --p and --q, or --input");
      if (r.j < 1) problems.push_back("j must be >= 1");
      break;
    case Mode::Fibre:
      if (!r.input) problems.push_back("fibre needs --input");
      if (r.degree < 0) problems.push_back("degree must be >= 0");
      break;
    case Mode::Ngon:
      if (r.n < 3) problems.push_back("ngon needs n >= 3");
      if (r.degree < 0 || r.degree > 2) problems.push_back("ngon degree must lie in [0, 2]");
      break;
  }
  if (problems.empty()) return;
  std::string msg = "invalid request:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw InputInvalid(msg);
}

namespace {

BigInt json_bigint(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InputInvalid(std::string(what) + " must be an integer or a decimal string");
}

PadicNumber parse_q(const std::string& text, const BigInt& p, long precision) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return PadicNumber::from_integer(p, parse_bigint(text), precision);
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw InputInvalid("zero denominator in q = " + text);
  return PadicNumber::from_rational(p, parse_bigint(text.substr(0, slash)), den, precision);
}

Report fibre_report(const FibreDescription& fibre, int degree, nlohmann::json echo) {
  if (degree > 2 * fibre.d) throw InputInvalid("degree must lie in [0, 2d]");
  FibreAnalysis fa(fibre);
  Report rep;
  rep.input = std::move(echo);
  const int d = fibre.d;
  for (int i = -d; i <= d; ++i)
    for (int j = 0; j <= d; ++j) rep.t_groups.push_back({i, j, fa.t(i, j).group});
  rep.tables.push_back({"H^" + std::to_string(degree), fa.weight_table(degree)});
  for (int i = 1; i <= std::min(degree, d); ++i) {
    if ((degree - i) % 2 != 0) continue;
    const int j = (degree - i) / 2;
    if (j + i > d) continue;
    rep.isogenies.push_back({i, j, fa.prop2(i, j)});
  }
  return rep;
}

Report tate_report(const AnalysisRequest& r) {
  BigInt p = r.p;
  long precision = r.precision;
  BigInt bound = r.coeff_bound;
  std::vector<PadicNumber> qs;
  if (r.input) {
    const auto& in = *r.input;
    if (!in.is_object() || !in.contains("p") || !in.contains("curves")) throw InputInvalid("product description needs 'p' and 'curves'");
    p = json_bigint(in.at("p"), "p");
    if (in.contains("precision")) precision = in.at("precision").get<long>();
    if (in.contains("coeff_bound")) bound = json_bigint(in.at("coeff_bound"), "coeff_bound");
    if (precision < 16) throw InputInvalid("precision must be >= 16");
    if (bound < 1) throw InputInvalid("coeff_bound must be >= 1");
    if (!is_prime(p)) throw InputInvalid("p = " + p.get_str() + " is not prime");
    const auto& curves = in.at("curves");
    if (!curves.is_array()) throw InputInvalid("'curves' must be an array");
    for (const auto& c : curves) {
      if (!c.is_object() || !c.contains("q")) throw InputInvalid("each curve needs a 'q'");
      qs.push_back(padic_from_json(c.at("q"), p, precision));
    }
  } else {
    if (!is_prime(p)) throw InputInvalid("p = " + p.get_str() + " is not prime");
    for (const auto& text : r.qs) qs.push_back(parse_q(text, p, precision));
  }
  const std::size_t n = qs.size();
  if (n < 1 || n > kDefaultMaxCurves) throw InputInvalid("number of curves must lie in [1, " + std::to_string(kDefaultMaxCurves) + "]");
  if (r.j > static_cast<int>(n)) throw InputInvalid("j must lie in [1, n]");
  std::vector<BigInt> valuations;
  for (std::size_t i = 0; i < n; ++i) {
    if (qs[i].is_zero() || qs[i].valuation() <= 0)
      throw InputInvalid("q_" + std::to_string(i + 1) + " must have positive valuation");
    valuations.emplace_back(qs[i].valuation());
  }

  Report rep;
  rep.input = {{"p", p.get_str()},
               {"precision", std::to_string(precision)},
               {"coeff_bound", bound.get_str()},
               {"j", std::to_string(r.j)},
               {"curves", nlohmann::json::array()}};
  for (const auto& q : qs) rep.input["curves"].push_back({{"q", padic_to_json(q)}});

  std::vector<MonodromyModule> vs;
  std::string name;
  for (std::size_t i = 1; i <= n; ++i) {
    vs.push_back(h1_module(i, n));
    name += (i > 1 ? " (x) V_" : "V_") + std::to_string(i);
  }
  rep.tables.push_back({name + " (-1)", filtration_dims(tensor(vs, -1))});
  rep.tables.push_back({"H^" + std::to_string(2 * r.j - 1) + "(" + std::to_string(r.j) + ")",
                        filtration_dims(kunneth(2 * r.j - 1, n, r.j))});

  for (int j = 1; j <= static_cast<int>(n); ++j) {
    JacobianData jd = jacobian(n, j);
    rep.jacobians.push_back({j, jd.dim_J, jd.lambda_rank, jd.lambda_prime_rank, jd.tate_module_dim, jd.betti,
                             jd.lost_dims, jd.pairing, period_pairing_valuation_check(jd, valuations)});
  }
  spdlog::debug("relation search: n = {}, H = {}, N = {}", n, bound.get_str(), precision);
  rep.lattice = relation_lattice(qs, bound, precision);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      rep.serre_tate.push_back({a + 1, b + 1, serre_tate_isogenous(qs[a], qs[b], bound, precision)});
  if (n == 3) rep.ght = enriched_monodromy(*rep.lattice);
  return rep;
}

}  // namespace

Report run(const AnalysisRequest& r) {
  validate(r);
  spdlog::debug("running {} analysis", to_string(r.mode));
  Report rep;
  switch (r.mode) {
    case Mode::TateProduct:
      rep = tate_report(r);
      break;
    case Mode::Fibre: {
      FibreDescription f = fibre_from_json(*r.input);
      rep = fibre_report(f, r.degree, {{"fibre", fibre_to_json(f)}, {"degree", std::to_string(r.degree)}});
      break;
    }
    case Mode::Ngon:
      rep = fibre_report(ngon_fibre(r.n), r.degree, {{"n", std::to_string(r.n)}, {"degree", std::to_string(r.degree)}});
      break;
  }
  rep.mode = to_string(r.mode);
  rep.tool_version = tool_version();
  return rep;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return 3;
  if (dynamic_cast<const InputInvalid*>(&e) || dynamic_cast<const ShapeMismatch*>(&e) ||
      dynamic_cast<const IndexOutOfRange*>(&e) || dynamic_cast<const ZeroInput*>(&e) ||
      dynamic_cast<const NotAUnit*>(&e) || dynamic_cast<const ZeroValuation*>(&e) ||
      dynamic_cast<const nlohmann::json::exception*>(&e))
    return 2;
  return 1;
}

}  // namespace degen::cli
