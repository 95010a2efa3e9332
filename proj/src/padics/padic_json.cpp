#include "degen/errors.hpp"
#include "degen/padics.hpp"

namespace degen {

namespace {

BigInt json_integer(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InputInvalid(std::string(what) + " must be an integer or a decimal string");
}

// Plain integers where they fit, decimal strings for primes beyond a long.
nlohmann::json json_number(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

nlohmann::json padic_to_json(const PadicNumber& x) {
  nlohmann::json j;
  j["p"] = json_number(x.prime());
  j["val"] = x.is_zero() ? x.absolute_precision() : x.valuation();
  nlohmann::json digits = nlohmann::json::array();
  if (!x.is_zero()) {
    BigInt u = x.unit(), d;
    for (long i = 0; i < x.precision(); ++i) {
      mpz_fdiv_qr(u.get_mpz_t(), d.get_mpz_t(), u.get_mpz_t(), x.prime().get_mpz_t());
      digits.push_back(json_number(d));
    }
  }
  j["unit_digits"] = digits;
  j["precision"] = x.precision();
  if (x.is_zero()) j["zero"] = true;
  return j;
}

PadicNumber padic_from_json(const nlohmann::json& j, const BigInt& p, long precision) {
  if (j.is_number_integer() || j.is_string()) return PadicNumber::from_integer(p, json_integer(j, "q"), precision);
  if (!j.is_object()) throw InputInvalid("p-adic value must be an integer, a rational object or a digit object");
  if (j.contains("num")) {
    BigInt den = j.contains("den") ? json_integer(j.at("den"), "den") : BigInt(1);
    return PadicNumber::from_rational(p, json_integer(j.at("num"), "num"), den, precision);
  }
  for (const char* key : {"p", "val", "unit_digits", "precision"})
    if (!j.contains(key)) throw InputInvalid(std::string("p-adic digit object lacks '") + key + "'");
  BigInt jp = json_integer(j.at("p"), "p");
  if (jp != p) throw InputInvalid("p-adic value over p = " + jp.get_str() + " where p = " + p.get_str() + " expected");
  if (!is_prime(jp)) throw InputInvalid("p = " + jp.get_str() + " is not a prime");
  long val = j.at("val").get<long>();
  long prec = j.at("precision").get<long>();
  if (j.value("zero", false)) return PadicNumber::zero(p, val);
  const auto& digits = j.at("unit_digits");
  if (!digits.is_array() || static_cast<long>(digits.size()) != prec || prec < 1)
    throw InputInvalid("unit_digits must have exactly 'precision' >= 1 entries");
  BigInt unit = 0;
  BigInt place = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    BigInt d = json_integer(digits[i], "digit");
    if (d < 0 || d >= p) throw InputInvalid("digit out of range [0, p)");
    if (i == 0 && d == 0) throw InputInvalid("leading unit digit must be nonzero");
    unit += place * d;
    place *= p;
  }
  return PadicNumber::from_parts(p, val, unit, prec);
}

}  // namespace degen
