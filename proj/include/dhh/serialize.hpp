#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "dhh/identities.hpp"
#include "dhh/lambda_poly.hpp"
#include "dhh/rational.hpp"
#include "dhh/series.hpp"
#include "dhh/zeta.hpp"
#include "json.hpp"

namespace dhh {

using Json = nlohmann::json;

// Rational: "p/q" string. LambdaPoly: array of Rational strings, constant
// term first. Both round-trip exactly.
void to_json(Json& j, const Rational& x);
void from_json(const Json& j, Rational& x);
void to_json(Json& j, const LambdaPoly& p);
void from_json(const Json& j, LambdaPoly& p);

Json to_json(const ExactValue& v);
Json to_json(const VerificationReport& report);
/// {"status": "pass"|"fail", "reports": [...]}
Json to_json(const std::vector<VerificationReport>& reports);
/// {"partial_sum", "decimal", "last_term", "terms"}
Json to_json(const ZetaPartial& z, long digits);

template <typename R>
constexpr const char* ring_name() {
  return std::is_same_v<R, LambdaPoly> ? "lambda-poly" : "rational";
}

/// {"order": N, "ring": "rational"|"lambda-poly", "coeffs": [...]}
template <CoefficientRing R>
Json series_to_json(const TruncatedSeries<R>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c);
  return Json{{"order", s.order()}, {"ring", ring_name<R>()}, {"coeffs", coeffs}};
}

/// Throws ParseError on a schema mismatch (wrong ring, order, or length).
template <CoefficientRing R>
TruncatedSeries<R> series_from_json(const Json& j) {
  try {
    if (j.at("ring").get<std::string>() != ring_name<R>()) throw ParseError("series ring mismatch");
    const long order = j.at("order").get<long>();
    std::vector<R> coeffs = j.at("coeffs").get<std::vector<R>>();
    if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1) {
      throw ParseError("series coefficient count does not match order");
    }
    return TruncatedSeries<R>(std::move(coeffs));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace dhh
