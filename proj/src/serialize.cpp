#include "dhh/serialize.hpp"

namespace dhh {

void to_json(Json& j, const Rational& x) { j = x.to_string(); }

void from_json(const Json& j, Rational& x) {
  if (!j.is_string()) throw ParseError("rational must be serialized as a string");
  x = Rational::parse(j.get<std::string>());
}

void to_json(Json& j, const LambdaPoly& p) {
  j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(c);
}

void from_json(const Json& j, LambdaPoly& p) {
  if (!j.is_array()) throw ParseError("polynomial must be serialized as an array");
  p = LambdaPoly(j.get<std::vector<Rational>>());
}

Json to_json(const ExactValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

namespace {

Json params_to_json(const std::vector<Param>& params) {
  Json out = Json::object();
  for (const auto& p : params) {
    std::visit([&](const auto& v) { out[p.name] = v; }, p.value);
  }
  return out;
}

}  // namespace

Json to_json(const VerificationReport& report) {
  Json ranges = Json::array();
  for (const auto& r : report.parameter_ranges) {
    ranges.push_back({{"name", r.name}, {"min", r.min}, {"max", r.max}});
  }
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(
        {{"params", params_to_json(f.params)}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
  }
  return Json{{"identity", report.identity},
              {"status", report.passed() ? "pass" : "fail"},
              {"parameter_ranges", ranges},
              {"cases", report.cases},
              {"failures", failures}};
}

Json to_json(const std::vector<VerificationReport>& reports) {
  Json list = Json::array();
  bool pass = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    pass = pass && r.passed();
  }
  return Json{{"status", pass ? "pass" : "fail"}, {"reports", list}};
}

Json to_json(const ZetaPartial& z, long digits) {
  return Json{{"partial_sum", z.sum},
              {"decimal", render_decimal(z.sum, digits)},
              {"last_term", z.last_term},
              {"terms", z.terms}};
}

}  // namespace dhh
