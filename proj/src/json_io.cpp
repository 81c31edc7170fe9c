#include "hankel/json_io.hpp"

#include <stdexcept>

namespace hankel {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as a string or integer, got " + j.dump());
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json to_json(const RecurrenceCoeffs& c) {
  return {{"s_prefix", to_json(c.s_prefix())},
          {"s_tail", to_json(c.s_tail())},
          {"t_prefix", to_json(c.t_prefix())},
          {"t_tail", to_json(c.t_tail())}};
}

RecurrenceCoeffs coeffs_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("recurrence coefficients must be a JSON object");
  auto prefix = [&](const char* key) {
    return j.contains(key) ? rationals_from_json(j.at(key)) : std::vector<Rational>{};
  };
  return RecurrenceCoeffs(prefix("s_prefix"), rational_from_json(j.at("s_tail")), prefix("t_prefix"),
                          rational_from_json(j.at("t_tail")));
}

std::optional<MomentSequence> moments_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("moments")) return std::nullopt;
  return MomentSequence{rationals_from_json(j.at("moments")), MomentSource::UserSupplied};
}

Json to_json(const IdentityReport& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"lhs", to_json(r.lhs)},
          {"rhs_ratio", to_json(r.rhs_ratio)},
          {"base_det", to_json(r.base_det)},
          {"sign", r.sign},
          {"equal", r.equal}};
}

IdentityReport identity_report_from_json(const Json& j) {
  IdentityReport r;
  r.n = j.at("n").get<std::size_t>();
  r.d = j.at("d").get<std::size_t>();
  r.lhs = rational_from_json(j.at("lhs"));
  r.rhs_ratio = rational_from_json(j.at("rhs_ratio"));
  r.base_det = rational_from_json(j.at("base_det"));
  r.sign = j.at("sign").get<int>();
  r.equal = j.at("equal").get<bool>();
  return r;
}

Json to_json(const RecurrenceSpec& spec) {
  Json out = {{"order", spec.order}, {"c", to_json(spec.c)}, {"validity_start", spec.validity_start}};
  out["window_rule"] = spec.window_rule ? Json(to_string(*spec.window_rule)) : Json(nullptr);
  return out;
}

RecurrenceSpec recurrence_spec_from_json(const Json& j) {
  RecurrenceSpec spec;
  spec.order = j.at("order").get<std::size_t>();
  spec.c = rationals_from_json(j.at("c"));
  spec.validity_start = j.at("validity_start").get<std::size_t>();
  if (j.contains("window_rule") && !j.at("window_rule").is_null()) {
    spec.window_rule = window_rule_from_string(j.at("window_rule").get<std::string>());
  }
  return spec;
}

Json to_json(const DiscreteMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms) atoms.push_back({{"x", to_json(a.x)}, {"w", to_json(a.w)}});
  return {{"atoms", atoms}};
}

DiscreteMeasure measure_from_json(const Json& j) {
  DiscreteMeasure m;
  for (const auto& a : j.at("atoms")) {
    const Rational x = rational_from_json(a.at("x"));
    for (const auto& prev : m.atoms) {
      if (prev.x == x) throw std::invalid_argument("measure: location " + x.str() + " listed twice");
    }
    m.atoms.push_back({x, rational_from_json(a.at("w"))});
  }
  return m;
}

}  // namespace hankel
