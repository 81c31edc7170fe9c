#pragma once

#include <json.hpp>
#include <optional>
#include <vector>

#include "hankel/heine.hpp"
#include "hankel/identity.hpp"
#include "hankel/recurrence.hpp"

namespace hankel {

using Json = nlohmann::json;

/// Rationals travel as "p/q" strings; plain JSON integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const Json& j);

/// {"s_prefix":[...], "s_tail":"..", "t_prefix":[...], "t_tail":".."}
Json to_json(const RecurrenceCoeffs& c);
RecurrenceCoeffs coeffs_from_json(const Json& j);

/// Optional "moments" array next to the recurrence data, used as user-supplied moments.
std::optional<MomentSequence> moments_from_json(const Json& j);

Json to_json(const IdentityReport& r);
IdentityReport identity_report_from_json(const Json& j);

Json to_json(const RecurrenceSpec& spec);
RecurrenceSpec recurrence_spec_from_json(const Json& j);

/// {"atoms":[{"x":"1","w":"1/2"}, ...]}
Json to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const Json& j);

}  // namespace hankel
