#pragma once

#include <nlohmann/json.hpp>

#include "mmk/fan.hpp"
#include "mmk/gnat.hpp"
#include "mmk/group.hpp"
#include "mmk/lift.hpp"
#include "mmk/mckay.hpp"
#include "mmk/moduli.hpp"

namespace mmk {

using Json = nlohmann::ordered_json;

// rationals serialize as ["num","den"] decimal strings
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j); // also accepts integers and "a/b" strings
Json vec_to_json(const RatVec& v);
RatVec vec_from_json(const Json& j);

Json group_to_json(const AbelianAction& g);
AbelianActionPtr group_from_json(const Json& j);

Json fan_to_json(const Fan& f);
Fan fan_from_json(AbelianActionPtr group, const Json& j);

Json family_to_json(const GnatFamily& f);
RatMat family_matrix_from_json(const Json& j);

Json pattern_support_json(const McKayQuiver& q, const Pattern& p);
Json chart_report_json(const ChartReport& c);
Json quotient_report_json(const Fan& fan, const QuotientFanReport& rep);

RatVec theta_from_json(const Json& j);
RatVec theta_from_string(const std::string& csv);

} // namespace mmk
