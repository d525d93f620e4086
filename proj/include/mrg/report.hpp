#pragma once

#include <string>

#include "json.hpp"

#include "mrg/bounds.hpp"
#include "mrg/independence.hpp"
#include "mrg/verify.hpp"

namespace mrg {

// JSON documents use the field names of the report structs. Big integers and
// rationals are strings, log2 values numbers with 6 decimals, term indices
// 1-based.
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const BMReport& r);
nlohmann::json to_json(const ZannierReport& r);
nlohmann::json to_json(const Lemma61Report& r);
nlohmann::json to_json(const C7Report& r);

// Aligned plain-text rendering.
std::string to_text(const BoundReport& r);
std::string to_text(const VerifyReport& r);
std::string to_text(const BMReport& r);
std::string to_text(const ZannierReport& r);
std::string to_text(const Lemma61Report& r);

std::string format_log2(double v);  // fixed, 6 decimals
std::string point_to_string(const IntPoint& n);  // "(1, -2)"

}  // namespace mrg
