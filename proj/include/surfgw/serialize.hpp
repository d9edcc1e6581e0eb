#ifndef SURFGW_SERIALIZE_HPP
#define SURFGW_SERIALIZE_HPP

#include <json.hpp>

#include "surfgw/laurent.hpp"
#include "surfgw/pt.hpp"

namespace surfgw {

// JSON series format: {"variables": [...], "valuation": v, "precision": p,
// "coefficients": ["num/den", ...]}; precision "exact" for polynomial data.
// Round trips are bit-exact.

nlohmann::json toJson(const QLaurent& a, const std::string& variable = "q");
nlohmann::json toJson(const BiSeries& a);
nlohmann::json toJson(const PLaurent& a);

QLaurent qlaurentFromJson(const nlohmann::json& j);
BiSeries biseriesFromJson(const nlohmann::json& j);
PLaurent plaurentFromJson(const nlohmann::json& j);

} // namespace surfgw

#endif
