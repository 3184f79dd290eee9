#pragma once

#include <string>

#include <json.hpp>

#include "burnside/burnside_ring.hpp"

namespace burnside {

using json = nlohmann::ordered_json;

/// {"group": spec, "coeffs": [{"class", "num", "den"}, ...]}, nonzero coefficients by class id.
json to_json(const BurnsideElement& x, const std::string& group_spec);
/// Inverse of to_json; the group is rebuilt from its spec.
BurnsideElement burnside_from_json(const json& j, std::size_t cap = default_order_cap);

/// {"group": spec, "orders": [...], "marks": [[...], ...]}
json to_json(const TableOfMarks& t, const GroupPtr& g, const std::string& group_spec);
TableOfMarks marks_from_json(const json& j);

}  // namespace burnside
