#include "burnside/serialize.hpp"

#include "burnside/spec.hpp"

namespace burnside {

json to_json(const BurnsideElement& x, const std::string& group_spec) {
  json j;
  j["group"] = group_spec;
  auto coeffs = json::array();
  for (std::size_t c = 0; c < x.coeffs().size(); ++c) {
    const auto& r = x.coeffs()[c];
    if (r.is_zero())
      continue;
    json e;
    e["class"] = c;
    e["num"] = r.numerator_str();
    e["den"] = r.denominator_str();
    coeffs.push_back(std::move(e));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

BurnsideElement burnside_from_json(const json& j, std::size_t cap) {
  auto ring = burnside_ring(group_from_spec(j.at("group").get<std::string>(), cap));
  std::vector<Rational> coeffs(ring->rank());
  for (const auto& e : j.at("coeffs")) {
    auto c = e.at("class").get<std::size_t>();
    if (c >= coeffs.size())
      throw std::invalid_argument("coefficient for a class the group does not have");
    coeffs[c] = Rational::parse(e.at("num").get<std::string>() + "/" + e.at("den").get<std::string>());
  }
  return BurnsideElement(ring, std::move(coeffs));
}

json to_json(const TableOfMarks& t, const GroupPtr& g, const std::string& group_spec) {
  json j;
  j["group"] = group_spec;
  auto orders = json::array();
  for (const auto& c : lattice_of(g).classes())
    orders.push_back(c.order());
  j["orders"] = std::move(orders);
  j["marks"] = t.rows;
  return j;
}

TableOfMarks marks_from_json(const json& j) {
  return TableOfMarks{j.at("marks").get<std::vector<std::vector<long>>>()};
}

}  // namespace burnside
