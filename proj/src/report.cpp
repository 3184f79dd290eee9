#include "burnside/report.hpp"

#include <algorithm>

namespace burnside {

void Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back(Check{std::move(name), passed, std::move(detail)});
  if (sink_)
    sink_(checks_.back());
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_)
    add(c.name, c.passed, c.detail);
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title_;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty())
      e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

}  // namespace burnside
