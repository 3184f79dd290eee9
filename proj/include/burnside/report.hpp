#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace burnside {

/// One named identity check and its outcome.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

using CheckSink = std::function<void(const Check&)>;

/// Ordered list of checks. Optionally streams each check to a sink as it is recorded.
class Report {
public:
  explicit Report(std::string title = {}, CheckSink sink = {}) : title_(std::move(title)), sink_(std::move(sink)) {}

  void add(std::string name, bool passed, std::string detail = {});
  void merge(const Report& other);

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;

  nlohmann::ordered_json to_json() const;

private:
  std::string title_;
  CheckSink sink_;
  std::vector<Check> checks_;
};

}  // namespace burnside
