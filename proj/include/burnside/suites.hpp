#pragma once

#include <string>
#include <vector>

#include "burnside/gset.hpp"
#include "burnside/report.hpp"

namespace burnside {

struct NamedGSet {
  /// In the G-set spec language: "point", "regular", "cosets:<id>", "union(...)".
  std::string name;
  GSet set;
};

/// point, regular, G/H for every class, and a union of three cosets spaces drawn with `seed`.
std::vector<NamedGSet> sample_gsets(const GroupPtr& g, unsigned seed = 20240917);

enum class Suite { conlon, mackey, ktheory, all };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct SuiteOptions {
  int random_samples = 3;
  unsigned seed = 20240917;
  CheckSink sink;
};

/// Runs the checks of a suite on one group. Check order is fixed.
Report run_suite(const GroupPtr& g, Suite suite, const SuiteOptions& opts = {});

}  // namespace burnside
