#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "burnside/gset.hpp"
#include "burnside/report.hpp"

namespace burnside {

/// One class H' isomorphic to H: X^{H'} as an N_G(H')-set.
struct InertiaSummand {
  int class_id = 0;
  int fixed_points = 0;
  /// Subgroup class (in G) of each orbit's stabilizer N_G(H') cap G_x, sorted.
  std::vector<int> orbit_types;
};

struct InertiaReport {
  int class_id = 0;
  std::vector<InertiaSummand> summands;

  /// Pairs (class of H', class of orbit stabilizer), sorted.
  std::vector<std::pair<int, int>> orbit_type_multiset() const;
  std::size_t orbit_count() const;
  nlohmann::ordered_json to_json() const;
};

/// Components of the inertia over the subgroup class `class_id`, from fixed points
/// of every class H' abstractly isomorphic to H.
InertiaReport wild_inertia(const GSet& x, int class_id);
/// Same, for an abstract group H; class_id of the result is -1.
InertiaReport wild_inertia(const GSet& x, const FiniteGroup& h);

/// The summand for one chosen subgroup H' (any member of its class).
InertiaSummand inertia_summand(const GSet& x, const Subgroup& h_prime);

/// Same multiset computed from the definition: G-orbits of pairs (x, K) with
/// K <= G_x and K isomorphic to H; type (class of K, class of the pair's stabilizer).
std::vector<std::pair<int, int>> inertia_by_pairs(const GSet& x, int class_id);

/// Compares both routes for every subgroup class.
Report verify_inertia(const GSet& x, CheckSink sink = {});

}  // namespace burnside
