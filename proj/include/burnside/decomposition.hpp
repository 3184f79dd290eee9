#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "burnside/ktheory.hpp"
#include "burnside/report.hpp"

namespace burnside {

/// i_*: K(X^H, H)_H^{N_G(H)} -> K(X, G)_H for one subgroup class H, with its checks.
struct DecompositionEntry {
  int class_id = 0;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  /// Injective, lands in the H-part, and dimensions agree.
  bool iso = false;
  /// The modified restriction (1/|N_G(H)/H|) i^* Res is a two-sided inverse.
  bool inverse_ok = false;
  std::string detail;
};

struct DecompositionReport {
  std::vector<DecompositionEntry> parts;
  std::size_t dim_total = 0;

  std::size_t dim_source_sum() const;
  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// `target` is K(X, G) for the G-set in question.
DecompositionEntry decomposition_map(const KSpacePtr& target, int class_id);
DecompositionEntry decomposition_map(const GSet& x, int class_id);
/// All subgroup classes, sharing one target space.
DecompositionReport decompose(const GSet& x);

struct KCheckOptions {
  int random_samples = 3;
  unsigned seed = 20240917;
  CheckSink sink;
};

/// Mackey (Res_K Ind_H = sum over K\G/H) and projection (Ind Res xi = xi . Ind 1,
/// Ind(Res(xi) eta) = xi Ind(eta)) in K(X|_-, -) for H the given class and every K.
Report verify_mackey_projection(const GSet& x, int class_id, const KCheckOptions& opts = {});
/// The same for every class H.
Report verify_mackey_projection(const GSet& x, const KCheckOptions& opts = {});

/// K(G x_H Y, G) -> K(Y, H): restrict to H, pull back along y -> [1, y].
/// Returns the rank of this map and checks it against both dimensions.
struct InducedSetCheck {
  std::size_t dim_induced = 0;
  std::size_t dim_base = 0;
  std::size_t rank = 0;
  bool passed() const { return dim_induced == dim_base && rank == dim_base; }
};
InducedSetCheck check_induced_set(const GroupPtr& g, const GSet& y);

}  // namespace burnside
