#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/gset.hpp"

namespace burnside {

/// Malformed spec text; offset() is the byte where parsing stopped.
class SpecError : public std::invalid_argument {
public:
  SpecError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Group specs:
///   spec := atom | spec "x" atom
///   atom := ("C" | "D" | "S" | "A") INT | "Q8" | "perm:" INT ":[" gen (";" gen)* "]"
///   gen  := "()" | cycle+      cycle := "(" INT (" " INT)* ")"
/// D<n> is the dihedral group of order 2n. Permutation points are 0-based.
struct GroupSpec {
  enum class Kind { cyclic, dihedral, symmetric, alternating, quaternion, perm, product };

  Kind kind = Kind::cyclic;
  int n = 0;
  int degree = 0;
  /// For perm: each generator as a list of cycles.
  std::vector<std::vector<std::vector<int>>> generators;
  std::shared_ptr<const GroupSpec> left, right;
};

GroupSpec parse_group_spec(std::string_view text);
std::string print(const GroupSpec& spec);
/// Throws GroupTooLarge if any intermediate group exceeds `cap`.
GroupPtr build_group(const GroupSpec& spec, std::size_t cap = default_order_cap);
inline GroupPtr group_from_spec(std::string_view text, std::size_t cap = default_order_cap) {
  return build_group(parse_group_spec(text), cap);
}

/// G-set specs: "point" | "regular" | "empty" | "cosets:" INT | "union(" gspec ("," gspec)* ")".
/// cosets:<id> refers to the subgroup class id of the group.
struct GSetSpec {
  enum class Kind { point, regular, empty, cosets, disjoint_union };

  Kind kind = Kind::point;
  int class_id = 0;
  std::vector<GSetSpec> parts;
};

GSetSpec parse_gset_spec(std::string_view text);
std::string print(const GSetSpec& spec);
GSet build_gset(const GSetSpec& spec, const GroupPtr& g);

}  // namespace burnside
