#pragma once

#include <map>
#include <memory>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// A conjugacy class of subgroups of a finite group.
struct SubgroupClass {
  int id = 0;
  /// Lexicographically minimal member set among the conjugates.
  Subgroup representative;
  /// All distinct conjugates, sorted by member set.
  std::vector<Subgroup> class_members;
  Subgroup normalizer;
  /// |N_G(H)| / |H|
  long nu = 1;

  std::size_t order() const { return representative.order(); }
  bool is_cyclic() const { return representative.is_cyclic(); }
};

/// Subgroups of G up to conjugacy, sorted by (order, canonical member set).
class SubgroupLattice {
public:
  explicit SubgroupLattice(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const SubgroupClass& operator[](int id) const { return classes_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return classes_.size(); }

  /// Id of the class containing the given subgroup of group().
  int class_of(const Subgroup& h) const;
  int class_of(const std::vector<int>& members) const;
  int trivial_class() const { return 0; }
  int whole_class() const { return static_cast<int>(classes_.size()) - 1; }

  /// True iff some G-conjugate of class `small` lies in class `big`.
  bool subconjugate(int small, int big) const;

private:
  GroupPtr group_;
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<std::vector<char>> subconj_;
};

/// Shared, memoized lattice of a group.
const SubgroupLattice& lattice_of(const GroupPtr& g);

/// subgroup_classes from the module contract.
inline const std::vector<SubgroupClass>& subgroup_classes(const GroupPtr& g) { return lattice_of(g).classes(); }

/// Lexicographically smallest conjugate of H.
Subgroup canonical_conjugate(const Subgroup& h);

}  // namespace burnside
