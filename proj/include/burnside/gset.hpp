#pragma once

#include <memory>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// A finite set with a left action of a finite group, points 0..m-1.
///
/// Orbits are ordered by their smallest point, which is the orbit's basepoint.
class GSet {
public:
  GSet() = default;
  /// `action[g * size + x]` is g.x. Validates the action axioms.
  GSet(GroupPtr group, int size, std::vector<int> action);

  static GSet point(const GroupPtr& g);
  static GSet empty(const GroupPtr& g);
  static GSet regular(const GroupPtr& g);
  /// Left cosets G/H, ordered by smallest element.
  static GSet cosets(const Subgroup& h);
  static GSet disjoint_union(const std::vector<GSet>& parts);
  static GSet product(const GSet& a, const GSet& b);
  /// The restriction of this action to a subgroup of the acting group.
  GSet restrict_to(const Subgroup& h) const;
  /// G x_H Y for an H-set Y with H a subgroup of g. Point (t, y) is stored at
  /// t_index * |Y| + y, t running over the smallest-element left coset representatives.
  static GSet induced(const GroupPtr& g, const GSet& y);

  const GroupPtr& group() const { return group_; }
  int size() const { return size_; }
  int act(int g, int x) const {
    return action_[static_cast<std::size_t>(g) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(x)];
  }

  std::size_t orbit_count() const { return basepoints_.size(); }
  int orbit_of(int x) const { return orbit_of_[static_cast<std::size_t>(x)]; }
  int basepoint(std::size_t orbit) const { return basepoints_[orbit]; }
  const Subgroup& stabilizer(std::size_t orbit) const { return stabilizers_[orbit]; }
  /// An element t with t . basepoint(orbit_of(x)) = x.
  int transporter(int x) const { return transporter_[static_cast<std::size_t>(x)]; }
  Subgroup point_stabilizer(int x) const;

  /// Labels of the points in the set this one was cut out of (identity by default).
  const std::vector<int>& labels() const { return labels_; }

  /// Coset representatives used by induced(); empty for other constructions.
  const std::vector<int>& induced_coset_reps() const { return coset_reps_; }

private:
  void analyze();

  GroupPtr group_;
  int size_ = 0;
  std::vector<int> action_;
  std::vector<int> orbit_of_;
  std::vector<int> basepoints_;
  std::vector<Subgroup> stabilizers_;
  std::vector<int> transporter_;
  std::vector<int> labels_;
  std::vector<int> coset_reps_;

  friend GSet fixed_points(const GSet& x, const Subgroup& h);
};

/// Points of X fixed by H, as an N_G(H)-set; labels() gives the original points.
GSet fixed_points(const GSet& x, const Subgroup& h);

/// Smallest-element representatives of the left cosets gH.
std::vector<int> left_coset_reps(const Subgroup& h);

/// A map of G-sets over the same group, given by point images.
struct GSetMap {
  std::shared_ptr<const GSet> source;
  std::shared_ptr<const GSet> target;
  std::vector<int> image;

  /// Throws std::invalid_argument if the map is not G-equivariant.
  void check_equivariant() const;
};

}  // namespace burnside
