#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

/// Default bound on the order of any group the library will build.
inline constexpr std::size_t default_order_cap = 200;

/// Order cap in effect: BURNSIDE_MAX_ORDER if set, otherwise the default.
std::size_t order_cap_from_env();

class GroupTooLarge : public std::runtime_error {
public:
  explicit GroupTooLarge(std::size_t cap)
      : std::runtime_error("group too large (order cap " + std::to_string(cap) + ")") {}
};

/// A permutation of {0, ..., n-1} stored as its image list.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  /// Builds a permutation from 0-based disjoint cycles.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Cycle notation without fixed points, e.g. "(0 1 2)(3 4)"; "()" for identity.
  std::string cycle_string() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

private:
  std::vector<int> images_;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite permutation group with an explicit, lexicographically sorted element list.
///
/// Groups are interned by element set: building the same set of permutations twice
/// yields the same object, so pointer equality is group equality.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Perm>& generators() const { return generators_; }
  /// A short generating set, as indices into elements().
  const std::vector<int>& small_generators() const { return small_gens_; }

  static constexpr int identity() { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int power(int a, long k) const;
  int element_order(int a) const { return element_orders_[static_cast<std::size_t>(a)]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  std::optional<int> index_of(const Perm& p) const;

  /// Conjugacy classes of elements, each sorted, ordered by smallest member.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }

  GroupPtr ptr() const { return shared_from_this(); }

  /// Closure of the generators. Throws GroupTooLarge past `cap`.
  static GroupPtr generate(int degree, const std::vector<Perm>& generators,
                           std::size_t cap = default_order_cap);
  /// Interns an element set already known to be closed (e.g. a subgroup).
  static GroupPtr from_closed_set(std::vector<Perm> elements);

  FiniteGroup(int degree, std::vector<Perm> sorted_elements, std::vector<Perm> generators);

private:
  int degree_;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::vector<int> small_gens_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_orders_;
  int exponent_ = 1;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// generate_group from the module contract.
inline GroupPtr generate_group(int degree, const std::vector<Perm>& generators,
                               std::size_t cap = default_order_cap) {
  return FiniteGroup::generate(degree, generators, cap);
}

/// Subgroup of a parent group given by its sorted element indices.
class Subgroup {
public:
  Subgroup() = default;
  /// `members` must be a subgroup; closure is checked.
  Subgroup(GroupPtr parent, std::vector<int> members);

  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);
  /// Subgroup generated by the given element indices.
  static Subgroup generated_by(const GroupPtr& g, const std::vector<int>& gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(int g) const { return mask_[static_cast<std::size_t>(g)] != 0; }
  bool contains(const Subgroup& other) const;
  /// Position of parent element `g` in members(), i.e. its index in as_group().
  int local_index(int g) const;

  /// g H g^-1
  Subgroup conjugate(int g) const;
  Subgroup intersect(const Subgroup& other) const;
  Subgroup normalizer() const;
  bool is_normal() const;
  bool is_cyclic() const;

  /// This subgroup as a group in its own right; element i is parent element members()[i].
  GroupPtr as_group() const;
  /// The same subgroup expressed inside another group that contains it.
  Subgroup in(const GroupPtr& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<char> mask_;
};

/// One representative per double coset H g K, the smallest index in each.
std::vector<int> double_cosets(const Subgroup& h, const Subgroup& k);

/// Element indices of `sub` inside `super` (sub must be contained in super).
std::vector<int> embedding(const FiniteGroup& sub, const FiniteGroup& super);

/// Direct product acting on the disjoint union of the two point sets.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b,
                        std::size_t cap = default_order_cap);

/// True iff p is a prime; 0 and 1 are not.
bool is_prime(long p);

/// True iff H is cyclic and p is 0 or coprime to |H|. Throws on composite p.
bool is_cyclic_coprime(const Subgroup& h, long p);
/// True iff H = P x| C with P a normal p-subgroup and C cyclic of order prime to p.
bool is_p_hypoelementary(const Subgroup& h, long p);

/// Brute-force abstract isomorphism test.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace burnside
