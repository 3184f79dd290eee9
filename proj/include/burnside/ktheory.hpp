#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/class_function.hpp"
#include "burnside/gset.hpp"

namespace burnside {

class KSpace;
using KSpacePtr = std::shared_ptr<const KSpace>;

/// K(X, G) tensor Q(zeta_N) for a finite G-set X.
///
/// A class is a G-invariant function on pairs (x, g) with g.x = x. It is stored
/// as one class function per orbit, on the stabilizer of the orbit's basepoint;
/// coordinates are these values concatenated orbit by orbit.
class KSpace : public std::enable_shared_from_this<KSpace> {
public:
  using Matrix = std::vector<std::vector<Rational>>;

  KSpace(std::shared_ptr<const GSet> set, int conductor);
  static KSpacePtr make(GSet set, int conductor);

  const GSet& gset() const { return *set_; }
  const std::shared_ptr<const GSet>& gset_ptr() const { return set_; }
  const GroupPtr& group() const { return set_->group(); }
  int conductor() const { return conductor_; }
  std::size_t dim() const { return samples_.size(); }

  std::size_t orbit_count() const { return stab_groups_.size(); }
  const GroupPtr& stabilizer_group(std::size_t orbit) const { return stab_groups_[orbit]; }
  std::size_t offset(std::size_t orbit) const { return offsets_[orbit]; }

  /// Coordinate holding the value at (x, g); throws if g does not fix x.
  std::size_t coordinate(int x, int g) const;
  /// The pair (basepoint, element) a coordinate is read at.
  std::pair<int, int> sample(std::size_t i) const { return samples_[i]; }

  /// Matrix of <H_c> acting on coordinates, computed by pulling back to
  /// X x G/H_c and pushing forward again. Cached.
  const Matrix& burnside_matrix(int class_id) const;

private:
  std::shared_ptr<const GSet> set_;
  int conductor_;
  std::vector<GroupPtr> stab_groups_;
  std::vector<std::size_t> offsets_;
  std::vector<int> coord_;
  std::vector<std::pair<int, int>> samples_;

  mutable std::mutex mutex_;
  mutable std::map<int, Matrix> action_cache_;
};

class KClass {
public:
  KClass() = default;
  /// The zero class.
  explicit KClass(KSpacePtr space);
  KClass(KSpacePtr space, std::vector<CyclotomicNumber> coords);

  static KClass basis(const KSpacePtr& space, std::size_t i);
  /// The trivial rank-one bundle.
  static KClass one(const KSpacePtr& space);
  /// Samples f(x, g) at each coordinate; f must be G-invariant.
  static KClass from_pairs(const KSpacePtr& space, const std::function<CyclotomicNumber(int, int)>& f);
  /// One class function per orbit, on the orbit's stabilizer group.
  static KClass from_characters(const KSpacePtr& space, const std::vector<ClassFunction>& chars);

  const KSpacePtr& space() const { return space_; }
  const std::vector<CyclotomicNumber>& coords() const { return coords_; }
  const CyclotomicNumber& at(int x, int g) const { return coords_[space_->coordinate(x, g)]; }
  ClassFunction character(std::size_t orbit) const;
  bool is_zero() const;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  /// Pointwise product: the tensor product of bundles.
  KClass& operator*=(const KClass& o);
  KClass& operator*=(const Rational& r);
  KClass& operator*=(const CyclotomicNumber& c);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(KClass a, const KClass& b) { return a *= b; }
  friend KClass operator*(KClass a, const Rational& r) { return a *= r; }
  friend KClass operator*(KClass a, const CyclotomicNumber& c) { return a *= c; }
  friend bool operator==(const KClass& a, const KClass& b);

private:
  KSpacePtr space_;
  std::vector<CyclotomicNumber> coords_;
};

/// An equivariant map between the carriers of two spaces over the same group.
class KMap {
public:
  /// Throws std::invalid_argument unless the map is equivariant.
  KMap(KSpacePtr source, KSpacePtr target, std::vector<int> image);

  const KSpacePtr& source() const { return source_; }
  const KSpacePtr& target() const { return target_; }
  const std::vector<int>& image() const { return image_; }
  /// Points of the source over the basepoint of each target orbit.
  const std::vector<int>& fiber(std::size_t target_orbit) const { return fibers_[target_orbit]; }

private:
  KSpacePtr source_, target_;
  std::vector<int> image_;
  std::vector<std::vector<int>> fibers_;
};

KClass pullback(const KMap& f, const KClass& xi);
KClass pushforward(const KMap& f, const KClass& eta);
/// g after f.
KMap compose(const KMap& g, const KMap& f);

/// The B(G)-module structure.
KClass burnside_action(const BurnsideElement& b, const KClass& xi);
/// u_H . xi for the idempotent of class `class_id`.
KClass h_part_k(const KClass& xi, int class_id);
/// Rank of the H-part of the whole space.
std::size_t part_dimension(const KSpacePtr& space, int class_id);

/// Res from the space of xi to `target`, a space over a subgroup on the same points.
KClass restrict_k(const KSpacePtr& target, const KClass& xi);

/// Induction K(X|_L, L) -> K(X|_K, K) for L <= K and X carried by both spaces:
/// lift to K x_L X and push forward along [t, x] -> t x.
class Induction {
public:
  Induction(KSpacePtr source, KSpacePtr target);

  KClass operator()(const KClass& xi) const { return pushforward(*map_, lift(xi)); }
  /// The inverse of restriction followed by pullback along x -> [1, x].
  KClass lift(const KClass& xi) const;
  const KSpacePtr& induced_space() const { return induced_; }
  const KMap& action_map() const { return *map_; }

private:
  KSpacePtr source_, target_, induced_;
  std::unique_ptr<KMap> map_;
  std::vector<int> to_source_;
};

KClass induce_k(const KSpacePtr& target, const KClass& xi);

/// mu_g^*: K(X|_L, L) -> K(X|_{gLg^-1}, gLg^-1), (x, k) -> xi(g^-1 x, g^-1 k g).
/// `ambient` is the G-set both spaces are restricted from.
KClass conjugate_k(const GSet& ambient, int g, const KSpacePtr& target, const KClass& xi);

/// Random class with small cyclotomic coordinates.
KClass random_kclass(const KSpacePtr& space, std::mt19937& rng);

/// For each element of big: its index in small, or -1.
std::vector<int> local_indices(const FiniteGroup& small, const FiniteGroup& big);

}  // namespace burnside
