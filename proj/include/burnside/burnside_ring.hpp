#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/lattice.hpp"
#include "burnside/rational.hpp"
#include "burnside/report.hpp"

namespace burnside {

/// Integer ghost-map matrix: entry (H, K) is |(G/H)^K|, classes in lattice order.
struct TableOfMarks {
  std::vector<std::vector<long>> rows;

  std::size_t size() const { return rows.size(); }
  long at(int h, int k) const { return rows[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)]; }
};

/// The rational Burnside algebra of one group: basis, structure constants, marks.
class BurnsideRing {
public:
  explicit BurnsideRing(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  std::size_t rank() const { return lattice_->size(); }
  const TableOfMarks& marks() const { return marks_; }

  /// Integer coefficients of <H_i><H_j> in the basis.
  const std::vector<long>& structure_constants(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * rank() + static_cast<std::size_t>(j)];
  }

private:
  GroupPtr group_;
  const SubgroupLattice* lattice_;
  TableOfMarks marks_;
  std::vector<std::vector<long>> products_;
};

using RingPtr = std::shared_ptr<const BurnsideRing>;

/// Shared, memoized ring of a group.
RingPtr burnside_ring(const GroupPtr& g);

/// An element of B(G) tensor Q, coefficients indexed by subgroup class id.
class BurnsideElement {
public:
  BurnsideElement() = default;
  BurnsideElement(RingPtr ring, std::vector<Rational> coeffs);

  static BurnsideElement zero(const RingPtr& ring);
  static BurnsideElement one(const RingPtr& ring);
  static BurnsideElement basis(const RingPtr& ring, int class_id);

  const RingPtr& ring() const { return ring_; }
  const GroupPtr& group() const { return ring_->group(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int id) const { return coeffs_[static_cast<std::size_t>(id)]; }
  bool is_zero() const;

  /// Ghost coordinates: the mark of this virtual G-set at each subgroup class.
  std::vector<Rational> marks() const;

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement& operator*=(const Rational& s);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(BurnsideElement a, const Rational& s) { return a *= s; }
  friend BurnsideElement operator*(const Rational& s, BurnsideElement a) { return a *= s; }
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

  /// e.g. "<S3> - <C2> - 1/2<C3> + 1/2<1>", classes named by id: "<3> - <1> ...".
  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Rational> coeffs_;
};

/// <H_i><H_j> through the double coset formula.
BurnsideElement basis_product(const RingPtr& ring, int i, int j);

TableOfMarks table_of_marks(const GroupPtr& g);

/// Induction B(sub) -> B(super); `sub` must be a subgroup of `super`.
BurnsideElement induce(const GroupPtr& super, const BurnsideElement& x);
/// Restriction B(super) -> B(sub).
BurnsideElement restrict(const GroupPtr& sub, const BurnsideElement& x);
/// Conjugation B(L) -> B(g L g^-1) by element g of `ambient`.
BurnsideElement conjugate(const GroupPtr& ambient, int g, const BurnsideElement& x);

inline BurnsideElement induce(const Subgroup& h, const BurnsideElement& x) { return induce(h.parent(), x); }
inline BurnsideElement restrict(const Subgroup& h, const BurnsideElement& x) { return restrict(h.as_group(), x); }

/// A complete family of orthogonal idempotents, one per subgroup class.
struct IdempotentFamily {
  RingPtr ring;
  std::vector<BurnsideElement> idempotents;

  const BurnsideElement& operator[](int id) const { return idempotents[static_cast<std::size_t>(id)]; }
  /// u_G, the generator of the tautological part.
  const BurnsideElement& section() const { return idempotents.back(); }
  std::size_t size() const { return idempotents.size(); }
};

/// Recursive construction by induction from proper subgroups. Memoized per group.
const IdempotentFamily& conlon_idempotents(const GroupPtr& g);
/// Independent route: u_H is the element whose mark vector is the unit vector at H.
IdempotentFamily ghost_idempotents(const GroupPtr& g);

/// x * u_H
BurnsideElement h_part(const BurnsideElement& x, int class_id);

struct ConlonOptions {
  /// Random samples per identity for the Mackey and projection checks.
  int random_samples = 3;
  unsigned seed = 20240917;
  CheckSink sink;
};

/// Exact verification of the idempotent family and of the induction/restriction laws.
Report verify_conlon(const GroupPtr& g, const ConlonOptions& opts = {});

/// Random element with small rational coefficients.
BurnsideElement random_element(const RingPtr& ring, std::mt19937& rng);

/// Solve lower-triangular table-of-marks systems: the element with the given mark vector.
BurnsideElement from_marks(const RingPtr& ring, const std::vector<Rational>& marks);

}  // namespace burnside
