#include "burnside/burnside_ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

std::vector<long> structure_row(const SubgroupLattice& lat, int i, int j) {
  const auto& a = lat[i].representative;
  const auto& b = lat[j].representative;
  std::vector<long> out(lat.size(), 0);
  for (int g : double_cosets(a, b))
    ++out[static_cast<std::size_t>(lat.class_of(a.intersect(b.conjugate(g))))];
  return out;
}

// Linear maps between Burnside rings, cached per ordered pair of groups.
using Matrix = std::vector<std::vector<long>>;

struct PairKey {
  const FiniteGroup* a;
  const FiniteGroup* b;
  int g;
  auto operator<=>(const PairKey&) const = default;
};

class MatrixCache {
public:
  template <class Build>
  const Matrix& get(PairKey key, Build&& build) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end())
        return *it->second;
    }
    auto m = std::make_unique<Matrix>(build());
    std::lock_guard lock(mutex_);
    auto [it, _] = cache_.emplace(key, std::move(m));
    return *it->second;
  }

private:
  std::mutex mutex_;
  std::map<PairKey, std::unique_ptr<Matrix>> cache_;
};

MatrixCache& induction_cache() {
  static MatrixCache c;
  return c;
}
MatrixCache& restriction_cache() {
  static MatrixCache c;
  return c;
}

// Column c: image of the basis class c of B(sub) in B(super).
Matrix induction_matrix(const GroupPtr& sub, const GroupPtr& super) {
  const auto& sl = lattice_of(sub);
  const auto& gl = lattice_of(super);
  Matrix m(sl.size(), std::vector<long>(gl.size(), 0));
  for (std::size_t c = 0; c < sl.size(); ++c) {
    auto k = sl[static_cast<int>(c)].representative.in(super);
    m[c][static_cast<std::size_t>(gl.class_of(k))] = 1;
  }
  return m;
}

// Row c: the sub-set G/K_c decomposed into sub-orbits, in the basis of B(sub).
Matrix restriction_matrix(const GroupPtr& super, const GroupPtr& sub) {
  const auto& gl = lattice_of(super);
  const auto& sl = lattice_of(sub);
  Subgroup h(super, embedding(*sub, *super));
  Matrix m(gl.size(), std::vector<long>(sl.size(), 0));
  for (std::size_t c = 0; c < gl.size(); ++c) {
    const auto& k = gl[static_cast<int>(c)].representative;
    for (int g : double_cosets(h, k)) {
      auto stab = h.intersect(k.conjugate(g));
      std::vector<int> local;
      local.reserve(stab.order());
      for (int x : stab.members())
        local.push_back(h.local_index(x));
      ++m[c][static_cast<std::size_t>(sl.class_of(local))];
    }
  }
  return m;
}

BurnsideElement apply(const Matrix& m, const BurnsideElement& x, const RingPtr& target) {
  std::vector<Rational> out(target->rank());
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (x.coeffs()[c].is_zero())
      continue;
    for (std::size_t d = 0; d < m[c].size(); ++d)
      if (m[c][d] != 0)
        out[d] += x.coeffs()[c] * Rational(m[c][d]);
  }
  return BurnsideElement(target, std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------

BurnsideRing::BurnsideRing(GroupPtr g) : group_(std::move(g)), lattice_(&lattice_of(group_)) {
  marks_ = table_of_marks(group_);
  const auto n = rank();
  products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      products_[i * n + j] = structure_row(*lattice_, static_cast<int>(i), static_cast<int>(j));
      products_[j * n + i] = products_[i * n + j];
    }
}

RingPtr burnside_ring(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<const FiniteGroup*, RingPtr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(g.get()); it != cache.end())
      return it->second;
  }
  auto ring = std::make_shared<const BurnsideRing>(g);
  std::lock_guard lock(mutex);
  return cache.emplace(g.get(), ring).first->second;
}

TableOfMarks table_of_marks(const GroupPtr& g) {
  const auto& lat = lattice_of(g);
  TableOfMarks t;
  t.rows.assign(lat.size(), std::vector<long>(lat.size(), 0));
  for (std::size_t h = 0; h < lat.size(); ++h) {
    const auto& hs = lat[static_cast<int>(h)].representative;
    for (std::size_t k = 0; k < lat.size(); ++k) {
      const auto& ks = lat[static_cast<int>(k)].representative;
      // |(G/H)^K| = #{x : x^-1 K x <= H} / |H|
      long count = 0;
      for (int x = 0; x < static_cast<int>(g->order()); ++x) {
        int xi = g->inv(x);
        bool inside = true;
        for (int m : ks.members())
          if (!hs.contains(g->conj(xi, m))) {
            inside = false;
            break;
          }
        if (inside)
          ++count;
      }
      t.rows[h][k] = count / static_cast<long>(hs.order());
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// BurnsideElement

BurnsideElement::BurnsideElement(RingPtr ring, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_->rank())
    throw std::invalid_argument("coefficient vector does not match the number of subgroup classes");
}

BurnsideElement BurnsideElement::zero(const RingPtr& ring) {
  return BurnsideElement(ring, std::vector<Rational>(ring->rank()));
}

BurnsideElement BurnsideElement::one(const RingPtr& ring) {
  return basis(ring, static_cast<int>(ring->rank()) - 1);
}

BurnsideElement BurnsideElement::basis(const RingPtr& ring, int class_id) {
  auto e = zero(ring);
  e.coeffs_.at(static_cast<std::size_t>(class_id)) = 1;
  return e;
}

bool BurnsideElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

std::vector<Rational> BurnsideElement::marks() const {
  const auto& t = ring_->marks();
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t h = 0; h < coeffs_.size(); ++h) {
    if (coeffs_[h].is_zero())
      continue;
    for (std::size_t k = 0; k <= h; ++k)
      if (t.rows[h][k] != 0)
        out[k] += coeffs_[h] * Rational(t.rows[h][k]);
  }
  return out;
}

static void require_same_ring(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("Burnside elements over different groups");
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  require_same_ring(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  require_same_ring(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(const Rational& s) {
  for (auto& c : coeffs_)
    c *= s;
  return *this;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
  require_same_ring(a, b);
  const auto& ring = *a.ring_;
  const auto n = ring.rank();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j].is_zero())
        continue;
      Rational ab = a.coeffs_[i] * b.coeffs_[j];
      const auto& row = ring.structure_constants(static_cast<int>(i), static_cast<int>(j));
      for (std::size_t k = 0; k < n; ++k)
        if (row[k] != 0)
          out[k] += ab * Rational(row[k]);
    }
  }
  return BurnsideElement(a.ring_, std::move(out));
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  return a.group() == b.group() && a.coeffs_ == b.coeffs_;
}

std::string BurnsideElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto& c = coeffs_[i];
    if (c.is_zero())
      continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    if (!mag.is_one())
      os << mag;
    os << '<' << i << '>';
    first = false;
  }
  if (first)
    os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------

BurnsideElement basis_product(const RingPtr& ring, int i, int j) {
  const auto& row = ring->structure_constants(i, j);
  std::vector<Rational> coeffs(row.begin(), row.end());
  return BurnsideElement(ring, std::move(coeffs));
}

BurnsideElement induce(const GroupPtr& super, const BurnsideElement& x) {
  const auto& sub = x.group();
  if (sub == super)
    return x;
  const auto& m = induction_cache().get({sub.get(), super.get(), 0}, [&] { return induction_matrix(sub, super); });
  return apply(m, x, burnside_ring(super));
}

BurnsideElement restrict(const GroupPtr& sub, const BurnsideElement& x) {
  const auto& super = x.group();
  if (sub == super)
    return x;
  const auto& m =
      restriction_cache().get({super.get(), sub.get(), 0}, [&] { return restriction_matrix(super, sub); });
  return apply(m, x, burnside_ring(sub));
}

BurnsideElement conjugate(const GroupPtr& ambient, int g, const BurnsideElement& x) {
  const auto& src = x.group();
  const Perm& gp = ambient->element(g);
  const Perm gi = gp.inverse();
  auto conj_perm = [&](const Perm& p) { return gp * p * gi; };
  std::vector<Perm> image;
  for (const auto& p : src->elements())
    image.push_back(conj_perm(p));
  auto dst = FiniteGroup::from_closed_set(std::move(image));
  if (dst == src && g == FiniteGroup::identity())
    return x;
  const auto& sl = lattice_of(src);
  const auto& dl = lattice_of(dst);
  auto ring = burnside_ring(dst);
  std::vector<Rational> out(ring->rank());
  for (std::size_t c = 0; c < sl.size(); ++c) {
    if (x.coeffs()[c].is_zero())
      continue;
    std::vector<int> members;
    for (int m : sl[static_cast<int>(c)].representative.members())
      members.push_back(*dst->index_of(conj_perm(src->element(m))));
    std::sort(members.begin(), members.end());
    out[static_cast<std::size_t>(dl.class_of(members))] += x.coeffs()[c];
  }
  return BurnsideElement(ring, std::move(out));
}

// ---------------------------------------------------------------------------
// idempotents

const IdempotentFamily& conlon_idempotents(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<const FiniteGroup*, std::unique_ptr<IdempotentFamily>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(g.get()); it != memo.end())
      return *it->second;
  }

  auto ring = burnside_ring(g);
  const auto& lat = ring->lattice();
  auto fam = std::make_unique<IdempotentFamily>();
  fam->ring = ring;
  fam->idempotents.reserve(lat.size());
  auto top = BurnsideElement::one(ring);
  for (std::size_t c = 0; c + 1 < lat.size(); ++c) {
    const auto& cls = lat[static_cast<int>(c)];
    const auto& sub = conlon_idempotents(cls.representative.as_group());
    auto u = induce(g, sub.section()) * Rational(1, cls.nu);
    top -= u;
    fam->idempotents.push_back(std::move(u));
  }
  fam->idempotents.push_back(std::move(top));

  std::lock_guard lock(mutex);
  auto [it, _] = memo.emplace(g.get(), std::move(fam));
  return *it->second;
}

BurnsideElement from_marks(const RingPtr& ring, const std::vector<Rational>& marks) {
  const auto& t = ring->marks();
  const auto n = ring->rank();
  if (marks.size() != n)
    throw std::invalid_argument("mark vector has the wrong length");
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational rhs = marks[k];
    for (std::size_t h = k + 1; h < n; ++h)
      if (t.rows[h][k] != 0)
        rhs -= x[h] * Rational(t.rows[h][k]);
    if (t.rows[k][k] == 0)
      throw std::logic_error("table of marks is singular");
    x[k] = rhs / Rational(t.rows[k][k]);
  }
  return BurnsideElement(ring, std::move(x));
}

IdempotentFamily ghost_idempotents(const GroupPtr& g) {
  auto ring = burnside_ring(g);
  IdempotentFamily fam;
  fam.ring = ring;
  for (std::size_t h = 0; h < ring->rank(); ++h) {
    std::vector<Rational> delta(ring->rank());
    delta[h] = 1;
    fam.idempotents.push_back(from_marks(ring, delta));
  }
  return fam;
}

BurnsideElement h_part(const BurnsideElement& x, int class_id) {
  return x * conlon_idempotents(x.group())[class_id];
}

BurnsideElement random_element(const RingPtr& ring, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Rational> c;
  c.reserve(ring->rank());
  for (std::size_t i = 0; i < ring->rank(); ++i)
    c.emplace_back(num(rng), den(rng));
  return BurnsideElement(ring, std::move(c));
}

// ---------------------------------------------------------------------------
// verification

namespace {

std::string pair_name(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string sides(const BurnsideElement& lhs, const BurnsideElement& rhs) {
  return "lhs=" + lhs.str() + " rhs=" + rhs.str();
}

// Some c with a = c * b, if one exists.
std::optional<Rational> multiplier(const BurnsideElement& a, const BurnsideElement& b) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (b.coeffs()[i].is_zero()) {
      if (!a.coeffs()[i].is_zero())
        return std::nullopt;
      continue;
    }
    Rational r = a.coeffs()[i] / b.coeffs()[i];
    if (c && *c != r)
      return std::nullopt;
    c = r;
  }
  return c;
}

}  // namespace

Report verify_conlon(const GroupPtr& g, const ConlonOptions& opts) {
  Report rep("conlon", opts.sink);
  auto ring = burnside_ring(g);
  const auto& lat = ring->lattice();
  const int n = static_cast<int>(lat.size());
  const auto& fam = conlon_idempotents(g);
  std::mt19937 rng(opts.seed);

  // (a) the family against the ghost oracle, then the idempotent laws.
  {
    auto ghost = ghost_idempotents(g);
    std::string bad;
    for (int h = 0; h < n; ++h)
      if (!(fam[h] == ghost[h]))
        bad += " " + std::to_string(h) + ": " + sides(fam[h], ghost[h]);
    rep.add("oracle-match", bad.empty(), bad);
  }
  {
    auto sum = BurnsideElement::zero(ring);
    for (int h = 0; h < n; ++h)
      sum += fam[h];
    rep.add("completeness", sum == BurnsideElement::one(ring), sum.str());
    std::string bad;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto p = fam[a] * fam[b];
        bool ok = a == b ? p == fam[a] : p.is_zero();
        if (!ok)
          bad += " " + pair_name(a, b) + " " + p.str();
      }
    rep.add("orthogonal-idempotents", bad.empty(), bad);
  }

  // (b) v = Ind(u^H_H) satisfies v v = nu v.
  {
    std::string bad;
    for (int h = 0; h + 1 < n; ++h) {
      const auto& cls = lat[h];
      auto v = induce(g, conlon_idempotents(cls.representative.as_group()).section());
      auto lhs = v * v;
      auto rhs = v * Rational(cls.nu);
      if (!(lhs == rhs))
        bad += " " + std::to_string(h) + ": " + sides(lhs, rhs);
    }
    rep.add("almost-idempotent", bad.empty(), bad);
  }

  // (c) Res^G_H u^G_K is zero unless K is subconjugate to H, else the sum of the
  // idempotents of B(H) over the H-classes of G-conjugates of K inside H.
  {
    std::string bad;
    for (int h = 0; h + 1 < n; ++h) {
      auto hg = lat[h].representative.as_group();
      const auto& hl = lattice_of(hg);
      const auto& hfam = conlon_idempotents(hg);
      for (int k = 0; k < n; ++k) {
        auto res = restrict(hg, fam[k]);
        auto expected = BurnsideElement::zero(burnside_ring(hg));
        std::vector<char> used(hl.size(), 0);
        for (const auto& member : lat[k].class_members) {
          if (!lat[h].representative.contains(member))
            continue;
          int local = hl.class_of(member.in(hg));
          if (!used[static_cast<std::size_t>(local)]) {
            used[static_cast<std::size_t>(local)] = 1;
            expected += hfam[local];
          }
        }
        if (!(res == expected)) {
          bad += " " + pair_name(h, k) + ": " + sides(res, expected);
          if (auto c = multiplier(res, expected))
            bad += " multiplier=" + c->str();
        }
      }
    }
    rep.add("restriction-law", bad.empty(), bad);
  }

  // (d) induction carries the K-part of B(H) into the K-part of B(G).
  {
    std::string bad;
    for (int h = 0; h + 1 < n; ++h) {
      auto hg = lat[h].representative.as_group();
      const auto& hl = lattice_of(hg);
      const auto& hfam = conlon_idempotents(hg);
      for (int k = 0; k < static_cast<int>(hl.size()); ++k) {
        int kg = lat.class_of(hl[k].representative.in(g));
        auto x = induce(g, hfam[k] * random_element(hfam.ring, rng));
        auto proj = x * fam[kg];
        if (!(proj == x))
          bad += " " + pair_name(h, k) + ": " + sides(proj, x);
      }
    }
    rep.add("induction-covariance", bad.empty(), bad);
  }

  // (e) Mackey: Res_K Ind_H x = sum over K\G/H of Ind_{K cap gHg^-1} c_g Res_{H cap g^-1Kg} x.
  {
    std::string bad;
    for (int h = 0; h < n; ++h) {
      const auto& hs = lat[h].representative;
      auto hg = hs.as_group();
      auto hring = burnside_ring(hg);
      for (int k = 0; k < n; ++k) {
        const auto& ks = lat[k].representative;
        auto kg = ks.as_group();
        auto reps = double_cosets(ks, hs);
        for (int s = 0; s < opts.random_samples; ++s) {
          auto x = random_element(hring, rng);
          auto lhs = restrict(kg, induce(g, x));
          auto rhs = BurnsideElement::zero(burnside_ring(kg));
          for (int t : reps) {
            auto inner = hs.intersect(ks.conjugate(g->inv(t))).as_group();
            auto piece = conjugate(g, t, restrict(inner, x));
            rhs += induce(kg, piece);
          }
          if (!(lhs == rhs))
            bad += " " + pair_name(h, k) + ": " + sides(lhs, rhs);
        }
      }
    }
    rep.add("mackey", bad.empty(), bad);
  }

  // (f) projection formula, restriction multiplicative, ghost map multiplicative.
  {
    std::string bad_proj, bad_res, bad_ghost;
    for (int h = 0; h < n; ++h) {
      auto hg = lat[h].representative.as_group();
      auto hring = burnside_ring(hg);
      for (int s = 0; s < opts.random_samples; ++s) {
        auto x = random_element(ring, rng);
        auto x2 = random_element(ring, rng);
        auto y = random_element(hring, rng);
        auto lhs = induce(g, restrict(hg, x) * y);
        auto rhs = x * induce(g, y);
        if (!(lhs == rhs))
          bad_proj += " " + std::to_string(h) + ": " + sides(lhs, rhs);
        auto r1 = restrict(hg, x * x2);
        auto r2 = restrict(hg, x) * restrict(hg, x2);
        if (!(r1 == r2))
          bad_res += " " + std::to_string(h) + ": " + sides(r1, r2);
      }
    }
    for (int s = 0; s < opts.random_samples; ++s) {
      auto x = random_element(ring, rng);
      auto y = random_element(ring, rng);
      auto mx = x.marks(), my = y.marks(), mxy = (x * y).marks();
      for (std::size_t i = 0; i < mxy.size(); ++i)
        if (mxy[i] != mx[i] * my[i])
          bad_ghost += " sample " + std::to_string(s) + " class " + std::to_string(i);
    }
    rep.add("projection-formula", bad_proj.empty(), bad_proj);
    rep.add("restriction-multiplicative", bad_res.empty(), bad_res);
    rep.add("ghost-multiplicative", bad_ghost.empty(), bad_ghost);
  }
  return rep;
}

}  // namespace burnside
