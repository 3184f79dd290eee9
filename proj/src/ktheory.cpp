#include "burnside/ktheory.hpp"

#include <stdexcept>

#include "burnside/linalg.hpp"

namespace burnside {

std::vector<int> local_indices(const FiniteGroup& small, const FiniteGroup& big) {
  std::vector<int> out(big.order(), -1);
  auto emb = embedding(small, big);
  for (std::size_t i = 0; i < emb.size(); ++i)
    out[static_cast<std::size_t>(emb[i])] = static_cast<int>(i);
  return out;
}

// ---- KSpace

KSpace::KSpace(std::shared_ptr<const GSet> set, int conductor)
    : set_(std::move(set)), conductor_(conductor) {
  if (conductor_ < 1)
    throw std::invalid_argument("conductor must be positive");
  const GSet& x = *set_;
  const FiniteGroup& g = *x.group();
  const auto m = static_cast<std::size_t>(x.size());
  std::size_t dim = 0;
  for (std::size_t o = 0; o < x.orbit_count(); ++o) {
    stab_groups_.push_back(x.stabilizer(o).as_group());
    offsets_.push_back(dim);
    const auto& classes = stab_groups_.back()->conjugacy_classes();
    for (const auto& c : classes)
      samples_.emplace_back(x.basepoint(o), x.stabilizer(o).members()[static_cast<std::size_t>(c.front())]);
    dim += classes.size();
  }
  coord_.assign(g.order() * m, -1);
  for (int e = 0; e < static_cast<int>(g.order()); ++e)
    for (int p = 0; p < x.size(); ++p) {
      if (x.act(e, p) != p)
        continue;
      const auto o = static_cast<std::size_t>(x.orbit_of(p));
      int t = x.transporter(p);
      int s = g.mul(g.inv(t), g.mul(e, t));
      int local = x.stabilizer(o).local_index(s);
      coord_[static_cast<std::size_t>(e) * m + static_cast<std::size_t>(p)] =
          static_cast<int>(offsets_[o]) + stab_groups_[o]->class_of(local);
    }
}

KSpacePtr KSpace::make(GSet set, int conductor) {
  return std::make_shared<const KSpace>(std::make_shared<const GSet>(std::move(set)), conductor);
}

std::size_t KSpace::coordinate(int x, int g) const {
  int c = coord_[static_cast<std::size_t>(g) * static_cast<std::size_t>(set_->size()) + static_cast<std::size_t>(x)];
  if (c < 0)
    throw std::invalid_argument("group element does not fix the point");
  return static_cast<std::size_t>(c);
}

const KSpace::Matrix& KSpace::burnside_matrix(int class_id) const {
  std::lock_guard lock(mutex_);
  if (auto it = action_cache_.find(class_id); it != action_cache_.end())
    return it->second;
  const auto& rep = lattice_of(group())[class_id].representative;
  auto cosets = GSet::cosets(rep);
  const int n = cosets.size();
  auto prod = make(GSet::product(gset(), cosets), conductor_);
  std::vector<int> image(static_cast<std::size_t>(prod->gset().size()));
  for (std::size_t p = 0; p < image.size(); ++p)
    image[p] = static_cast<int>(p) / n;
  auto self = shared_from_this();
  KMap pr(prod, self, std::move(image));
  Matrix mat(dim(), std::vector<Rational>(dim()));
  for (std::size_t b = 0; b < dim(); ++b) {
    auto col = pushforward(pr, pullback(pr, KClass::basis(self, b)));
    for (std::size_t r = 0; r < dim(); ++r) {
      const auto& v = col.coords()[r];
      if (!v.is_rational())
        throw std::logic_error("permutation action produced an irrational entry");
      mat[r][b] = v.coeffs().empty() ? Rational(0) : v.coeffs().front();
    }
  }
  return action_cache_.emplace(class_id, std::move(mat)).first->second;
}

// ---- KClass

KClass::KClass(KSpacePtr space)
    : space_(std::move(space)), coords_(space_->dim(), CyclotomicNumber(space_->conductor())) {}

KClass::KClass(KSpacePtr space, std::vector<CyclotomicNumber> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_->dim())
    throw std::invalid_argument("coordinate vector has the wrong length");
  for (const auto& c : coords_)
    if (c.conductor() != space_->conductor())
      throw std::invalid_argument("coordinate over the wrong cyclotomic field");
}

KClass KClass::basis(const KSpacePtr& space, std::size_t i) {
  KClass out(space);
  out.coords_.at(i) = CyclotomicNumber(space->conductor(), 1);
  return out;
}

KClass KClass::one(const KSpacePtr& space) {
  KClass out(space);
  for (auto& c : out.coords_)
    c = CyclotomicNumber(space->conductor(), 1);
  return out;
}

KClass KClass::from_pairs(const KSpacePtr& space, const std::function<CyclotomicNumber(int, int)>& f) {
  KClass out(space);
  for (std::size_t i = 0; i < space->dim(); ++i) {
    auto [x, g] = space->sample(i);
    out.coords_[i] = f(x, g);
  }
  return out;
}

KClass KClass::from_characters(const KSpacePtr& space, const std::vector<ClassFunction>& chars) {
  if (chars.size() != space->orbit_count())
    throw std::invalid_argument("need one class function per orbit");
  KClass out(space);
  for (std::size_t o = 0; o < chars.size(); ++o) {
    if (chars[o].group() != space->stabilizer_group(o) || chars[o].conductor() != space->conductor())
      throw std::invalid_argument("class function is not on the orbit stabilizer");
    for (std::size_t c = 0; c < chars[o].values().size(); ++c)
      out.coords_[space->offset(o) + c] = chars[o].values()[c];
  }
  return out;
}

ClassFunction KClass::character(std::size_t orbit) const {
  const auto& sg = space_->stabilizer_group(orbit);
  const auto n = sg->conjugacy_classes().size();
  auto first = coords_.begin() + static_cast<std::ptrdiff_t>(space_->offset(orbit));
  return ClassFunction(sg, std::vector<CyclotomicNumber>(first, first + static_cast<std::ptrdiff_t>(n)));
}

bool KClass::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero())
      return false;
  return true;
}

static void require_same(const KClass& a, const KClass& b) {
  if (a.space() != b.space())
    throw std::invalid_argument("K-classes live in different spaces");
}

KClass& KClass::operator+=(const KClass& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] += o.coords_[i];
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] -= o.coords_[i];
  return *this;
}

KClass& KClass::operator*=(const KClass& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] *= o.coords_[i];
  return *this;
}

KClass& KClass::operator*=(const Rational& r) {
  for (auto& c : coords_)
    c *= r;
  return *this;
}

KClass& KClass::operator*=(const CyclotomicNumber& s) {
  for (auto& c : coords_)
    c *= s;
  return *this;
}

bool operator==(const KClass& a, const KClass& b) {
  return a.space_ == b.space_ && a.coords_ == b.coords_;
}

// ---- maps

KMap::KMap(KSpacePtr source, KSpacePtr target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (source_->conductor() != target_->conductor())
    throw std::invalid_argument("map between spaces over different fields");
  GSetMap{source_->gset_ptr(), target_->gset_ptr(), image_}.check_equivariant();
  const GSet& x = target_->gset();
  fibers_.resize(x.orbit_count());
  for (std::size_t y = 0; y < image_.size(); ++y) {
    int p = image_[y];
    auto o = static_cast<std::size_t>(x.orbit_of(p));
    if (x.basepoint(o) == p)
      fibers_[o].push_back(static_cast<int>(y));
  }
}

KClass pullback(const KMap& f, const KClass& xi) {
  if (xi.space() != f.target())
    throw std::invalid_argument("pullback of a class from another space");
  return KClass::from_pairs(f.source(), [&](int y, int g) {
    return xi.at(f.image()[static_cast<std::size_t>(y)], g);
  });
}

KClass pushforward(const KMap& f, const KClass& eta) {
  if (eta.space() != f.source())
    throw std::invalid_argument("pushforward of a class from another space");
  const auto& target = f.target();
  const GSet& y = f.source()->gset();
  std::vector<CyclotomicNumber> coords(target->dim(), CyclotomicNumber(target->conductor()));
  for (std::size_t i = 0; i < target->dim(); ++i) {
    auto [x, g] = target->sample(i);
    for (int p : f.fiber(static_cast<std::size_t>(target->gset().orbit_of(x))))
      if (y.act(g, p) == p)
        coords[i] += eta.at(p, g);
  }
  return KClass(target, std::move(coords));
}

KMap compose(const KMap& g, const KMap& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("maps are not composable");
  std::vector<int> image(f.image().size());
  for (std::size_t i = 0; i < image.size(); ++i)
    image[i] = g.image()[static_cast<std::size_t>(f.image()[i])];
  return KMap(f.source(), g.target(), std::move(image));
}

// ---- Burnside module

KClass burnside_action(const BurnsideElement& b, const KClass& xi) {
  const auto& space = xi.space();
  if (b.group() != space->group())
    throw std::invalid_argument("Burnside element of another group");
  std::vector<CyclotomicNumber> out(space->dim(), CyclotomicNumber(space->conductor()));
  for (std::size_t c = 0; c < b.coeffs().size(); ++c) {
    if (b.coeffs()[c].is_zero())
      continue;
    const auto& m = space->burnside_matrix(static_cast<int>(c));
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t k = 0; k < out.size(); ++k)
        if (!m[r][k].is_zero() && !xi.coords()[k].is_zero())
          out[r] += xi.coords()[k] * (m[r][k] * b.coeffs()[c]);
  }
  return KClass(space, std::move(out));
}

KClass h_part_k(const KClass& xi, int class_id) {
  return burnside_action(conlon_idempotents(xi.space()->group())[class_id], xi);
}

std::size_t part_dimension(const KSpacePtr& space, int class_id) {
  std::vector<std::vector<CyclotomicNumber>> rows;
  for (std::size_t b = 0; b < space->dim(); ++b)
    rows.push_back(h_part_k(KClass::basis(space, b), class_id).coords());
  return matrix_rank(std::move(rows));
}

// ---- change of group

namespace {

void require_restriction(const KSpace& big, const KSpace& small) {
  if (big.gset().size() != small.gset().size() || big.conductor() != small.conductor())
    throw std::invalid_argument("spaces do not share a carrier");
  auto emb = embedding(*small.group(), *big.group());
  for (int s : small.group()->small_generators())
    for (int p = 0; p < small.gset().size(); ++p)
      if (small.gset().act(s, p) != big.gset().act(emb[static_cast<std::size_t>(s)], p))
        throw std::invalid_argument("subgroup action is not the restricted action");
}

}  // namespace

KClass restrict_k(const KSpacePtr& target, const KClass& xi) {
  const auto& source = xi.space();
  if (target == source)
    return xi;
  require_restriction(*source, *target);
  auto emb = embedding(*target->group(), *source->group());
  return KClass::from_pairs(target, [&](int x, int l) { return xi.at(x, emb[static_cast<std::size_t>(l)]); });
}

Induction::Induction(KSpacePtr source, KSpacePtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  require_restriction(*target_, *source_);
  induced_ = KSpace::make(GSet::induced(target_->group(), source_->gset()), target_->conductor());
  const auto& reps = induced_->gset().induced_coset_reps();
  const int ny = source_->gset().size();
  std::vector<int> image(static_cast<std::size_t>(induced_->gset().size()));
  for (std::size_t j = 0; j < reps.size(); ++j)
    for (int y = 0; y < ny; ++y)
      image[j * static_cast<std::size_t>(ny) + static_cast<std::size_t>(y)] = target_->gset().act(reps[j], y);
  map_ = std::make_unique<KMap>(induced_, target_, std::move(image));
  to_source_ = local_indices(*source_->group(), *target_->group());
}

KClass Induction::lift(const KClass& xi) const {
  if (xi.space() != source_)
    throw std::invalid_argument("induction of a class from another space");
  const auto& reps = induced_->gset().induced_coset_reps();
  const int ny = source_->gset().size();
  const FiniteGroup& k = *target_->group();
  return KClass::from_pairs(induced_, [&](int p, int e) {
    int t = reps[static_cast<std::size_t>(p / ny)];
    int l = to_source_[static_cast<std::size_t>(k.mul(k.inv(t), k.mul(e, t)))];
    return xi.at(p % ny, l);
  });
}

KClass induce_k(const KSpacePtr& target, const KClass& xi) { return Induction(xi.space(), target)(xi); }

KClass conjugate_k(const GSet& ambient, int g, const KSpacePtr& target, const KClass& xi) {
  const FiniteGroup& G = *ambient.group();
  const auto& source = xi.space();
  if (source->gset().size() != ambient.size() || target->gset().size() != ambient.size())
    throw std::invalid_argument("spaces are not restrictions of the ambient G-set");
  auto emb = embedding(*target->group(), G);
  auto back = local_indices(*source->group(), G);
  const int gi = G.inv(g);
  return KClass::from_pairs(target, [&](int x, int k) {
    int l = back[static_cast<std::size_t>(G.conj(gi, emb[static_cast<std::size_t>(k)]))];
    if (l < 0)
      throw std::invalid_argument("target group is not the conjugate subgroup");
    return xi.at(ambient.act(gi, x), l);
  });
}

KClass random_kclass(const KSpacePtr& space, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 2);
  const int n = space->conductor();
  std::vector<CyclotomicNumber> coords;
  for (std::size_t i = 0; i < space->dim(); ++i) {
    std::vector<Rational> c;
    for (long j = 0; j < euler_phi(n); ++j)
      c.emplace_back(num(rng), den(rng));
    coords.emplace_back(n, std::move(c));
  }
  return KClass(space, std::move(coords));
}

}  // namespace burnside
