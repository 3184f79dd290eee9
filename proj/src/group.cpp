#include "burnside/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace burnside {

std::size_t order_cap_from_env() {
  if (const char* env = std::getenv("BURNSIDE_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return default_order_cap;
}

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int x = cyc[i];
      if (x < 0 || x >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(x) + " out of range for degree " +
                                    std::to_string(degree));
      if (used[static_cast<std::size_t>(x)])
        throw std::invalid_argument("point " + std::to_string(x) + " repeated in cycles");
      used[static_cast<std::size_t>(x)] = 1;
      im[static_cast<std::size_t>(x)] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(im));
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start))
      continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first)
        os << ' ';
      os << x;
      first = false;
      x = static_cast<std::size_t>(images_[x]);
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> im(b.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Perm r;
  r.images_ = std::move(im);
  return r;
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

std::mutex registry_mutex;
std::map<std::vector<Perm>, GroupPtr>& registry() {
  static std::map<std::vector<Perm>, GroupPtr> r;
  return r;
}

GroupPtr intern(int degree, std::vector<Perm> sorted, std::vector<Perm> generators) {
  std::lock_guard lock(registry_mutex);
  auto& reg = registry();
  if (auto it = reg.find(sorted); it != reg.end())
    return it->second;
  auto g = std::make_shared<const FiniteGroup>(degree, sorted, std::move(generators));
  reg.emplace(std::move(sorted), g);
  return g;
}

}  // namespace

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> sorted_elements, std::vector<Perm> generators)
    : degree_(degree), elements_(std::move(sorted_elements)), generators_(std::move(generators)) {
  const std::size_t n = elements_.size();
  if (n == 0 || !elements_.front().is_identity())
    throw std::logic_error("group element list must start with the identity");

  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto idx = index_of(elements_[a] * elements_[b]);
      if (!idx)
        throw std::logic_error("element set is not closed under composition");
      table_[a * n + b] = *idx;
    }
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto idx = index_of(elements_[a].inverse());
    if (!idx)
      throw std::logic_error("element set is not closed under inverse");
    inverse_[a] = *idx;
  }
  element_orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    int x = static_cast<int>(a);
    while (x != identity()) {
      x = mul(x, static_cast<int>(a));
      ++k;
    }
    element_orders_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  class_of_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] >= 0)
      continue;
    std::vector<int> cls;
    for (std::size_t g = 0; g < n; ++g)
      cls.push_back(conj(static_cast<int>(g), static_cast<int>(a)));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int c : cls)
      class_of_[static_cast<std::size_t>(c)] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(cls));
  }

  // Greedy short generating set, highest element order first.
  std::vector<int> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return element_orders_[static_cast<std::size_t>(a)] >
                                              element_orders_[static_cast<std::size_t>(b)]; });
  std::vector<char> in_span(n, 0);
  in_span[0] = 1;
  std::size_t span = 1;
  for (int cand : by_order) {
    if (span == n)
      break;
    if (in_span[static_cast<std::size_t>(cand)])
      continue;
    small_gens_.push_back(cand);
    std::deque<int> queue;
    for (std::size_t i = 0; i < n; ++i)
      if (in_span[i])
        queue.push_back(static_cast<int>(i));
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int s : small_gens_) {
        int y = mul(x, s);
        if (!in_span[static_cast<std::size_t>(y)]) {
          in_span[static_cast<std::size_t>(y)] = 1;
          ++span;
          queue.push_back(y);
        }
      }
    }
  }
}

int FiniteGroup::power(int a, long k) const {
  int ord = element_order(a);
  long e = ((k % ord) + ord) % ord;
  int r = identity();
  for (long i = 0; i < e; ++i)
    r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int s : small_gens_)
    for (int t : small_gens_)
      if (mul(s, t) != mul(t, s))
        return false;
  return true;
}

std::optional<int> FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

GroupPtr FiniteGroup::generate(int degree, const std::vector<Perm>& generators, std::size_t cap) {
  if (degree < 1)
    throw std::invalid_argument("group degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));
  std::map<Perm, char> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.emplace(id, 0);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Perm y = x * s;
      if (seen.emplace(y, 0).second) {
        if (seen.size() > cap)
          throw GroupTooLarge(cap);
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> elems;
  elems.reserve(seen.size());
  for (auto& [p, _] : seen)
    elems.push_back(p);
  return intern(degree, std::move(elems), generators);
}

GroupPtr FiniteGroup::from_closed_set(std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty())
    throw std::invalid_argument("empty element set");
  int degree = elements.front().degree();
  return intern(degree, std::move(elements), {});
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_->order(), 0);
  for (int m : members_) {
    if (m < 0 || static_cast<std::size_t>(m) >= parent_->order())
      throw std::invalid_argument("subgroup member index out of range");
    mask_[static_cast<std::size_t>(m)] = 1;
  }
  if (members_.empty() || members_.front() != FiniteGroup::identity())
    throw std::invalid_argument("subgroup must contain the identity");
  if (parent_->order() % members_.size() != 0)
    throw std::invalid_argument("subgroup order does not divide group order");
  for (int a : members_) {
    if (!contains(parent_->inv(a)))
      throw std::invalid_argument("subgroup not closed under inverse");
    for (int b : members_)
      if (!contains(parent_->mul(a, b)))
        throw std::invalid_argument("subgroup not closed under product");
  }
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, {FiniteGroup::identity()}); }

Subgroup Subgroup::generated_by(const GroupPtr& g, const std::vector<int>& gens) {
  std::vector<char> in(g->order(), 0);
  std::vector<int> members{FiniteGroup::identity()};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      int y = g->mul(members[i], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

bool Subgroup::contains(const Subgroup& other) const {
  for (int m : other.members_)
    if (!contains(m))
      return false;
  return true;
}

int Subgroup::local_index(int g) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  if (it == members_.end() || *it != g)
    return -1;
  return static_cast<int>(it - members_.begin());
}

Subgroup Subgroup::conjugate(int g) const {
  std::vector<int> out;
  out.reserve(members_.size());
  for (int m : members_)
    out.push_back(parent_->conj(g, m));
  return Subgroup(parent_, std::move(out));
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  if (other.parent_ != parent_)
    throw std::invalid_argument("intersecting subgroups of different groups");
  std::vector<int> out;
  for (int m : members_)
    if (other.contains(m))
      out.push_back(m);
  return Subgroup(parent_, std::move(out));
}

Subgroup Subgroup::normalizer() const {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(parent_->order()); ++g) {
    bool ok = true;
    for (int m : members_) {
      if (!contains(parent_->conj(g, m))) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.push_back(g);
  }
  return Subgroup(parent_, std::move(out));
}

bool Subgroup::is_normal() const { return normalizer().order() == parent_->order(); }

bool Subgroup::is_cyclic() const {
  for (int m : members_)
    if (static_cast<std::size_t>(parent_->element_order(m)) == members_.size())
      return true;
  return false;
}

GroupPtr Subgroup::as_group() const {
  if (members_.size() == parent_->order())
    return parent_;
  std::vector<Perm> perms;
  perms.reserve(members_.size());
  for (int m : members_)
    perms.push_back(parent_->element(m));
  return FiniteGroup::from_closed_set(std::move(perms));
}

Subgroup Subgroup::in(const GroupPtr& other) const {
  if (other == parent_)
    return *this;
  std::vector<int> out;
  out.reserve(members_.size());
  for (int m : members_) {
    auto idx = other->index_of(parent_->element(m));
    if (!idx)
      throw std::invalid_argument("subgroup is not contained in the target group");
    out.push_back(*idx);
  }
  return Subgroup(other, std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<int> double_cosets(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent())
    throw std::invalid_argument("double cosets of subgroups of different groups");
  const auto& g = *h.parent();
  std::vector<char> marked(g.order(), 0);
  std::vector<int> reps;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (marked[static_cast<std::size_t>(x)])
      continue;
    reps.push_back(x);
    for (int a : h.members())
      for (int b : k.members())
        marked[static_cast<std::size_t>(g.mul(g.mul(a, x), b))] = 1;
  }
  return reps;
}

std::vector<int> embedding(const FiniteGroup& sub, const FiniteGroup& super) {
  std::vector<int> out(sub.order());
  for (std::size_t i = 0; i < sub.order(); ++i) {
    auto idx = super.index_of(sub.element(static_cast<int>(i)));
    if (!idx)
      throw std::invalid_argument("group is not a subgroup of the target");
    out[i] = *idx;
  }
  return out;
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const int n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (int s : a.small_generators()) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    for (int x = 0; x < a.degree(); ++x)
      im[static_cast<std::size_t>(x)] = a.element(s)[x];
    gens.emplace_back(std::move(im));
  }
  for (int s : b.small_generators()) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    for (int x = 0; x < b.degree(); ++x)
      im[static_cast<std::size_t>(a.degree() + x)] = a.degree() + b.element(s)[x];
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup::generate(n, gens, cap);
}

// ---------------------------------------------------------------------------
// predicates

bool is_prime(long p) {
  if (p < 2)
    return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

bool is_cyclic_coprime(const Subgroup& h, long p) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("invalid characteristic " + std::to_string(p));
  if (!h.is_cyclic())
    return false;
  return p == 0 || static_cast<long>(h.order()) % p != 0;
}

bool is_p_hypoelementary(const Subgroup& h, long p) {
  if (!is_prime(p))
    throw std::invalid_argument("invalid prime " + std::to_string(p));
  const auto& g = *h.parent();
  long p_part = 1;
  long rest = static_cast<long>(h.order());
  while (rest % p == 0) {
    rest /= p;
    p_part *= p;
  }
  // The Sylow p-subgroup is normal iff it is unique iff it is the set of p-elements.
  std::vector<int> p_elements;
  for (int m : h.members()) {
    long o = g.element_order(m);
    while (o % p == 0)
      o /= p;
    if (o == 1)
      p_elements.push_back(m);
  }
  if (static_cast<long>(p_elements.size()) != p_part)
    return false;
  std::vector<char> in_p(g.order(), 0);
  for (int m : p_elements)
    in_p[static_cast<std::size_t>(m)] = 1;
  // H/P is cyclic iff some coset hP has order |H|/|P|.
  for (int m : h.members()) {
    long k = 1;
    int x = m;
    while (!in_p[static_cast<std::size_t>(x)]) {
      x = g.mul(x, m);
      ++k;
    }
    if (k == rest)
      return true;
  }
  return false;
}

namespace {

std::vector<int> order_histogram(const FiniteGroup& g) {
  std::vector<int> hist(g.order() + 1, 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    ++hist[static_cast<std::size_t>(g.element_order(static_cast<int>(i)))];
  return hist;
}

class IsoSearch {
public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b) : a_(a), b_(b), gens_(a.small_generators()) {}

  bool run() { return extend(0); }

private:
  // Builds the map on <gens[0..k)> by walking the Cayley graph; false on inconsistency.
  bool consistent(std::size_t k) const {
    std::vector<int> img(a_.order(), -1);
    std::vector<char> used(b_.order(), 0);
    img[0] = 0;
    used[0] = 1;
    std::vector<int> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
      int x = order[i];
      for (std::size_t j = 0; j < k; ++j) {
        int y = a_.mul(x, gens_[j]);
        int fy = b_.mul(img[static_cast<std::size_t>(x)], choice_[j]);
        if (img[static_cast<std::size_t>(y)] < 0) {
          if (used[static_cast<std::size_t>(fy)])
            return false;
          img[static_cast<std::size_t>(y)] = fy;
          used[static_cast<std::size_t>(fy)] = 1;
          order.push_back(y);
        } else if (img[static_cast<std::size_t>(y)] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == gens_.size())
      return true;
    const int target_order = a_.element_order(gens_[k]);
    for (int cand = 0; cand < static_cast<int>(b_.order()); ++cand) {
      if (b_.element_order(cand) != target_order)
        continue;
      choice_.push_back(cand);
      if (consistent(k + 1) && extend(k + 1))
        return true;
      choice_.pop_back();
    }
    return false;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<int> gens_;
  std::vector<int> choice_;
};

}  // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b)
    return true;
  if (a.order() != b.order() || a.exponent() != b.exponent() || a.is_abelian() != b.is_abelian() ||
      a.conjugacy_classes().size() != b.conjugacy_classes().size() ||
      order_histogram(a) != order_histogram(b))
    return false;
  // An injective homomorphism between groups of equal order is an isomorphism.
  return IsoSearch(a, b).run();
}

}  // namespace burnside
