#include "burnside/gset.hpp"

#include <numeric>
#include <stdexcept>

namespace burnside {

GSet::GSet(GroupPtr group, int size, std::vector<int> action)
    : group_(std::move(group)), size_(size), action_(std::move(action)) {
  const auto& g = *group_;
  const auto m = static_cast<std::size_t>(size_);
  if (size_ < 0 || action_.size() != g.order() * m)
    throw std::invalid_argument("action table has the wrong shape");
  for (std::size_t e = 0; e < g.order(); ++e) {
    std::vector<char> hit(m, 0);
    for (std::size_t x = 0; x < m; ++x) {
      int y = action_[e * m + x];
      if (y < 0 || static_cast<std::size_t>(y) >= m || hit[static_cast<std::size_t>(y)])
        throw std::invalid_argument("group element does not act by a bijection");
      hit[static_cast<std::size_t>(y)] = 1;
    }
  }
  for (int x = 0; x < size_; ++x)
    if (act(FiniteGroup::identity(), x) != x)
      throw std::invalid_argument("identity does not act trivially");
  for (int s : g.small_generators())
    for (int h = 0; h < static_cast<int>(g.order()); ++h)
      for (int x = 0; x < size_; ++x)
        if (act(s, act(h, x)) != act(g.mul(s, h), x))
          throw std::invalid_argument("action is not compatible with the group law");
  labels_.resize(m);
  std::iota(labels_.begin(), labels_.end(), 0);
  analyze();
}

void GSet::analyze() {
  const auto& g = *group_;
  const auto m = static_cast<std::size_t>(size_);
  orbit_of_.assign(m, -1);
  transporter_.assign(m, -1);
  basepoints_.clear();
  stabilizers_.clear();
  for (int x = 0; x < size_; ++x) {
    if (orbit_of_[static_cast<std::size_t>(x)] >= 0)
      continue;
    const int orbit = static_cast<int>(basepoints_.size());
    basepoints_.push_back(x);
    std::vector<int> stab;
    for (int e = 0; e < static_cast<int>(g.order()); ++e) {
      int y = act(e, x);
      if (y == x)
        stab.push_back(e);
      if (transporter_[static_cast<std::size_t>(y)] < 0) {
        transporter_[static_cast<std::size_t>(y)] = e;
        orbit_of_[static_cast<std::size_t>(y)] = orbit;
      }
    }
    stabilizers_.emplace_back(group_, std::move(stab));
  }
}

Subgroup GSet::point_stabilizer(int x) const {
  std::vector<int> stab;
  for (int e = 0; e < static_cast<int>(group_->order()); ++e)
    if (act(e, x) == x)
      stab.push_back(e);
  return Subgroup(group_, std::move(stab));
}

GSet GSet::point(const GroupPtr& g) { return GSet(g, 1, std::vector<int>(g->order(), 0)); }

GSet GSet::empty(const GroupPtr& g) { return GSet(g, 0, {}); }

GSet GSet::regular(const GroupPtr& g) {
  const auto n = g->order();
  std::vector<int> action(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      action[a * n + x] = g->mul(static_cast<int>(a), static_cast<int>(x));
  return GSet(g, static_cast<int>(n), std::move(action));
}

std::vector<int> left_coset_reps(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<char> seen(g.order(), 0);
  std::vector<int> reps;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (seen[static_cast<std::size_t>(x)])
      continue;
    reps.push_back(x);
    for (int m : h.members())
      seen[static_cast<std::size_t>(g.mul(x, m))] = 1;
  }
  return reps;
}

GSet GSet::cosets(const Subgroup& h) {
  const auto& gp = h.parent();
  const auto& g = *gp;
  std::vector<int> coset_of(g.order(), -1);
  int count = 0;
  for (int x : left_coset_reps(h)) {
    for (int m : h.members())
      coset_of[static_cast<std::size_t>(g.mul(x, m))] = count;
    ++count;
  }
  auto reps = left_coset_reps(h);
  const auto m = static_cast<std::size_t>(count);
  std::vector<int> action(g.order() * m);
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t c = 0; c < m; ++c)
      action[e * m + c] = coset_of[static_cast<std::size_t>(g.mul(static_cast<int>(e), reps[c]))];
  return GSet(gp, count, std::move(action));
}

GSet GSet::disjoint_union(const std::vector<GSet>& parts) {
  if (parts.empty())
    throw std::invalid_argument("disjoint union of no G-sets");
  const auto& gp = parts.front().group();
  int total = 0;
  for (const auto& p : parts) {
    if (p.group() != gp)
      throw std::invalid_argument("disjoint union of G-sets over different groups");
    total += p.size();
  }
  const auto m = static_cast<std::size_t>(total);
  std::vector<int> action(gp->order() * m);
  int offset = 0;
  for (const auto& p : parts) {
    for (std::size_t e = 0; e < gp->order(); ++e)
      for (int x = 0; x < p.size(); ++x)
        action[e * m + static_cast<std::size_t>(offset + x)] = offset + p.act(static_cast<int>(e), x);
    offset += p.size();
  }
  return GSet(gp, total, std::move(action));
}

GSet GSet::product(const GSet& a, const GSet& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("product of G-sets over different groups");
  const auto& gp = a.group();
  const auto m = static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size());
  std::vector<int> action(gp->order() * m);
  for (std::size_t e = 0; e < gp->order(); ++e)
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < b.size(); ++y)
        action[e * m + static_cast<std::size_t>(x * b.size() + y)] =
            a.act(static_cast<int>(e), x) * b.size() + b.act(static_cast<int>(e), y);
  return GSet(gp, static_cast<int>(m), std::move(action));
}

GSet GSet::restrict_to(const Subgroup& h) const {
  if (h.parent() != group_)
    throw std::invalid_argument("restriction to a subgroup of another group");
  auto sub = h.as_group();
  const auto m = static_cast<std::size_t>(size_);
  std::vector<int> action(h.order() * m);
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t x = 0; x < m; ++x)
      action[i * m + x] = act(h.members()[i], static_cast<int>(x));
  GSet out(sub, size_, std::move(action));
  out.labels_ = labels_;
  return out;
}

GSet GSet::induced(const GroupPtr& g, const GSet& y) {
  Subgroup h(g, embedding(*y.group(), *g));
  auto reps = left_coset_reps(h);
  const int ny = y.size();
  const auto m = reps.size() * static_cast<std::size_t>(ny);
  // Coset of each element, as an index into reps.
  std::vector<int> coset_of(g->order(), -1);
  for (std::size_t j = 0; j < reps.size(); ++j)
    for (int hm : h.members())
      coset_of[static_cast<std::size_t>(g->mul(reps[j], hm))] = static_cast<int>(j);

  std::vector<int> action(g->order() * m);
  for (int e = 0; e < static_cast<int>(g->order()); ++e) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      int gt = g->mul(e, reps[j]);
      int k = coset_of[static_cast<std::size_t>(gt)];
      int hh = h.local_index(g->mul(g->inv(reps[static_cast<std::size_t>(k)]), gt));
      for (int x = 0; x < ny; ++x)
        action[static_cast<std::size_t>(e) * m + j * static_cast<std::size_t>(ny) + static_cast<std::size_t>(x)] =
            k * ny + y.act(hh, x);
    }
  }
  GSet out(g, static_cast<int>(m), std::move(action));
  out.coset_reps_ = std::move(reps);
  return out;
}

GSet fixed_points(const GSet& x, const Subgroup& h) {
  if (h.parent() != x.group())
    throw std::invalid_argument("fixed points of a subgroup of another group");
  std::vector<int> fixed;
  for (int p = 0; p < x.size(); ++p) {
    bool ok = true;
    for (int e : h.members())
      if (x.act(e, p) != p) {
        ok = false;
        break;
      }
    if (ok)
      fixed.push_back(p);
  }
  Subgroup n = h.normalizer();
  std::vector<int> local(static_cast<std::size_t>(x.size()), -1);
  for (std::size_t i = 0; i < fixed.size(); ++i)
    local[static_cast<std::size_t>(fixed[i])] = static_cast<int>(i);
  const auto m = fixed.size();
  std::vector<int> action(n.order() * m);
  for (std::size_t i = 0; i < n.order(); ++i)
    for (std::size_t p = 0; p < m; ++p)
      action[i * m + p] = local[static_cast<std::size_t>(x.act(n.members()[i], fixed[p]))];
  GSet out(n.as_group(), static_cast<int>(m), std::move(action));
  out.labels_ = std::move(fixed);
  return out;
}

void GSetMap::check_equivariant() const {
  if (!source || !target)
    throw std::invalid_argument("G-set map without source or target");
  if (source->group() != target->group())
    throw std::invalid_argument("G-set map between sets over different groups");
  if (image.size() != static_cast<std::size_t>(source->size()))
    throw std::invalid_argument("G-set map has the wrong number of images");
  for (int y : image)
    if (y < 0 || y >= target->size())
      throw std::invalid_argument("G-set map image out of range");
  const auto& g = *source->group();
  for (int s : g.small_generators())
    for (int y = 0; y < source->size(); ++y)
      if (image[static_cast<std::size_t>(source->act(s, y))] != target->act(s, image[static_cast<std::size_t>(y)]))
        throw std::invalid_argument("non-equivariant map");
}

}  // namespace burnside
