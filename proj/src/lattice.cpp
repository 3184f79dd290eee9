#include "burnside/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace burnside {

namespace {

struct Canonical {
  std::vector<int> members;
  int conjugator = 0;
};

Canonical canonical_members(const GroupPtr& g, const std::vector<int>& members) {
  Canonical best{members, 0};
  std::vector<int> buf(members.size());
  for (int x = 0; x < static_cast<int>(g->order()); ++x) {
    for (std::size_t i = 0; i < members.size(); ++i)
      buf[i] = g->conj(x, members[i]);
    std::sort(buf.begin(), buf.end());
    if (buf < best.members) {
      best.members = buf;
      best.conjugator = x;
    }
  }
  return best;
}

}  // namespace

Subgroup canonical_conjugate(const Subgroup& h) {
  return Subgroup(h.parent(), canonical_members(h.parent(), h.members()).members);
}

SubgroupLattice::SubgroupLattice(GroupPtr g) : group_(std::move(g)) {
  const auto& grp = *group_;

  // Cyclic subgroups, one generator each.
  std::map<std::vector<int>, int> cyclic;
  for (int x = 0; x < static_cast<int>(grp.order()); ++x) {
    auto c = Subgroup::generated_by(group_, {x});
    cyclic.emplace(c.members(), x);
  }

  // Class representatives with a short generating set; close under joins with cyclic subgroups.
  std::map<std::vector<int>, std::vector<int>> reps;
  std::vector<std::vector<int>> worklist;
  auto add = [&](const std::vector<int>& members, const std::vector<int>& gens) {
    auto canon = canonical_members(group_, members);
    if (reps.count(canon.members))
      return;
    std::vector<int> cgens;
    for (int s : gens)
      cgens.push_back(grp.conj(canon.conjugator, s));
    reps.emplace(canon.members, cgens);
    worklist.push_back(canon.members);
  };
  for (const auto& [members, gen] : cyclic)
    add(members, {gen});
  while (!worklist.empty()) {
    auto members = worklist.back();
    worklist.pop_back();
    const auto gens = reps.at(members);
    Subgroup rep(group_, members);
    for (const auto& [cmembers, cgen] : cyclic) {
      if (rep.contains(cgen))
        continue;
      auto joined_gens = gens;
      joined_gens.push_back(cgen);
      auto joined = Subgroup::generated_by(group_, joined_gens);
      add(joined.members(), joined_gens);
    }
  }

  std::vector<std::vector<int>> ordered;
  for (const auto& [members, _] : reps)
    ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });

  for (const auto& members : ordered) {
    SubgroupClass cls;
    cls.id = static_cast<int>(classes_.size());
    cls.representative = Subgroup(group_, members);
    std::set<std::vector<int>> conjugates;
    for (int x = 0; x < static_cast<int>(grp.order()); ++x)
      conjugates.insert(cls.representative.conjugate(x).members());
    for (const auto& m : conjugates) {
      cls.class_members.emplace_back(group_, m);
      lookup_.emplace(m, cls.id);
    }
    cls.normalizer = cls.representative.normalizer();
    cls.nu = static_cast<long>(cls.normalizer.order() / cls.representative.order());
    classes_.push_back(std::move(cls));
  }

  const std::size_t n = classes_.size();
  subconj_.assign(n, std::vector<char>(n, 0));
  for (std::size_t small = 0; small < n; ++small)
    for (std::size_t big = 0; big < n; ++big)
      for (const auto& m : classes_[small].class_members)
        if (classes_[big].representative.contains(m)) {
          subconj_[small][big] = 1;
          break;
        }
}

int SubgroupLattice::class_of(const std::vector<int>& members) const {
  auto it = lookup_.find(members);
  if (it == lookup_.end())
    throw std::invalid_argument("not a subgroup of this group");
  return it->second;
}

int SubgroupLattice::class_of(const Subgroup& h) const {
  if (h.parent() != group_)
    return class_of(h.in(group_).members());
  return class_of(h.members());
}

bool SubgroupLattice::subconjugate(int small, int big) const {
  return subconj_[static_cast<std::size_t>(small)][static_cast<std::size_t>(big)] != 0;
}

const SubgroupLattice& lattice_of(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<const FiniteGroup*, std::unique_ptr<SubgroupLattice>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(g.get()); it != cache.end())
      return *it->second;
  }
  auto built = std::make_unique<SubgroupLattice>(g);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(g.get(), std::move(built));
  return *it->second;
}

}  // namespace burnside
