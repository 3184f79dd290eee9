#include "burnside/inertia.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "burnside/lattice.hpp"

namespace burnside {

namespace {

std::vector<int> isomorphic_classes(const GroupPtr& g, const FiniteGroup& h) {
  const auto& lat = lattice_of(g);
  std::vector<int> out;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    const auto& cand = lat[static_cast<int>(c)];
    if (cand.order() == h.order() && is_isomorphic(*cand.representative.as_group(), h))
      out.push_back(static_cast<int>(c));
  }
  return out;
}

std::vector<int> isomorphic_classes(const GroupPtr& g, int class_id) {
  return isomorphic_classes(g, *lattice_of(g)[class_id].representative.as_group());
}

InertiaReport inertia_over(const GSet& x, int class_id, const std::vector<int>& classes) {
  const auto& lat = lattice_of(x.group());
  InertiaReport rep;
  rep.class_id = class_id;
  for (int c : classes)
    rep.summands.push_back(inertia_summand(x, lat[c].representative));
  return rep;
}

}  // namespace

InertiaSummand inertia_summand(const GSet& x, const Subgroup& h_prime) {
  const auto& lat = lattice_of(x.group());
  InertiaSummand s;
  s.class_id = lat.class_of(h_prime);
  GSet fixed = fixed_points(x, h_prime);
  s.fixed_points = fixed.size();
  Subgroup n = h_prime.normalizer();
  for (std::size_t o = 0; o < fixed.orbit_count(); ++o) {
    // Stabilizer in N of the fixed point, as a subgroup of G.
    std::vector<int> members;
    for (int local : fixed.stabilizer(o).members())
      members.push_back(n.members()[static_cast<std::size_t>(local)]);
    std::sort(members.begin(), members.end());
    s.orbit_types.push_back(lat.class_of(Subgroup(x.group(), std::move(members))));
  }
  std::sort(s.orbit_types.begin(), s.orbit_types.end());
  return s;
}

InertiaReport wild_inertia(const GSet& x, int class_id) {
  return inertia_over(x, class_id, isomorphic_classes(x.group(), class_id));
}

InertiaReport wild_inertia(const GSet& x, const FiniteGroup& h) {
  return inertia_over(x, -1, isomorphic_classes(x.group(), h));
}

std::vector<std::pair<int, int>> InertiaReport::orbit_type_multiset() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : summands)
    for (int t : s.orbit_types)
      out.emplace_back(s.class_id, t);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t InertiaReport::orbit_count() const {
  std::size_t n = 0;
  for (const auto& s : summands)
    n += s.orbit_types.size();
  return n;
}

nlohmann::ordered_json InertiaReport::to_json() const {
  nlohmann::ordered_json j;
  j["class"] = class_id;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : summands) {
    nlohmann::ordered_json e;
    e["class"] = s.class_id;
    e["fixed_points"] = s.fixed_points;
    e["orbit_types"] = s.orbit_types;
    arr.push_back(std::move(e));
  }
  j["summands"] = std::move(arr);
  return j;
}

std::vector<std::pair<int, int>> inertia_by_pairs(const GSet& x, int class_id) {
  const GroupPtr& g = x.group();
  const FiniteGroup& G = *g;
  const auto& lat = lattice_of(g);
  auto iso = isomorphic_classes(g, class_id);

  // Every subgroup isomorphic to H, with an index for the orbit search.
  std::vector<const Subgroup*> subs;
  std::map<std::vector<int>, int> sub_index;
  for (int c : iso)
    for (const auto& m : lat[c].class_members) {
      sub_index.emplace(m.members(), static_cast<int>(subs.size()));
      subs.push_back(&m);
    }
  const auto nsubs = subs.size();

  // Pairs (point, subgroup) with the subgroup fixing the point.
  std::vector<char> valid(static_cast<std::size_t>(x.size()) * nsubs, 0);
  for (int p = 0; p < x.size(); ++p)
    for (std::size_t k = 0; k < nsubs; ++k) {
      bool fixes = true;
      for (int e : subs[k]->members())
        fixes = fixes && x.act(e, p) == p;
      valid[static_cast<std::size_t>(p) * nsubs + k] = fixes ? 1 : 0;
    }

  // conj_table[e][k] = index of e K_k e^-1.
  std::vector<std::vector<int>> conj_table(G.order(), std::vector<int>(nsubs));
  for (int e = 0; e < static_cast<int>(G.order()); ++e)
    for (std::size_t k = 0; k < nsubs; ++k)
      conj_table[static_cast<std::size_t>(e)][k] = sub_index.at(subs[k]->conjugate(e).members());

  std::vector<char> seen(valid.size(), 0);
  std::vector<std::pair<int, int>> out;
  for (std::size_t idx = 0; idx < valid.size(); ++idx) {
    if (!valid[idx] || seen[idx])
      continue;
    const int p = static_cast<int>(idx / nsubs);
    const auto k = idx % nsubs;
    std::vector<int> stab;
    for (int e = 0; e < static_cast<int>(G.order()); ++e) {
      int q = x.act(e, p);
      int k2 = conj_table[static_cast<std::size_t>(e)][k];
      seen[static_cast<std::size_t>(q) * nsubs + static_cast<std::size_t>(k2)] = 1;
      if (q == p && static_cast<std::size_t>(k2) == k)
        stab.push_back(e);
    }
    out.emplace_back(lat.class_of(*subs[k]), lat.class_of(Subgroup(g, std::move(stab))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_inertia(const GSet& x, CheckSink sink) {
  Report rep("inertia", std::move(sink));
  const auto& lat = lattice_of(x.group());
  for (std::size_t c = 0; c < lat.size(); ++c) {
    auto theorem = wild_inertia(x, static_cast<int>(c)).orbit_type_multiset();
    auto pairs = inertia_by_pairs(x, static_cast<int>(c));
    std::ostringstream detail;
    if (theorem != pairs)
      detail << theorem.size() << " orbits from fixed points, " << pairs.size() << " from pairs";
    rep.add("inertia[H=" + std::to_string(c) + "]", theorem == pairs, detail.str());
  }
  return rep;
}

}  // namespace burnside
