#pragma once

// Shared fixtures and brute-force oracles for the test suites.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burnside/families.hpp"
#include "burnside/group.hpp"

namespace burnside::testing {

inline GroupPtr product(const GroupPtr& a, const GroupPtr& b) { return direct_product(*a, *b); }

/// The acceptance sample set.
inline std::vector<std::pair<std::string, GroupPtr>> sample_groups() {
  using namespace families;
  std::vector<std::pair<std::string, GroupPtr>> out;
  for (int n = 1; n <= 12; ++n)
    out.emplace_back("C" + std::to_string(n), cyclic(n));
  out.emplace_back("C2xC2", product(cyclic(2), cyclic(2)));
  out.emplace_back("C2xC4", product(cyclic(2), cyclic(4)));
  out.emplace_back("S3", symmetric(3));
  out.emplace_back("D4", dihedral(4));
  out.emplace_back("Q8", quaternion());
  out.emplace_back("D5", dihedral(5));
  out.emplace_back("D6", dihedral(6));
  out.emplace_back("A4", alternating(4));
  out.emplace_back("C3xC3", product(cyclic(3), cyclic(3)));
  out.emplace_back("S3xC2", product(symmetric(3), cyclic(2)));
  out.emplace_back("S4", symmetric(4));
  return out;
}

/// Naive closure of a generating set by repeated multiplication until nothing new appears.
inline std::set<std::vector<int>> naive_closure(int degree, const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    id[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> elems{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(elems.begin(), elems.end());
    for (const auto& a : snapshot)
      for (const auto& s : gens) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
          c[i] = a[static_cast<std::size_t>(s[i])];
        grew |= elems.insert(c).second;
      }
  }
  return elems;
}

/// Every subgroup of G, found by adding one element at a time to already-found subgroups.
inline std::set<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  auto close = [&](std::vector<int> s) {
    std::set<int> members(s.begin(), s.end());
    members.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> snap(members.begin(), members.end());
      for (int a : snap)
        for (int b : snap)
          grew |= members.insert(g.mul(a, b)).second;
    }
    return std::vector<int>(members.begin(), members.end());
  };
  std::set<std::vector<int>> found{{0}};
  std::vector<std::vector<int>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (int x = 0; x < static_cast<int>(g.order()); ++x) {
        if (std::binary_search(s.begin(), s.end(), x))
          continue;
        auto t = s;
        t.push_back(x);
        auto c = close(t);
        if (found.insert(c).second)
          next.push_back(c);
      }
    frontier = std::move(next);
  }
  return found;
}

}  // namespace burnside::testing
