#include "burnside/families.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace burnside::families {

namespace {

void require_positive(int n, const char* family) {
  if (n < 1)
    throw std::invalid_argument(std::string(family) + " index must be positive");
}

Perm cycle_of(int degree, int length) {
  std::vector<int> cyc(static_cast<std::size_t>(length));
  std::iota(cyc.begin(), cyc.end(), 0);
  return Perm::from_cycles(degree, {cyc});
}

}  // namespace

GroupPtr cyclic(int n, std::size_t cap) {
  require_positive(n, "cyclic");
  if (n == 1)
    return FiniteGroup::generate(1, {}, cap);
  return FiniteGroup::generate(n, {cycle_of(n, n)}, cap);
}

GroupPtr dihedral(int n, std::size_t cap) {
  require_positive(n, "dihedral");
  if (n == 1)
    return cyclic(2, cap);
  if (n == 2)
    return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})}, cap);
  std::vector<int> flip(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    flip[static_cast<std::size_t>(i)] = (n - i) % n;
  return FiniteGroup::generate(n, {cycle_of(n, n), Perm(flip)}, cap);
}

GroupPtr symmetric(int n, std::size_t cap) {
  require_positive(n, "symmetric");
  if (n == 1)
    return FiniteGroup::generate(1, {}, cap);
  return FiniteGroup::generate(n, {Perm::from_cycles(n, {{0, 1}}), cycle_of(n, n)}, cap);
}

GroupPtr alternating(int n, std::size_t cap) {
  require_positive(n, "alternating");
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k)
    gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return FiniteGroup::generate(n, gens, cap);
}

GroupPtr quaternion(std::size_t cap) {
  // Point s*4 + u stands for (-1)^s times unit u of {1, i, j, k}.
  // unit_mul[a][b] = {sign, unit} of u_a * u_b.
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto left_mul = [](int unit) {
    std::vector<int> im(8);
    for (int s = 0; s < 2; ++s)
      for (int u = 0; u < 4; ++u) {
        auto [sign, w] = unit_mul[static_cast<std::size_t>(unit)][static_cast<std::size_t>(u)];
        im[static_cast<std::size_t>(s * 4 + u)] = ((s + sign) % 2) * 4 + w;
      }
    return Perm(std::move(im));
  };
  return FiniteGroup::generate(8, {left_mul(1), left_mul(2)}, cap);
}

}  // namespace burnside::families
