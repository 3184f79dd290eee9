#pragma once

#include "burnside/group.hpp"

namespace burnside::families {

/// Cyclic group of order n on n points.
GroupPtr cyclic(int n, std::size_t cap = default_order_cap);
/// Dihedral group of order 2n (symmetries of the n-gon).
GroupPtr dihedral(int n, std::size_t cap = default_order_cap);
GroupPtr symmetric(int n, std::size_t cap = default_order_cap);
GroupPtr alternating(int n, std::size_t cap = default_order_cap);
/// Quaternion group, regular representation on 8 points.
GroupPtr quaternion(std::size_t cap = default_order_cap);

}  // namespace burnside::families
