#pragma once

#include <set>
#include <vector>

#include "burnside/class_function.hpp"
#include "burnside/report.hpp"

namespace burnside {

/// Units k mod |C| with n c n^-1 = c^k for some n in N_G(C), c a generator of C.
std::set<long> normalizer_exponents(const Subgroup& c);

/// Q-dimension of the classical piece of a cyclic class (0 for noncyclic classes),
/// one entry per subgroup class.
std::vector<int> classical_piece_dims(const GroupPtr& g);

/// Rank of u_H . K(point, G) over Q(zeta_N), one entry per subgroup class.
std::vector<std::size_t> point_part_dims(const GroupPtr& g);

/// Indicator of the elements generating a conjugate of the class (zero for noncyclic classes).
ClassFunction generator_indicator(const GroupPtr& g, int class_id, int conductor);

/// Compares the Burnside decomposition of class functions with the classical one by cyclic subgroups.
Report vistoli_compare(const GroupPtr& g, CheckSink sink = {});

}  // namespace burnside
