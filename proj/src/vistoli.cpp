#include "burnside/vistoli.hpp"

#include <sstream>

#include "burnside/cyclotomic.hpp"
#include "burnside/ktheory.hpp"

namespace burnside {

namespace {

int generator_of(const Subgroup& c) {
  const FiniteGroup& g = *c.parent();
  for (int e : c.members())
    if (static_cast<std::size_t>(g.element_order(e)) == c.order())
      return e;
  throw std::invalid_argument("subgroup is not cyclic");
}

}  // namespace

std::set<long> normalizer_exponents(const Subgroup& c) {
  const FiniteGroup& g = *c.parent();
  const int gen = generator_of(c);
  const auto r = static_cast<long>(c.order());
  const Subgroup normalizer = c.normalizer();
  std::set<long> out;
  for (int n : normalizer.members()) {
    int image = g.conj(n, gen);
    for (long k = 0; k < r; ++k)
      if (g.power(gen, k) == image) {
        out.insert(k % r);
        break;
      }
  }
  return out;
}

std::vector<int> classical_piece_dims(const GroupPtr& g) {
  std::vector<int> out;
  for (const auto& c : lattice_of(g).classes()) {
    if (!c.is_cyclic()) {
      out.push_back(0);
      continue;
    }
    out.push_back(fixed_subspace_dim(static_cast<int>(c.order()), normalizer_exponents(c.representative)));
  }
  return out;
}

std::vector<std::size_t> point_part_dims(const GroupPtr& g) {
  auto space = KSpace::make(GSet::point(g), g->exponent());
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < lattice_of(g).size(); ++c)
    out.push_back(part_dimension(space, static_cast<int>(c)));
  return out;
}

ClassFunction generator_indicator(const GroupPtr& g, int class_id, int conductor) {
  const auto& lat = lattice_of(g);
  return ClassFunction::from_elements(g, conductor, [&](int e) {
    auto cyc = Subgroup::generated_by(g, {e});
    return CyclotomicNumber(conductor, lat.class_of(cyc) == class_id ? 1 : 0);
  });
}

Report vistoli_compare(const GroupPtr& g, CheckSink sink) {
  Report rep("vistoli", std::move(sink));
  const auto& lat = lattice_of(g);
  const int cond = g->exponent();
  const auto& fam = conlon_idempotents(g);
  auto classical = classical_piece_dims(g);
  auto parts = point_part_dims(g);

  std::ostringstream piece_bad;
  int total = 0;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    total += classical[c];
    if (static_cast<std::size_t>(classical[c]) != parts[c])
      piece_bad << "class " << c << ": " << classical[c] << " vs " << parts[c] << "; ";
  }
  rep.add("piece-dims", piece_bad.str().empty(), piece_bad.str());

  const auto nclasses = static_cast<int>(g->conjugacy_classes().size());
  rep.add("piece-sum", total == nclasses,
          std::to_string(total) + " vs " + std::to_string(nclasses) + " element classes");

  std::ostringstream image_bad, vanish_bad;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    auto image = burnside_image(fam[static_cast<int>(c)], cond);
    if (lat[static_cast<int>(c)].is_cyclic()) {
      if (!(image == generator_indicator(g, static_cast<int>(c), cond)))
        image_bad << c << " ";
    } else if (!image.is_zero()) {
      vanish_bad << c << " ";
    }
  }
  rep.add("cyclic-indicators", image_bad.str().empty(), image_bad.str());
  rep.add("noncyclic-vanishing", vanish_bad.str().empty(), vanish_bad.str());

  if (lat[lat.whole_class()].is_cyclic()) {
    // For cyclic G the piece of C_d is the indicator of the elements of order d.
    std::ostringstream order_bad;
    for (std::size_t c = 0; c < lat.size(); ++c) {
      const auto d = static_cast<int>(lat[static_cast<int>(c)].order());
      auto indicator = ClassFunction::from_elements(
          g, cond, [&](int e) { return CyclotomicNumber(cond, g->element_order(e) == d ? 1 : 0); });
      if (!(burnside_image(fam[static_cast<int>(c)], cond) == indicator))
        order_bad << c << " ";
    }
    rep.add("cyclic-group-orders", order_bad.str().empty(), order_bad.str());
  }
  return rep;
}

}  // namespace burnside
