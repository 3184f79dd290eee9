#include <doctest.h>

#include <random>
#include <set>

#include "burnside/decomposition.hpp"
#include "burnside/families.hpp"
#include "burnside/inertia.hpp"
#include "burnside/ktheory.hpp"
#include "burnside/suites.hpp"
#include "burnside/vistoli.hpp"
#include "support.hpp"

using namespace burnside;
using burnside::testing::sample_groups;

namespace {

CyclotomicNumber q(int n, long v) { return CyclotomicNumber(n, Rational(v)); }

const SubgroupClass& class_of_order(const GroupPtr& g, std::size_t order) {
  for (const auto& c : subgroup_classes(g))
    if (c.order() == order)
      return c;
  throw std::runtime_error("no class of that order");
}

int element_of_order(const GroupPtr& g, int order) {
  for (int e = 0; e < static_cast<int>(g->order()); ++e)
    if (g->element_order(e) == order)
      return e;
  throw std::runtime_error("no element of that order");
}

// Number of G-orbits on {(x, g) : g x = x} under h.(x, g) = (hx, hgh^-1), counted directly.
std::size_t pair_orbits(const GSet& x) {
  const auto& g = *x.group();
  std::set<std::pair<int, int>> seen;
  std::size_t orbits = 0;
  for (int p = 0; p < x.size(); ++p)
    for (int e = 0; e < static_cast<int>(g.order()); ++e) {
      if (x.act(e, p) != p || seen.count({p, e}))
        continue;
      ++orbits;
      for (int h = 0; h < static_cast<int>(g.order()); ++h)
        seen.insert({x.act(h, p), g.conj(h, e)});
    }
  return orbits;
}

// |(G/H)^g|, by looking at cosets.
long fixed_cosets(const Subgroup& h, int g) {
  auto cosets = GSet::cosets(h);
  long n = 0;
  for (int p = 0; p < cosets.size(); ++p)
    n += cosets.act(g, p) == p ? 1 : 0;
  return n;
}

std::vector<GSet> sample_sets(const GroupPtr& g) {
  std::vector<GSet> out;
  for (auto& named : sample_gsets(g, 99))
    out.push_back(std::move(named.set));
  return out;
}

KMap to_point(const KSpacePtr& space) {
  auto pt = KSpace::make(GSet::point(space->group()), space->conductor());
  return KMap(space, pt, std::vector<int>(static_cast<std::size_t>(space->gset().size()), 0));
}

// (1/|G|) sum_g a(g) b(g)
CyclotomicNumber pairing(const ClassFunction& a, const ClassFunction& b) {
  CyclotomicNumber s(a.conductor());
  for (int e = 0; e < static_cast<int>(a.group()->order()); ++e)
    s += a(e) * b(e);
  return s * Rational(1, static_cast<long>(a.group()->order()));
}

ClassFunction random_cf(const GroupPtr& g, int n, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::vector<CyclotomicNumber> v;
  for (std::size_t c = 0; c < g->conjugacy_classes().size(); ++c) {
    std::vector<Rational> co;
    for (long i = 0; i < euler_phi(n); ++i)
      co.emplace_back(d(rng));
    v.emplace_back(n, co);
  }
  return ClassFunction(g, v);
}

}  // namespace

TEST_CASE("class function induction and restriction") {
  auto s3 = families::symmetric(3);
  const int n = s3->exponent();
  auto c2 = class_of_order(s3, 2).representative.as_group();
  auto c3 = class_of_order(s3, 3).representative.as_group();
  const int e = 0, t = element_of_order(s3, 2), r = element_of_order(s3, 3);

  auto ind2 = induce_cf(s3, ClassFunction::constant(c2, n, 1));
  CHECK(ind2(e) == q(n, 3));
  CHECK(ind2(t) == q(n, 1));
  CHECK(ind2(r) == q(n, 0));
  auto ind3 = induce_cf(s3, ClassFunction::constant(c3, n, 1));
  CHECK(ind3(e) == q(n, 2));
  CHECK(ind3(t) == q(n, 0));
  CHECK(ind3(r) == q(n, 2));

  auto res = restrict_cf(c3, ind2);
  for (int k = 0; k < 3; ++k)
    CHECK(res(k) == q(n, k == 0 ? 3 : 0));

  std::mt19937 rng(4);
  auto chi = random_cf(s3, n, rng);
  CHECK(induce_cf(s3, chi) == chi);
  CHECK(restrict_cf(FiniteGroup::from_closed_set({s3->element(0)}), chi).values() ==
        std::vector<CyclotomicNumber>{chi(0)});

  // Conjugating by a normalizer element fixes an invariant function.
  const auto& c3cls = class_of_order(s3, 3);
  auto inv = ClassFunction::from_elements(c3, n, [&](int k) { return q(n, c3->element_order(k)); });
  for (int g : c3cls.normalizer.members())
    CHECK(conj_cf(s3, g, inv) == inv);

  // Frobenius reciprocity on every sample.
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    const int m = g->exponent();
    for (const auto& c : subgroup_classes(g)) {
      auto h = c.representative.as_group();
      auto a = random_cf(h, m, rng);
      auto b = random_cf(g, m, rng);
      CHECK(pairing(induce_cf(g, a), b) == pairing(a, restrict_cf(h, b)));
    }
  }
}

TEST_CASE("k_group dimensions") {
  auto s3 = families::symmetric(3);
  CHECK(KSpace::make(GSet::point(s3), 6)->dim() == 3);
  CHECK(KSpace::make(GSet::regular(s3), 6)->dim() == 1);
  CHECK(KSpace::make(GSet::cosets(class_of_order(s3, 2).representative), 6)->dim() == 2);
  CHECK(KSpace::make(GSet::empty(s3), 6)->dim() == 0);

  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    for (const auto& x : sample_sets(g)) {
      auto space = KSpace::make(x, g->exponent());
      CHECK(space->dim() == pair_orbits(x));
    }
  }
}

TEST_CASE("classes are invariant functions on pairs") {
  std::mt19937 rng(21);
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    const auto& G = *g;
    auto x = sample_sets(g).back();
    auto space = KSpace::make(x, G.exponent());
    auto xi = random_kclass(space, rng);
    for (int p = 0; p < x.size(); ++p)
      for (int e = 0; e < static_cast<int>(G.order()); ++e) {
        if (x.act(e, p) != p)
          continue;
        for (int h : G.small_generators())
          CHECK(xi.at(x.act(h, p), G.conj(h, e)) == xi.at(p, e));
      }
    // Per-orbit characters round-trip.
    std::vector<ClassFunction> chars;
    for (std::size_t o = 0; o < space->orbit_count(); ++o)
      chars.push_back(xi.character(o));
    CHECK(KClass::from_characters(space, chars) == xi);
  }
  auto s3 = families::symmetric(3);
  auto space = KSpace::make(GSet::regular(s3), 6);
  CHECK_THROWS_AS(KClass::basis(space, 0).at(0, element_of_order(s3, 2)), std::invalid_argument);
}

TEST_CASE("pushforward and pullback") {
  auto s3 = families::symmetric(3);
  const int n = 6;
  SUBCASE("regular to point gives the regular character") {
    auto reg = KSpace::make(GSet::regular(s3), n);
    auto f = to_point(reg);
    auto out = pushforward(f, KClass::one(reg));
    for (int e = 0; e < 6; ++e)
      CHECK(out.at(0, e) == q(n, e == 0 ? 6 : 0));
  }
  SUBCASE("pullback to G/H restricts the character") {
    const auto& c2 = class_of_order(s3, 2).representative;
    auto x = KSpace::make(GSet::cosets(c2), n);
    auto f = to_point(x);
    std::mt19937 rng(2);
    auto chi = random_kclass(f.target(), rng);
    auto back = pullback(f, chi);
    int base = x->gset().basepoint(0);
    for (int e : x->gset().stabilizer(0).members())
      CHECK(back.at(base, e) == chi.at(0, e));
  }
  SUBCASE("identity") {
    auto x = KSpace::make(GSet::cosets(class_of_order(s3, 3).representative), n);
    std::vector<int> id(2);
    id[1] = 1;
    KMap f(x, x, id);
    std::mt19937 rng(3);
    auto xi = random_kclass(x, rng);
    CHECK(pushforward(f, xi) == xi);
    CHECK(pullback(f, xi) == xi);
  }
  SUBCASE("non-equivariant map") {
    auto x = KSpace::make(GSet::cosets(class_of_order(s3, 2).representative), n);
    CHECK_THROWS_AS(KMap(x, x, {1, 0, 2}), std::invalid_argument);
  }
  SUBCASE("functoriality") {
    std::mt19937 rng(8);
    for (const auto& [name, g] : sample_groups()) {
      CAPTURE(name);
      const int m = g->exponent();
      const auto& mid = subgroup_classes(g)[subgroup_classes(g).size() / 2].representative;
      auto reg = KSpace::make(GSet::regular(g), m);
      auto cos = KSpace::make(GSet::cosets(mid), m);
      std::vector<int> img(g->order());
      for (int e = 0; e < static_cast<int>(g->order()); ++e)
        img[static_cast<std::size_t>(e)] = cos->gset().act(e, 0);
      KMap f(reg, cos, img);
      KMap p = to_point(cos);
      KMap pf = compose(p, f);
      auto eta = random_kclass(reg, rng);
      CHECK(pushforward(pf, eta) == pushforward(p, pushforward(f, eta)));
      auto xi = random_kclass(p.target(), rng);
      CHECK(pullback(pf, xi) == pullback(f, pullback(p, xi)));
    }
  }
}

TEST_CASE("burnside_action") {
  SUBCASE("C2 on the point") {
    auto c2 = families::cyclic(2);
    auto pt = KSpace::make(GSet::point(c2), 2);
    auto ring = burnside_ring(c2);
    auto out = burnside_action(BurnsideElement::basis(ring, 0), KClass::one(pt));
    CHECK(out.at(0, 0) == q(2, 2));
    CHECK(out.at(0, 1) == q(2, 0));
  }
  std::mt19937 rng(13);
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    auto ring = burnside_ring(g);
    const auto& cls = subgroup_classes(g);
    auto x = sample_sets(g).back();
    auto space = KSpace::make(x, g->exponent());
    auto xi = random_kclass(space, rng);
    CHECK(burnside_action(BurnsideElement::one(ring), xi) == xi);
    // Tensoring with G/H multiplies the value at (x, g) by |(G/H)^g|.
    for (const auto& c : cls) {
      auto out = burnside_action(BurnsideElement::basis(ring, c.id), xi);
      for (std::size_t i = 0; i < space->dim(); ++i) {
        auto [p, e] = space->sample(i);
        CHECK(out.at(p, e) == xi.at(p, e) * Rational(fixed_cosets(c.representative, e)));
      }
    }
    auto b = random_element(ring, rng), b2 = random_element(ring, rng);
    CHECK(burnside_action(b * b2, xi) == burnside_action(b, burnside_action(b2, xi)));
    CHECK(burnside_action(b + b2, xi) == burnside_action(b, xi) + burnside_action(b2, xi));

    // Module maps.
    auto f = to_point(space);
    CHECK(pushforward(f, burnside_action(b, xi)) == burnside_action(b, pushforward(f, xi)));
    auto chi = random_kclass(f.target(), rng);
    CHECK(pullback(f, burnside_action(b, chi)) == burnside_action(b, pullback(f, chi)));

    // Parts are complete.
    auto sum = KClass(space);
    for (const auto& c : cls)
      sum += h_part_k(xi, c.id);
    CHECK(sum == xi);
  }
}

TEST_CASE("part dimensions of the point") {
  CHECK(point_part_dims(families::symmetric(3)) == std::vector<std::size_t>{1, 1, 1, 0});
  CHECK(point_part_dims(families::alternating(4)) == std::vector<std::size_t>{1, 1, 2, 0, 0});
  CHECK(point_part_dims(families::cyclic(1)) == std::vector<std::size_t>{1});
}

TEST_CASE("decomposition_map") {
  auto s3 = families::symmetric(3);
  const auto& c2 = class_of_order(s3, 2);
  auto x = GSet::cosets(c2.representative);
  auto e = decomposition_map(x, c2.id);
  CHECK(e.dim_source == 1);
  CHECK(e.dim_target == 1);
  CHECK(e.iso);
  CHECK(e.inverse_ok);
  auto e1 = decomposition_map(x, 0);
  CHECK(e1.dim_source == 1);
  CHECK(e1.dim_target == 1);
  CHECK(e1.iso);
  // X^{C3} is empty and the C3-part vanishes.
  auto e3 = decomposition_map(x, class_of_order(s3, 3).id);
  CHECK(e3.dim_source == 0);
  CHECK(e3.dim_target == 0);
  CHECK(e3.iso);
  CHECK(e3.inverse_ok);

  auto empty = decompose(GSet::empty(s3));
  CHECK(empty.dim_total == 0);
  CHECK(empty.passed());

  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    for (const auto& set : sample_sets(g)) {
      auto rep = decompose(set);
      CAPTURE(rep.to_json().dump());
      CHECK(rep.dim_source_sum() == rep.dim_total);
      for (const auto& p : rep.parts) {
        CAPTURE(p.detail);
        CHECK(p.iso);
        CHECK(p.inverse_ok);
      }
    }
  }
}

TEST_CASE("Mackey and projection in the K model") {
  auto s3 = families::symmetric(3);
  const auto& c2 = class_of_order(s3, 2);
  auto x = GSet::cosets(class_of_order(s3, 3).representative);
  CHECK(verify_mackey_projection(x, c2.id).passed());
  CHECK(verify_mackey_projection(x, subgroup_classes(s3).back().id).passed());

  // On the point, induction is character induction.
  std::mt19937 rng(5);
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    const int m = g->exponent();
    auto pt = KSpace::make(GSet::point(g), m);
    for (const auto& c : subgroup_classes(g)) {
      auto hp = KSpace::make(GSet::point(g).restrict_to(c.representative), m);
      auto xi = random_kclass(hp, rng);
      CHECK(induce_k(pt, xi).character(0) == induce_cf(g, xi.character(0)));
    }
    auto rep = verify_mackey_projection(sample_sets(g).back(), {.random_samples = 2, .seed = 3, .sink = {}});
    for (const auto& ch : rep.checks()) {
      CAPTURE(ch.name);
      CHECK(ch.passed);
    }
  }
}

TEST_CASE("induced G-sets") {
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    for (const auto& c : subgroup_classes(g)) {
      const auto& h = c.representative;
      auto y = GSet::disjoint_union({GSet::point(h.as_group()), GSet::regular(h.as_group())});
      auto chk = check_induced_set(g, y);
      CHECK(chk.passed());
    }
  }
}

TEST_CASE("wild_inertia") {
  auto s3 = families::symmetric(3);
  const auto& c2 = class_of_order(s3, 2);
  auto rep = wild_inertia(GSet::cosets(c2.representative), c2.id);
  REQUIRE(rep.summands.size() == 1);
  CHECK(rep.summands[0].class_id == c2.id);
  CHECK(rep.summands[0].fixed_points == 1);
  CHECK(rep.summands[0].orbit_types == std::vector<int>{c2.id});

  CHECK(wild_inertia(GSet::point(s3), *families::cyclic(4)).summands.empty());

  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    const auto& cls = subgroup_classes(g);
    for (const auto& c : cls) {
      auto pt = wild_inertia(GSet::point(g), c.id);
      for (const auto& s : pt.summands) {
        CHECK(s.fixed_points == 1);
        CHECK(s.orbit_types.size() == 1);
      }
    }
    for (const auto& x : sample_sets(g)) {
      CHECK(verify_inertia(x).passed());
      // Any representative of a class gives the same number of orbits.
      for (const auto& c : cls)
        for (const auto& m : c.class_members)
          CHECK(inertia_summand(x, m).orbit_types == inertia_summand(x, c.representative).orbit_types);
    }
  }
}

TEST_CASE("vistoli_compare") {
  auto c2 = families::cyclic(2);
  const auto& fam = conlon_idempotents(c2);
  auto u1 = burnside_image(fam[0], 2), uc = burnside_image(fam[1], 2);
  CHECK(u1(0) == q(2, 1));
  CHECK(u1(1) == q(2, 0));
  CHECK(uc(0) == q(2, 0));
  CHECK(uc(1) == q(2, 1));

  CHECK(classical_piece_dims(families::alternating(4)) == std::vector<int>{1, 1, 2, 0, 0});
  CHECK(classical_piece_dims(families::cyclic(1)) == std::vector<int>{1});

  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    auto rep = vistoli_compare(g);
    for (const auto& ch : rep.checks()) {
      CAPTURE(ch.name);
      CAPTURE(ch.detail);
      CHECK(ch.passed);
    }
  }
}
