#include <doctest.h>

#include "burnside/burnside_ring.hpp"
#include "burnside/families.hpp"
#include "burnside/gset.hpp"
#include "support.hpp"

using namespace burnside;
using burnside::testing::sample_groups;

namespace {

std::vector<Rational> q(std::initializer_list<Rational> v) { return v; }

// Marks by counting fixed cosets on explicit G-sets, independent of the ring code.
std::vector<std::vector<long>> brute_marks(const GroupPtr& g) {
  const auto& cls = subgroup_classes(g);
  std::vector<std::vector<long>> m(cls.size(), std::vector<long>(cls.size(), 0));
  for (std::size_t h = 0; h < cls.size(); ++h) {
    auto x = GSet::cosets(cls[h].representative);
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (int p = 0; p < x.size(); ++p) {
        bool fixed = true;
        for (int e : cls[k].representative.members())
          fixed &= x.act(e, p) == p;
        m[h][k] += fixed ? 1 : 0;
      }
  }
  return m;
}

std::vector<Rational> marks_via(const std::vector<std::vector<long>>& table, const BurnsideElement& x) {
  std::vector<Rational> out(table.size());
  for (std::size_t h = 0; h < table.size(); ++h)
    for (std::size_t k = 0; k < table.size(); ++k)
      out[k] += x.coeffs()[h] * Rational(table[h][k]);
  return out;
}

int class_of_order(const GroupPtr& g, std::size_t order) {
  for (const auto& c : subgroup_classes(g))
    if (c.order() == order)
      return c.id;
  return -1;
}

}  // namespace

TEST_CASE("table_of_marks") {
  auto s3 = families::symmetric(3);
  auto t = table_of_marks(s3);
  CHECK(t.rows == std::vector<std::vector<long>>{{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}});
  CHECK(table_of_marks(families::cyclic(1)).rows == std::vector<std::vector<long>>{{1}});

  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    auto tm = table_of_marks(g);
    const auto& cls = subgroup_classes(g);
    CHECK(tm.rows == brute_marks(g));
    for (std::size_t h = 0; h < cls.size(); ++h) {
      CHECK(tm.rows[h][h] == cls[h].nu);
      CHECK(tm.rows[h][0] == static_cast<long>(g->order() / cls[h].order()));
      for (std::size_t k = h + 1; k < cls.size(); ++k)
        CHECK(tm.rows[h][k] == 0);
    }
  }
}

TEST_CASE("basis_product") {
  auto s3 = families::symmetric(3);
  auto ring = burnside_ring(s3);
  CHECK(basis_product(ring, 1, 1).coeffs() == q({1, 1, 0, 0}));
  CHECK(basis_product(ring, 0, 0).coeffs() == q({6, 0, 0, 0}));
  for (int i = 0; i < 4; ++i)
    CHECK(basis_product(ring, 3, i) == BurnsideElement::basis(ring, i));
}

TEST_CASE("product matches the ghost map") {
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    auto ring = burnside_ring(g);
    auto table = brute_marks(g);
    const int n = static_cast<int>(ring->rank());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto p = basis_product(ring, i, j);
        auto mi = marks_via(table, BurnsideElement::basis(ring, i));
        auto mj = marks_via(table, BurnsideElement::basis(ring, j));
        auto mp = marks_via(table, p);
        for (int k = 0; k < n; ++k)
          CHECK(mp[static_cast<std::size_t>(k)] == mi[static_cast<std::size_t>(k)] * mj[static_cast<std::size_t>(k)]);
      }
  }
}

TEST_CASE("induce and restrict") {
  auto s3 = families::symmetric(3);
  const auto& cls = subgroup_classes(s3);
  auto c2 = cls[1].representative;
  auto c3 = cls[2].representative;
  auto c2r = burnside_ring(c2.as_group());
  auto c3r = burnside_ring(c3.as_group());
  auto s3r = burnside_ring(s3);

  CHECK(induce(c2, BurnsideElement::basis(c2r, 0)) == BurnsideElement::basis(s3r, 0));
  CHECK(induce(c3, BurnsideElement::basis(c3r, 1)) == BurnsideElement::basis(s3r, 2));
  std::mt19937 rng(7);
  auto x = random_element(s3r, rng);
  CHECK(induce(s3, x) == x);
  CHECK(restrict(s3, x) == x);

  CHECK(restrict(c2, BurnsideElement::basis(s3r, 2)) == BurnsideElement::basis(c2r, 0));
  CHECK(restrict(c3, BurnsideElement::basis(s3r, 1)) == BurnsideElement::basis(c3r, 0));
}

TEST_CASE("conlon_idempotents on small groups") {
  SUBCASE("S3") {
    auto g = families::symmetric(3);
    const auto& fam = conlon_idempotents(g);
    REQUIRE(fam.size() == 4);
    CHECK(fam[0].coeffs() == q({Rational(1, 6), 0, 0, 0}));
    CHECK(fam[1].coeffs() == q({Rational(-1, 2), 1, 0, 0}));
    CHECK(fam[2].coeffs() == q({Rational(-1, 6), 0, Rational(1, 2), 0}));
    CHECK(fam[3].coeffs() == q({Rational(1, 2), -1, Rational(-1, 2), 1}));
    // Oracle: marks of u_H are the unit vector at H.
    auto table = brute_marks(g);
    for (int h = 0; h < 4; ++h) {
      auto m = marks_via(table, fam[h]);
      for (int k = 0; k < 4; ++k)
        CHECK(m[static_cast<std::size_t>(k)] == Rational(h == k ? 1 : 0));
    }
  }
  SUBCASE("trivial group") {
    const auto& fam = conlon_idempotents(families::cyclic(1));
    REQUIRE(fam.size() == 1);
    CHECK(fam[0].coeffs() == q({1}));
  }
  SUBCASE("C2") {
    const auto& fam = conlon_idempotents(families::cyclic(2));
    CHECK(fam[0].coeffs() == q({Rational(1, 2), 0}));
    CHECK(fam[1].coeffs() == q({Rational(-1, 2), 1}));
    CHECK(fam[1].marks() == q({0, 1}));
  }
}

TEST_CASE("ghost_idempotents") {
  auto s3 = families::symmetric(3);
  auto ghost = ghost_idempotents(s3);
  const auto& conlon = conlon_idempotents(s3);
  for (int h = 0; h < 4; ++h)
    CHECK(ghost[h] == conlon[h]);
  CHECK(ghost_idempotents(families::cyclic(2))[1].marks() == q({0, 1}));
  CHECK(ghost_idempotents(families::cyclic(1))[0].coeffs() == q({1}));
}

TEST_CASE("conlon and ghost families agree on every sample group") {
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    auto ghost = ghost_idempotents(g);
    const auto& fam = conlon_idempotents(g);
    REQUIRE(ghost.size() == fam.size());
    for (std::size_t h = 0; h < fam.size(); ++h)
      CHECK(ghost[static_cast<int>(h)] == fam[static_cast<int>(h)]);
  }
}

TEST_CASE("h_part") {
  auto s3 = families::symmetric(3);
  auto ring = burnside_ring(s3);
  const auto& fam = conlon_idempotents(s3);
  auto one = BurnsideElement::one(ring);
  for (int h = 0; h < 4; ++h)
    CHECK(h_part(one, h) == fam[h]);
  CHECK(h_part(fam[2], 1).is_zero());
  CHECK(h_part(BurnsideElement::basis(ring, 0), 0) == BurnsideElement::basis(ring, 0));

  std::mt19937 rng(3);
  auto x = random_element(ring, rng);
  auto sum = BurnsideElement::zero(ring);
  for (int h = 0; h < 4; ++h)
    sum += h_part(x, h);
  CHECK(sum == x);
}

TEST_CASE("almost idempotency of the induced top idempotent") {
  auto s3 = families::symmetric(3);
  auto c3 = subgroup_classes(s3)[2].representative;
  auto v = induce(c3, conlon_idempotents(c3.as_group()).section());
  CHECK(v * v == v * Rational(2));
}

TEST_CASE("verify_conlon") {
  SUBCASE("S3") { CHECK(verify_conlon(families::symmetric(3)).passed()); }
  SUBCASE("C6") {
    auto g = families::cyclic(6);
    auto rep = verify_conlon(g);
    CHECK(rep.passed());
    CHECK(subgroup_classes(g).size() == 4);
  }
  SUBCASE("every sample group") {
    for (const auto& [name, g] : sample_groups()) {
      CAPTURE(name);
      auto rep = verify_conlon(g, {.random_samples = 2, .seed = 11, .sink = {}});
      for (const auto& c : rep.checks()) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("restriction of the top idempotent vanishes on proper subgroups") {
  for (const auto& [name, g] : sample_groups()) {
    CAPTURE(name);
    const auto& cls = subgroup_classes(g);
    const auto& top = conlon_idempotents(g).section();
    for (std::size_t h = 0; h + 1 < cls.size(); ++h)
      CHECK(restrict(cls[h].representative, top).is_zero());
  }
}

TEST_CASE("element arithmetic errors") {
  auto a = BurnsideElement::one(burnside_ring(families::cyclic(2)));
  auto b = BurnsideElement::one(burnside_ring(families::cyclic(3)));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK(class_of_order(families::cyclic(4), 2) == 1);
}
