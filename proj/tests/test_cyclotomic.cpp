#include <doctest.h>

#include <numeric>
#include <random>

#include "burnside/cyclotomic.hpp"

using namespace burnside;

namespace {

using IPoly = std::vector<long>;

IPoly mul(const IPoly& a, const IPoly& b) {
  IPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic polynomial.
IPoly div_exact(IPoly a, const IPoly& b) {
  IPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    long c = a[i];
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[i - (b.size() - 1) + j] -= c * b[j];
    if (i == b.size() - 1)
      break;
  }
  for (long r : a)
    REQUIRE(r == 0);
  return q;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

IPoly x_pow_minus_one(int d) {
  IPoly p(static_cast<std::size_t>(d) + 1, 0);
  p.front() = -1;
  p.back() = 1;
  return p;
}

// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d), an independent route.
IPoly mobius_cyclotomic(int n) {
  IPoly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0)
      continue;
    int mu = mobius(n / d);
    if (mu == 1)
      num = mul(num, x_pow_minus_one(d));
    else if (mu == -1)
      den = mul(den, x_pow_minus_one(d));
  }
  // den has leading coefficient 1 and constant term +-1; normalize to monic division.
  return div_exact(num, den);
}

CyclotomicNumber random_cyc(int n, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (long i = 0; i < euler_phi(n); ++i)
    c.emplace_back(num(rng), den(rng));
  return CyclotomicNumber(n, c);
}

CyclotomicNumber z(int n, long k = 1) { return CyclotomicNumber::zeta(n, k); }
CyclotomicNumber r(int n, long v) { return CyclotomicNumber(n, Rational(v)); }

}  // namespace

TEST_CASE("cyclotomic_poly") {
  CHECK(cyclotomic_poly(1).coeffs == IPoly{-1, 1});
  CHECK(cyclotomic_poly(2).coeffs == IPoly{1, 1});
  CHECK(cyclotomic_poly(12).coeffs == IPoly{1, 0, -1, 0, 1});
  CHECK(cyclotomic_poly(105).degree() == 48);
  for (int n = 1; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(cyclotomic_poly(n).coeffs == mobius_cyclotomic(n));
    CHECK(cyclotomic_poly(n).degree() == euler_phi(n));
    IPoly prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0)
        prod = mul(prod, cyclotomic_poly(d).coeffs);
    CHECK(prod == x_pow_minus_one(n));
  }
  CHECK_THROWS(cyclotomic_poly(0));
}

TEST_CASE("field arithmetic") {
  CHECK(z(4) * z(4) == r(4, -1));
  CHECK((r(3, 1) + z(3)).inverse() == -z(3));
  std::mt19937 rng(17);
  auto a = random_cyc(12, rng);
  CHECK(a + CyclotomicNumber(12) == a);
  CHECK_THROWS_AS(CyclotomicNumber(5).inverse(), std::domain_error);
  CHECK_THROWS_AS(z(3) + z(4), std::invalid_argument);

  for (int n : {1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 24}) {
    CAPTURE(n);
    for (int s = 0; s < 5; ++s) {
      auto x = random_cyc(n, rng), y = random_cyc(n, rng), w = random_cyc(n, rng);
      CHECK(x * y == y * x);
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * (y + w) == x * y + x * w);
      CHECK(x - x == CyclotomicNumber(n));
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == r(n, 1));
        CHECK((y / x) * x == y);
      }
    }
    CHECK(z(n, n) == r(n, 1));
  }
}

TEST_CASE("embed") {
  CHECK(embed(r(1, 1), 6) == r(6, 1));
  CHECK(embed(z(2), 6) == r(6, -1));
  CHECK(embed(z(3), 6) == z(6, 2));
  CHECK_THROWS_AS(embed(z(4), 6), std::invalid_argument);
  std::mt19937 rng(5);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 12}, {4, 12}, {6, 24}, {5, 15}}) {
    auto a = random_cyc(d, rng), b = random_cyc(d, rng);
    CHECK(embed(a * b, n) == embed(a, n) * embed(b, n));
    CHECK(embed(a + b, n) == embed(a, n) + embed(b, n));
    if (!(a == b))
      CHECK_FALSE(embed(a, n) == embed(b, n));
  }
}

TEST_CASE("galois") {
  CHECK(galois(z(3), 2) == r(3, -1) - z(3));
  std::mt19937 rng(9);
  auto a = random_cyc(12, rng);
  CHECK(galois(a, 1) == a);
  CHECK_THROWS_AS(galois(a, 2), std::invalid_argument);
  for (int n : {5, 7, 8, 9, 12, 15}) {
    auto x = random_cyc(n, rng), y = random_cyc(n, rng);
    for (long k = 1; k < n; ++k) {
      if (std::gcd(k, static_cast<long>(n)) != 1)
        continue;
      CHECK(galois(x * y, k) == galois(x, k) * galois(y, k));
      CHECK(galois(r(n, 3), k) == r(n, 3));
      for (long k2 = 1; k2 < n; ++k2)
        if (std::gcd(k2, static_cast<long>(n)) == 1)
          CHECK(galois(galois(x, k), k2) == galois(x, (k * k2) % n));
    }
  }
}

TEST_CASE("fixed_subspace_dim") {
  CHECK(fixed_subspace_dim(3, {1}) == 2);
  CHECK(fixed_subspace_dim(3, {1, 2}) == 1);
  CHECK(fixed_subspace_dim(1, {1}) == 1);
  CHECK(fixed_subspace_dim(12, {1, 5}) == 2);
  CHECK_THROWS_AS(fixed_subspace_dim(7, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(fixed_subspace_dim(6, {1, 2}), std::invalid_argument);
  for (int n = 1; n <= 30; ++n) {
    std::set<long> units;
    for (long k = 1; k <= n; ++k)
      if (std::gcd(k, static_cast<long>(n)) == 1)
        units.insert(k % n);
    CHECK(fixed_subspace_dim(n, units) == 1);
    CHECK(fixed_subspace_dim(n, {1}) == euler_phi(n));
  }
}

TEST_CASE("text and json forms") {
  CHECK(z(4).str() == "z (mod Phi_4)");
  CHECK((r(3, -1) - z(3) * Rational(1, 2)).str() == "-1 - 1/2*z (mod Phi_3)");
  CHECK(CyclotomicNumber(5).str() == "0 (mod Phi_5)");
  std::mt19937 rng(1);
  auto a = random_cyc(8, rng);
  CHECK(CyclotomicNumber::from_json(a.to_json()) == a);
}
