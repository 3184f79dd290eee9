#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "burnside/rational.hpp"

namespace burnside {

long euler_phi(long n);

/// The n-th cyclotomic polynomial, integer coefficients from low to high degree.
struct CycPoly {
  int n = 1;
  std::vector<long> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Memoized. Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper divisors.
const CycPoly& cyclotomic_poly(int n);

/// An element of Q(zeta_n), stored as its reduced residue modulo Phi_n.
class CyclotomicNumber {
public:
  CyclotomicNumber() : CyclotomicNumber(1) {}
  explicit CyclotomicNumber(int n);
  CyclotomicNumber(int n, const Rational& r);
  /// Reduces an arbitrary-length coefficient list modulo Phi_n.
  CyclotomicNumber(int n, std::vector<Rational> coeffs);

  /// zeta_n^k
  static CyclotomicNumber zeta(int n, long k = 1);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& r);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& r) { return a *= r; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Multiplicative inverse via the extended Euclidean algorithm. Throws on zero.
  CyclotomicNumber inverse() const;

  /// "a0 + a1*z + ... (mod Phi_n)"
  std::string str() const;
  nlohmann::ordered_json to_json() const;
  static CyclotomicNumber from_json(const nlohmann::ordered_json& j);

private:
  void reduce(std::vector<Rational> raw);

  int n_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const CyclotomicNumber& c) { return c.is_zero(); }

/// Image of a in Q(zeta_n) under zeta_d -> zeta_n^(n/d). Requires d | n.
CyclotomicNumber embed(const CyclotomicNumber& a, int n);

/// The automorphism zeta_n -> zeta_n^k. Requires gcd(k, n) = 1.
CyclotomicNumber galois(const CyclotomicNumber& a, long k);

/// Q-dimension of the subfield of Q(zeta_n) fixed by the given subgroup of (Z/n)^x,
/// computed as the common kernel of (sigma_k - 1). Throws if `exponents` is not a subgroup.
int fixed_subspace_dim(int n, const std::set<long>& exponents);

}  // namespace burnside
