#pragma once

#include <functional>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/cyclotomic.hpp"
#include "burnside/group.hpp"

namespace burnside {

/// A Q(zeta_N)-valued function on a group, constant on conjugacy classes.
/// Values are indexed by the group's conjugacy classes of elements.
class ClassFunction {
public:
  ClassFunction() = default;
  /// The zero function.
  ClassFunction(GroupPtr group, int conductor);
  ClassFunction(GroupPtr group, std::vector<CyclotomicNumber> values);

  static ClassFunction constant(const GroupPtr& group, int conductor, const Rational& v);
  /// Samples f at one element per class; f must be a class function.
  static ClassFunction from_elements(const GroupPtr& group, int conductor,
                                     const std::function<CyclotomicNumber(int)>& f);

  const GroupPtr& group() const { return group_; }
  int conductor() const { return conductor_; }
  const std::vector<CyclotomicNumber>& values() const { return values_; }
  /// Value at element index g of group().
  const CyclotomicNumber& operator()(int g) const {
    return values_[static_cast<std::size_t>(group_->class_of(g))];
  }
  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& r);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& r) { return a *= r; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

private:
  GroupPtr group_;
  int conductor_ = 1;
  std::vector<CyclotomicNumber> values_;
};

/// Frobenius induction to a supergroup: (1/|H|) sum over x with x^-1 k x in H of chi(x^-1 k x).
ClassFunction induce_cf(const GroupPtr& super, const ClassFunction& chi);
ClassFunction restrict_cf(const GroupPtr& sub, const ClassFunction& chi);
/// The class function k -> chi(g^-1 k g) on g H g^-1, for g in `ambient`.
ClassFunction conj_cf(const GroupPtr& ambient, int g, const ClassFunction& chi);

/// Image of a Burnside element in class functions: <H> maps to the permutation character of G/H.
ClassFunction burnside_image(const BurnsideElement& b, int conductor);

}  // namespace burnside
