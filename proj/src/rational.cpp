#include "burnside/rational.hpp"

#include <stdexcept>

namespace burnside {

Rational::Rational(long num, long den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (v.get_den() == 0)
    throw std::domain_error("rational with zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace burnside
