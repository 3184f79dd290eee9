#include "burnside/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "burnside/linalg.hpp"

namespace burnside {

long euler_phi(long n) {
  if (n < 1)
    throw std::invalid_argument("euler_phi of a non-positive integer");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0)
      continue;
    while (m % p == 0)
      m /= p;
    result -= result / p;
  }
  if (m > 1)
    result -= result / m;
  return result;
}

namespace {

CycPoly build_cyclotomic(int n) {
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num.front() = -1;
  num.back() = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    const auto& div = cyclotomic_poly(d).coeffs;
    const std::size_t dd = div.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      long c = num[i];
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j)
        num[i - dd + j] -= c * div[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
      if (num[i] != 0)
        throw std::logic_error("inexact cyclotomic division");
    num = std::move(quot);
  }
  return CycPoly{n, std::move(num)};
}

}  // namespace

const CycPoly& cyclotomic_poly(int n) {
  if (n < 1)
    throw std::invalid_argument("cyclotomic polynomial index must be positive");
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<CycPoly>> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(n); it != memo.end())
    return *it->second;
  auto p = std::make_unique<CycPoly>(build_cyclotomic(n));
  return *memo.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------

CyclotomicNumber::CyclotomicNumber(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("cyclotomic conductor must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(n)), Rational(0));
}

CyclotomicNumber::CyclotomicNumber(int n, const Rational& r) : CyclotomicNumber(n) { coeffs_[0] = r; }

CyclotomicNumber::CyclotomicNumber(int n, std::vector<Rational> coeffs) : CyclotomicNumber(n) {
  reduce(std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::zeta(int n, long k) {
  long e = ((k % n) + n) % n;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1);
  raw.back() = 1;
  return CyclotomicNumber(n, std::move(raw));
}

void CyclotomicNumber::reduce(std::vector<Rational> raw) {
  const auto& phi = cyclotomic_poly(n_).coeffs;
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > d;) {
    if (raw[i].is_zero())
      continue;
    Rational c = raw[i];
    for (std::size_t j = 0; j <= d; ++j)
      if (phi[j] != 0)
        raw[i - d + j] -= c * Rational(phi[j]);
  }
  raw.resize(d);
  coeffs_ = std::move(raw);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      return false;
  return true;
}

static void require_same_field(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() != b.conductor())
    throw std::invalid_argument("cyclotomic numbers with different conductors");
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  require_same_field(*this, o);
  if (is_rational()) {
    Rational r = coeffs_[0];
    *this = o;
    return *this *= r;
  }
  if (o.is_rational())
    return *this *= o.coeffs_[0];
  std::vector<Rational> raw(coeffs_.size() * 2);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (!o.coeffs_[j].is_zero())
        raw[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(std::move(raw));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r) {
  for (auto& c : coeffs_)
    c *= r;
  return *this;
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
  CyclotomicNumber r = a;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

// a = q * b + r
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] -= c * b[j];
    trim(a);
  }
  return {q, a};
}

Poly sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  Poly out(std::max(a.size(), q.size() + b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero())
    throw std::domain_error("division by zero");
  const auto& phi = cyclotomic_poly(n_).coeffs;
  Poly r0(phi.begin(), phi.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  if (r0.size() != 1)
    throw std::logic_error("cyclotomic polynomial has a nontrivial factor");
  for (auto& c : s0)
    c /= r0[0];
  return CyclotomicNumber(n_, std::move(s0));
}

std::string CyclotomicNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c.is_zero())
      continue;
    if (!first)
      os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0)
      os << "-";
    Rational mag = c.sign() < 0 ? -c : c;
    if (i == 0)
      os << mag;
    else {
      if (!mag.is_one())
        os << mag << '*';
      os << 'z';
      if (i > 1)
        os << '^' << i;
    }
    first = false;
  }
  if (first)
    os << '0';
  os << " (mod Phi_" << n_ << ')';
  return os.str();
}

nlohmann::ordered_json CyclotomicNumber::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_)
    arr.push_back(c.str());
  j["coeffs"] = std::move(arr);
  return j;
}

CyclotomicNumber CyclotomicNumber::from_json(const nlohmann::ordered_json& j) {
  int n = j.at("n").get<int>();
  std::vector<Rational> raw;
  for (const auto& c : j.at("coeffs"))
    raw.push_back(Rational::parse(c.get<std::string>()));
  if (raw.size() != static_cast<std::size_t>(euler_phi(n)))
    throw std::invalid_argument("cyclotomic coefficient list has the wrong length");
  return CyclotomicNumber(n, std::move(raw));
}

// ---------------------------------------------------------------------------

CyclotomicNumber embed(const CyclotomicNumber& a, int n) {
  const int d = a.conductor();
  if (n < 1 || n % d != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(d) + ") into Q(zeta_" +
                                std::to_string(n) + ")");
  const std::size_t step = static_cast<std::size_t>(n / d);
  std::vector<Rational> raw(a.coeffs().size() * step + 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    raw[i * step] = a.coeffs()[i];
  return CyclotomicNumber(n, std::move(raw));
}

CyclotomicNumber galois(const CyclotomicNumber& a, long k) {
  const long n = a.conductor();
  if (std::gcd(k, n) != 1)
    throw std::invalid_argument("Galois exponent " + std::to_string(k) + " is not coprime to " + std::to_string(n));
  const long kk = ((k % n) + n) % n;
  std::vector<Rational> raw(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    raw[static_cast<std::size_t>((static_cast<long>(i) * kk) % n)] += a.coeffs()[i];
  return CyclotomicNumber(static_cast<int>(n), std::move(raw));
}

int fixed_subspace_dim(int n, const std::set<long>& exponents) {
  std::set<long> s;
  for (long k : exponents) {
    if (std::gcd(k, static_cast<long>(n)) != 1)
      throw std::invalid_argument("exponent " + std::to_string(k) + " is not a unit mod " + std::to_string(n));
    s.insert(((k % n) + n) % n);
  }
  if (s.empty())
    throw std::invalid_argument("empty exponent set");
  for (long a : s)
    for (long b : s)
      if (!s.count((a * b) % n))
        throw std::invalid_argument("exponents are not closed under multiplication");

  const auto phi = static_cast<std::size_t>(euler_phi(n));
  std::vector<std::vector<Rational>> rows;
  for (long k : s) {
    // Column i of sigma_k - 1 is galois(z^i, k) - z^i.
    std::vector<std::vector<Rational>> block(phi, std::vector<Rational>(phi));
    for (std::size_t i = 0; i < phi; ++i) {
      auto img = galois(CyclotomicNumber::zeta(n, static_cast<long>(i)), k);
      for (std::size_t r = 0; r < phi; ++r)
        block[r][i] = img.coeffs()[r];
      block[i][i] -= Rational(1);
    }
    for (auto& row : block)
      rows.push_back(std::move(row));
  }
  return static_cast<int>(phi - matrix_rank(std::move(rows)));
}

}  // namespace burnside
