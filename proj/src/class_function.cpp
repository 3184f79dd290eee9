#include "burnside/class_function.hpp"

#include <stdexcept>

namespace burnside {

ClassFunction::ClassFunction(GroupPtr group, int conductor)
    : group_(std::move(group)), conductor_(conductor),
      values_(group_->conjugacy_classes().size(), CyclotomicNumber(conductor)) {}

ClassFunction::ClassFunction(GroupPtr group, std::vector<CyclotomicNumber> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->conjugacy_classes().size())
    throw std::invalid_argument("class function needs one value per conjugacy class");
  conductor_ = values_.empty() ? 1 : values_.front().conductor();
  for (const auto& v : values_)
    if (v.conductor() != conductor_)
      throw std::invalid_argument("class function values over different conductors");
}

ClassFunction ClassFunction::constant(const GroupPtr& group, int conductor, const Rational& v) {
  ClassFunction f(group, conductor);
  for (auto& x : f.values_)
    x = CyclotomicNumber(conductor, v);
  return f;
}

ClassFunction ClassFunction::from_elements(const GroupPtr& group, int conductor,
                                           const std::function<CyclotomicNumber(int)>& f) {
  ClassFunction out(group, conductor);
  const auto& classes = group->conjugacy_classes();
  for (std::size_t c = 0; c < classes.size(); ++c)
    out.values_[c] = f(classes[c].front());
  return out;
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero())
      return false;
  return true;
}

static void require_same(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group() || a.conductor() != b.conductor())
    throw std::invalid_argument("class functions on different groups or fields");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] *= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& r) {
  for (auto& v : values_)
    v *= r;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

ClassFunction induce_cf(const GroupPtr& super, const ClassFunction& chi) {
  const auto& sub = chi.group();
  if (sub == super)
    return chi;
  const auto& g = *super;
  Subgroup h(super, embedding(*sub, g));
  const Rational scale(1, static_cast<long>(h.order()));
  return ClassFunction::from_elements(super, chi.conductor(), [&](int k) {
    CyclotomicNumber sum(chi.conductor());
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      int y = g.conj(g.inv(x), k);
      if (h.contains(y))
        sum += chi(h.local_index(y));
    }
    return sum * scale;
  });
}

ClassFunction restrict_cf(const GroupPtr& sub, const ClassFunction& chi) {
  const auto& super = chi.group();
  if (sub == super)
    return chi;
  auto emb = embedding(*sub, *super);
  return ClassFunction::from_elements(sub, chi.conductor(),
                                      [&](int l) { return chi(emb[static_cast<std::size_t>(l)]); });
}

ClassFunction conj_cf(const GroupPtr& ambient, int g, const ClassFunction& chi) {
  const auto& src = chi.group();
  const Perm& gp = ambient->element(g);
  const Perm gi = gp.inverse();
  std::vector<Perm> image;
  for (const auto& p : src->elements())
    image.push_back(gp * p * gi);
  auto dst = FiniteGroup::from_closed_set(std::move(image));
  return ClassFunction::from_elements(dst, chi.conductor(), [&](int k) {
    return chi(*src->index_of(gi * dst->element(k) * gp));
  });
}

ClassFunction burnside_image(const BurnsideElement& b, int conductor) {
  const auto& g = b.group();
  const auto& lat = lattice_of(g);
  ClassFunction out(g, conductor);
  for (std::size_t c = 0; c < lat.size(); ++c) {
    if (b.coeffs()[c].is_zero())
      continue;
    auto h = lat[static_cast<int>(c)].representative.as_group();
    out += induce_cf(g, ClassFunction::constant(h, conductor, 1)) * b.coeffs()[c];
  }
  return out;
}

}  // namespace burnside
