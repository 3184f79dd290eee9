#include "burnside/decomposition.hpp"

#include <sstream>

#include "burnside/linalg.hpp"

namespace burnside {

namespace {

using Rows = std::vector<std::vector<CyclotomicNumber>>;

/// Basis of the span of the given classes, as reduced rows.
std::vector<KClass> span_basis(const KSpacePtr& space, const std::vector<KClass>& vectors) {
  Rows rows;
  for (const auto& v : vectors)
    rows.push_back(v.coords());
  RowEchelon<CyclotomicNumber> ech(std::move(rows));
  std::vector<KClass> out;
  for (std::size_t r = 0; r < ech.rank(); ++r)
    out.emplace_back(space, ech.rows()[r]);
  return out;
}

std::size_t rank_of(const std::vector<KClass>& vectors) {
  Rows rows;
  for (const auto& v : vectors)
    rows.push_back(v.coords());
  return matrix_rank(std::move(rows));
}

}  // namespace

DecompositionEntry decomposition_map(const KSpacePtr& target, int class_id) {
  const GSet& x = target->gset();
  const GroupPtr& g = x.group();
  const FiniteGroup& G = *g;
  const int cond = target->conductor();
  const auto& cls = lattice_of(g)[class_id];
  const Subgroup& h = cls.representative;
  const GroupPtr hg = h.as_group();
  const GroupPtr ng = cls.normalizer.as_group();

  GSet fixed = fixed_points(x, h);
  auto source = KSpace::make(fixed.restrict_to(h.in(ng)), cond);
  auto xh = KSpace::make(x.restrict_to(h), cond);
  KMap incl(source, xh, fixed.labels());
  Induction ind(xh, target);

  DecompositionEntry e;
  e.class_id = class_id;
  std::ostringstream why;

  // Source: the H-part of K(X^H, H), averaged over N_G(H).
  const auto& uh = conlon_idempotents(hg).section();
  auto h_in_g = embedding(*hg, G);
  auto g_to_h = local_indices(*hg, G);
  const auto& nmembers = cls.normalizer.members();
  const Rational inv_n(1, static_cast<long>(nmembers.size()));
  std::vector<KClass> averaged;
  for (std::size_t b = 0; b < source->dim(); ++b) {
    auto v = burnside_action(uh, KClass::basis(source, b));
    averaged.push_back(KClass::from_pairs(source, [&](int p, int e_h) {
      CyclotomicNumber sum(cond);
      for (std::size_t n = 0; n < nmembers.size(); ++n) {
        int ninv = G.inv(nmembers[n]);
        int hh = g_to_h[static_cast<std::size_t>(G.conj(ninv, h_in_g[static_cast<std::size_t>(e_h)]))];
        sum += v.at(fixed.act(ng->inv(static_cast<int>(n)), p), hh);
      }
      return sum * inv_n;
    }));
  }
  auto src_basis = span_basis(source, averaged);
  e.dim_source = src_basis.size();

  // Target: the H-part of K(X, G).
  std::vector<KClass> parts;
  for (std::size_t b = 0; b < target->dim(); ++b)
    parts.push_back(h_part_k(KClass::basis(target, b), class_id));
  auto tgt_basis = span_basis(target, parts);
  e.dim_target = tgt_basis.size();

  auto push = [&](const KClass& v) { return ind(pushforward(incl, v)); };
  const Rational inv_nu(1, cls.nu);
  auto modres = [&](const KClass& w) { return pullback(incl, restrict_k(xh, w)) * inv_nu; };

  std::vector<KClass> images;
  bool in_part = true;
  for (const auto& v : src_basis) {
    images.push_back(push(v));
    in_part &= h_part_k(images.back(), class_id) == images.back();
  }
  const bool injective = rank_of(images) == e.dim_source;
  e.iso = injective && in_part && e.dim_source == e.dim_target;
  if (!injective)
    why << "i_* not injective; ";
  if (!in_part)
    why << "image leaves the H-part; ";
  if (e.dim_source != e.dim_target)
    why << "dimensions " << e.dim_source << " != " << e.dim_target << "; ";

  bool left = true, right = true;
  for (std::size_t k = 0; k < src_basis.size(); ++k)
    left &= modres(images[k]) == src_basis[k];
  for (const auto& w : tgt_basis)
    right &= push(modres(w)) == w;
  e.inverse_ok = left && right;
  if (!left)
    why << "modified restriction is not a left inverse; ";
  if (!right)
    why << "modified restriction is not a right inverse; ";
  e.detail = why.str();
  return e;
}

DecompositionEntry decomposition_map(const GSet& x, int class_id) {
  return decomposition_map(KSpace::make(x, x.group()->exponent()), class_id);
}

DecompositionReport decompose(const GSet& x) {
  auto target = KSpace::make(x, x.group()->exponent());
  DecompositionReport rep;
  rep.dim_total = target->dim();
  for (std::size_t c = 0; c < lattice_of(x.group()).size(); ++c)
    rep.parts.push_back(decomposition_map(target, static_cast<int>(c)));
  return rep;
}

std::size_t DecompositionReport::dim_source_sum() const {
  std::size_t s = 0;
  for (const auto& p : parts)
    s += p.dim_source;
  return s;
}

bool DecompositionReport::passed() const {
  for (const auto& p : parts)
    if (!p.iso || !p.inverse_ok)
      return false;
  return dim_source_sum() == dim_total;
}

nlohmann::ordered_json DecompositionReport::to_json() const {
  nlohmann::ordered_json j;
  j["dim_total"] = dim_total;
  j["dim_source_sum"] = dim_source_sum();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : parts) {
    nlohmann::ordered_json e;
    e["class"] = p.class_id;
    e["dim_source"] = p.dim_source;
    e["dim_target"] = p.dim_target;
    e["iso"] = p.iso;
    e["inverse"] = p.inverse_ok;
    arr.push_back(std::move(e));
  }
  j["parts"] = std::move(arr);
  j["passed"] = passed();
  return j;
}

// ---- Mackey and projection

namespace {

struct MackeyTerm {
  int t;
  KSpacePtr from;  // X restricted to H cap t^-1 K t
  KSpacePtr to;    // X restricted to K cap t H t^-1
  std::unique_ptr<Induction> ind;
};

}  // namespace

Report verify_mackey_projection(const GSet& x, int class_id, const KCheckOptions& opts) {
  const GroupPtr& g = x.group();
  const FiniteGroup& G = *g;
  const int cond = G.exponent();
  const auto& lat = lattice_of(g);
  const Subgroup& h = lat[class_id].representative;
  std::mt19937 rng(opts.seed + static_cast<unsigned>(class_id) * 7919u);

  auto xg = KSpace::make(x, cond);
  auto xh = KSpace::make(x.restrict_to(h), cond);
  Induction ind_h(xh, xg);

  std::ostringstream mackey_bad, proj_bad;
  for (std::size_t kc = 0; kc < lat.size(); ++kc) {
    const Subgroup& k = lat[static_cast<int>(kc)].representative;
    auto xk = KSpace::make(x.restrict_to(k), cond);
    std::vector<MackeyTerm> terms;
    for (int t : double_cosets(k, h)) {
      MackeyTerm term;
      term.t = t;
      term.from = KSpace::make(x.restrict_to(h.intersect(k.conjugate(G.inv(t)))), cond);
      term.to = KSpace::make(x.restrict_to(k.intersect(h.conjugate(t))), cond);
      term.ind = std::make_unique<Induction>(term.to, xk);
      terms.push_back(std::move(term));
    }
    for (int s = 0; s < opts.random_samples; ++s) {
      auto xi = random_kclass(xh, rng);
      auto lhs = restrict_k(xk, ind_h(xi));
      KClass rhs(xk);
      for (const auto& term : terms)
        rhs += (*term.ind)(conjugate_k(x, term.t, term.to, restrict_k(term.from, xi)));
      if (!(lhs == rhs)) {
        mackey_bad << "K=" << kc << " ";
        break;
      }
    }
  }

  const auto ind_one = ind_h(KClass::one(xh));
  for (int s = 0; s < opts.random_samples; ++s) {
    auto xi = random_kclass(xg, rng);
    auto eta = random_kclass(xh, rng);
    if (!(ind_h(restrict_k(xh, xi)) == xi * ind_one))
      proj_bad << "Ind Res xi != xi Ind 1; ";
    if (!(ind_h(restrict_k(xh, xi) * eta) == xi * ind_h(eta)))
      proj_bad << "Ind(Res xi . eta) != xi Ind eta; ";
    if (!proj_bad.str().empty())
      break;
  }

  Report rep("mackey-projection", opts.sink);
  const std::string suffix = "[H=" + std::to_string(class_id) + "]";
  rep.add("k-mackey" + suffix, mackey_bad.str().empty(), mackey_bad.str());
  rep.add("k-projection" + suffix, proj_bad.str().empty(), proj_bad.str());
  return rep;
}

Report verify_mackey_projection(const GSet& x, const KCheckOptions& opts) {
  Report rep("mackey-projection", opts.sink);
  KCheckOptions quiet = opts;
  quiet.sink = {};
  for (std::size_t c = 0; c < lattice_of(x.group()).size(); ++c)
    rep.merge(verify_mackey_projection(x, static_cast<int>(c), quiet));
  return rep;
}

InducedSetCheck check_induced_set(const GroupPtr& g, const GSet& y) {
  const int cond = g->exponent();
  auto base = KSpace::make(y, cond);
  GSet ind = GSet::induced(g, y);
  const auto& reps = ind.induced_coset_reps();
  Subgroup h(g, embedding(*y.group(), *g));
  auto whole = KSpace::make(ind, cond);
  auto restricted = KSpace::make(ind.restrict_to(h), cond);

  // The coset of the identity holds the points [1, y].
  std::size_t j0 = 0;
  while (j0 < reps.size() && !h.contains(reps[j0]))
    ++j0;
  std::vector<int> unit(static_cast<std::size_t>(y.size()));
  for (int p = 0; p < y.size(); ++p)
    unit[static_cast<std::size_t>(p)] = static_cast<int>(j0) * y.size() + p;
  KMap f(base, restricted, std::move(unit));

  std::vector<KClass> images;
  for (std::size_t b = 0; b < whole->dim(); ++b)
    images.push_back(pullback(f, restrict_k(restricted, KClass::basis(whole, b))));

  InducedSetCheck out;
  out.dim_induced = whole->dim();
  out.dim_base = base->dim();
  out.rank = rank_of(images);
  return out;
}

}  // namespace burnside
