#include "burnside/suites.hpp"

#include <random>
#include <stdexcept>

#include "burnside/burnside_ring.hpp"
#include "burnside/decomposition.hpp"
#include "burnside/inertia.hpp"
#include "burnside/lattice.hpp"
#include "burnside/vistoli.hpp"

namespace burnside {

std::vector<NamedGSet> sample_gsets(const GroupPtr& g, unsigned seed) {
  const auto& lat = lattice_of(g);
  std::vector<NamedGSet> out;
  out.push_back({"point", GSet::point(g)});
  out.push_back({"regular", GSet::regular(g)});
  for (const auto& c : lat.classes())
    out.push_back({"cosets:" + std::to_string(c.id), GSet::cosets(c.representative)});

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(lat.size()) - 1);
  std::vector<GSet> parts;
  std::string name = "union(";
  for (int i = 0; i < 3; ++i) {
    int c = pick(rng);
    parts.push_back(GSet::cosets(lat[c].representative));
    name += (i ? "," : "") + std::string("cosets:") + std::to_string(c);
  }
  out.push_back({name + ")", GSet::disjoint_union(parts)});
  return out;
}

Suite parse_suite(const std::string& name) {
  if (name == "conlon")
    return Suite::conlon;
  if (name == "mackey")
    return Suite::mackey;
  if (name == "ktheory")
    return Suite::ktheory;
  if (name == "all")
    return Suite::all;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::conlon: return "conlon";
    case Suite::mackey: return "mackey";
    case Suite::ktheory: return "ktheory";
    case Suite::all: return "all";
  }
  return {};
}

namespace {

void prefixed(Report& into, const std::string& prefix, const Report& from) {
  for (const auto& c : from.checks())
    into.add(prefix + c.name, c.passed, c.detail);
}

void run_conlon(const GroupPtr& g, const SuiteOptions& opts, Report& rep) {
  prefixed(rep, "conlon/", verify_conlon(g, {opts.random_samples, opts.seed, {}}));
}

void run_mackey(const GroupPtr& g, const SuiteOptions& opts, Report& rep) {
  auto sets = sample_gsets(g, opts.seed);
  for (const auto& named : {sets.front(), sets.back()})
    prefixed(rep, "mackey/" + named.name + "/",
             verify_mackey_projection(named.set, {opts.random_samples, opts.seed, {}}));
}

void run_ktheory(const GroupPtr& g, const SuiteOptions& opts, Report& rep) {
  const auto& lat = lattice_of(g);
  for (const auto& named : sample_gsets(g, opts.seed)) {
    const std::string prefix = "ktheory/" + named.name + "/";
    auto dec = decompose(named.set);
    for (const auto& p : dec.parts)
      rep.add(prefix + "decomposition[H=" + std::to_string(p.class_id) + "]", p.iso && p.inverse_ok,
              p.detail);
    rep.add(prefix + "rank-identity", dec.dim_source_sum() == dec.dim_total,
            std::to_string(dec.dim_source_sum()) + " vs " + std::to_string(dec.dim_total));
    prefixed(rep, prefix, verify_inertia(named.set));
  }
  for (const auto& c : lat.classes()) {
    auto h = c.representative.as_group();
    auto chk = check_induced_set(g, GSet::disjoint_union({GSet::point(h), GSet::regular(h)}));
    rep.add("ktheory/induced-set[H=" + std::to_string(c.id) + "]", chk.passed(),
            std::to_string(chk.dim_induced) + " " + std::to_string(chk.dim_base) + " " + std::to_string(chk.rank));
  }
  prefixed(rep, "ktheory/vistoli/", vistoli_compare(g));
}

}  // namespace

Report run_suite(const GroupPtr& g, Suite suite, const SuiteOptions& opts) {
  // Each check streams to the sink as soon as it is recorded.
  Report rep("verify " + suite_name(suite), opts.sink);
  if (suite == Suite::conlon || suite == Suite::all)
    run_conlon(g, opts, rep);
  if (suite == Suite::mackey || suite == Suite::all)
    run_mackey(g, opts, rep);
  if (suite == Suite::ktheory || suite == Suite::all)
    run_ktheory(g, opts, rep);
  return rep;
}

}  // namespace burnside
