#include "burnside/cli.hpp"

#include <CLI11.hpp>

#include "burnside/burnside_ring.hpp"
#include "burnside/decomposition.hpp"
#include "burnside/inertia.hpp"
#include "burnside/serialize.hpp"
#include "burnside/spec.hpp"
#include "burnside/suites.hpp"
#include "burnside/vistoli.hpp"

namespace burnside {

namespace {

struct Options {
  bool json = false;
  std::size_t max_order = 0;
  std::string spec;
  std::string gset;
  int h = -1;
  int k = -1;
  bool oracle = false;
  std::string suite = "all";
  int samples = 3;
  unsigned seed = 20240917;
};

class Command {
public:
  Command(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  std::size_t cap() const { return opts_.max_order ? opts_.max_order : order_cap_from_env(); }
  GroupPtr group() const { return group_from_spec(opts_.spec, cap()); }
  std::string spec() const { return print(parse_group_spec(opts_.spec)); }

  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  int group_info();
  int marks();
  int idem();
  int bprod();
  int repring();
  int ktheory();
  int inertia();
  int verify();

private:
  int class_arg(const GroupPtr& g, int id, const char* what) const {
    if (id < 0 || static_cast<std::size_t>(id) >= lattice_of(g).size())
      throw std::invalid_argument(std::string(what) + ": no subgroup class " + std::to_string(id));
    return id;
  }

  const Options& opts_;
  std::ostream& out_;
};

int Command::group_info() {
  auto g = group();
  const auto& lat = lattice_of(g);
  if (opts_.json) {
    json j;
    j["group"] = spec();
    j["order"] = g->order();
    j["degree"] = g->degree();
    j["exponent"] = g->exponent();
    j["abelian"] = g->is_abelian();
    j["element_classes"] = g->conjugacy_classes().size();
    auto cls = json::array();
    for (const auto& c : lat.classes()) {
      json e;
      e["class"] = c.id;
      e["order"] = c.order();
      e["conjugates"] = c.class_members.size();
      e["nu"] = c.nu;
      e["cyclic"] = c.is_cyclic();
      cls.push_back(std::move(e));
    }
    j["subgroup_classes"] = std::move(cls);
    emit(j);
    return exit_ok;
  }
  out_ << "group " << spec() << '\n'
       << "order " << g->order() << '\n'
       << "degree " << g->degree() << '\n'
       << "exponent " << g->exponent() << '\n'
       << "abelian " << (g->is_abelian() ? "yes" : "no") << '\n'
       << "element classes " << g->conjugacy_classes().size() << '\n'
       << "subgroup classes " << lat.size() << '\n';
  for (const auto& c : lat.classes())
    out_ << "  class " << c.id << ": order " << c.order() << ", conjugates " << c.class_members.size() << ", nu "
         << c.nu << (c.is_cyclic() ? ", cyclic" : "") << '\n';
  return exit_ok;
}

int Command::marks() {
  auto g = group();
  auto t = table_of_marks(g);
  if (opts_.json) {
    emit(to_json(t, g, spec()));
    return exit_ok;
  }
  out_ << "table of marks of " << spec() << " (row H, column K: |(G/H)^K|)\n";
  const auto& lat = lattice_of(g);
  for (std::size_t h = 0; h < t.size(); ++h) {
    out_ << "  " << h << " (order " << lat[static_cast<int>(h)].order() << "):";
    for (long v : t.rows[h])
      out_ << ' ' << v;
    out_ << '\n';
  }
  return exit_ok;
}

int Command::idem() {
  auto g = group();
  const auto& fam = conlon_idempotents(g);
  std::vector<int> mismatched;
  if (opts_.oracle) {
    auto ghost = ghost_idempotents(g);
    for (std::size_t c = 0; c < fam.size(); ++c)
      if (!(ghost[static_cast<int>(c)] == fam[static_cast<int>(c)]))
        mismatched.push_back(static_cast<int>(c));
  }
  if (opts_.json) {
    json j;
    j["group"] = spec();
    auto arr = json::array();
    for (const auto& u : fam.idempotents)
      arr.push_back(to_json(u, spec()));
    j["idempotents"] = std::move(arr);
    if (opts_.oracle)
      j["oracle_match"] = mismatched.empty();
    emit(j);
  } else {
    for (std::size_t c = 0; c < fam.size(); ++c)
      out_ << "u[" << c << "] = " << fam[static_cast<int>(c)].str() << '\n';
    if (opts_.oracle) {
      if (mismatched.empty())
        out_ << "oracle: match\n";
      for (int c : mismatched)
        out_ << "oracle: MISMATCH at class " << c << '\n';
    }
  }
  return mismatched.empty() ? exit_ok : exit_check_failed;
}

int Command::bprod() {
  auto g = group();
  auto ring = burnside_ring(g);
  auto p = basis_product(ring, class_arg(g, opts_.h, "H"), class_arg(g, opts_.k, "K"));
  if (opts_.json)
    emit(to_json(p, spec()));
  else
    out_ << '<' << opts_.h << "><" << opts_.k << "> = " << p.str() << '\n';
  return exit_ok;
}

int Command::repring() {
  auto g = group();
  const auto& lat = lattice_of(g);
  auto parts = point_part_dims(g);
  auto classical = classical_piece_dims(g);
  auto rep = vistoli_compare(g);
  if (opts_.json) {
    json j;
    j["group"] = spec();
    j["dim"] = g->conjugacy_classes().size();
    auto arr = json::array();
    for (std::size_t c = 0; c < lat.size(); ++c) {
      json e;
      e["class"] = c;
      e["order"] = lat[static_cast<int>(c)].order();
      e["cyclic"] = lat[static_cast<int>(c)].is_cyclic();
      e["dim"] = parts[c];
      e["classical_dim"] = classical[c];
      arr.push_back(std::move(e));
    }
    j["parts"] = std::move(arr);
    j["checks"] = rep.to_json()["checks"];
    j["passed"] = rep.passed();
    emit(j);
  } else {
    out_ << "class functions of " << spec() << ": dim " << g->conjugacy_classes().size() << '\n';
    for (std::size_t c = 0; c < lat.size(); ++c)
      out_ << "  class " << c << " (order " << lat[static_cast<int>(c)].order() << "): part dim " << parts[c]
           << ", classical dim " << classical[c] << '\n';
    for (const auto& ch : rep.checks())
      out_ << (ch.passed ? "PASS " : "FAIL ") << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << '\n';
  }
  return rep.passed() ? exit_ok : exit_check_failed;
}

int Command::ktheory() {
  auto g = group();
  const auto gspec = parse_gset_spec(opts_.gset);
  auto x = build_gset(gspec, g);
  DecompositionReport rep;
  if (opts_.h >= 0) {
    rep.dim_total = KSpace::make(x, g->exponent())->dim();
    rep.parts.push_back(decomposition_map(x, class_arg(g, opts_.h, "--h")));
  } else {
    rep = decompose(x);
  }
  // With a single class the rank identity is not in scope.
  const bool passed = opts_.h >= 0 ? rep.parts.front().iso && rep.parts.front().inverse_ok : rep.passed();
  if (opts_.json) {
    json j;
    j["group"] = spec();
    j["gset"] = print(gspec);
    const json body = rep.to_json();
    for (const auto& [key, value] : body.items())
      j[key] = value;
    j["passed"] = passed;
    emit(j);
  } else {
    out_ << "K(X,G) for G = " << spec() << ", X = " << print(gspec) << " (" << x.size() << " points, "
         << x.orbit_count() << " orbits): dim " << rep.dim_total << '\n';
    for (const auto& p : rep.parts)
      out_ << "  class " << p.class_id << ": source " << p.dim_source << ", target " << p.dim_target
           << ", iso " << (p.iso ? "yes" : "no") << ", inverse " << (p.inverse_ok ? "yes" : "no")
           << (p.detail.empty() ? "" : " (" + p.detail + ")") << '\n';
    if (opts_.h < 0)
      out_ << "sum of source dims " << rep.dim_source_sum() << '\n';
    out_ << (passed ? "PASS" : "FAIL") << '\n';
  }
  return passed ? exit_ok : exit_check_failed;
}

int Command::inertia() {
  auto g = group();
  const auto gspec = parse_gset_spec(opts_.gset);
  auto x = build_gset(gspec, g);
  const int h = class_arg(g, opts_.h, "--h");
  auto rep = wild_inertia(x, h);
  const bool agree = rep.orbit_type_multiset() == inertia_by_pairs(x, h);
  if (opts_.json) {
    json j;
    j["group"] = spec();
    j["gset"] = print(gspec);
    const json body = rep.to_json();
    for (const auto& [key, value] : body.items())
      j[key] = value;
    j["pairs_agree"] = agree;
    emit(j);
  } else {
    out_ << "inertia of " << print(gspec) << " over class " << h << " of " << spec() << ": "
         << rep.orbit_count() << " components\n";
    for (const auto& s : rep.summands) {
      out_ << "  class " << s.class_id << ": " << s.fixed_points << " fixed points, orbit types";
      for (int t : s.orbit_types)
        out_ << ' ' << t;
      out_ << '\n';
    }
    out_ << (agree ? "PASS" : "FAIL") << " pairs route agrees\n";
  }
  return agree ? exit_ok : exit_check_failed;
}

int Command::verify() {
  auto g = group();
  auto suite = parse_suite(opts_.suite);
  SuiteOptions so;
  so.random_samples = opts_.samples;
  so.seed = opts_.seed;
  if (!opts_.json)
    so.sink = [this](const Check& c) {
      out_ << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n'
           << std::flush;
    };
  auto rep = run_suite(g, suite, so);
  if (opts_.json) {
    json j;
    j["group"] = spec();
    j["suite"] = suite_name(suite);
    j["passed"] = rep.passed();
    j["failures"] = rep.failures();
    j["checks"] = rep.to_json()["checks"];
    emit(j);
  } else {
    out_ << "summary: " << rep.checks().size() << " checks, " << rep.failures() << " failed\n";
  }
  return rep.passed() ? exit_ok : exit_check_failed;
}

const char* const description =
    "Burnside rings, Conlon idempotents and the finite G-set model of equivariant K-theory.\n"
    "Group specs: C<n>, D<n> (dihedral of order 2n), S<n>, A<n>, Q8, perm:<deg>:[(0 1 2);(0 1)],\n"
    "and products AxB. G-set specs: point, regular, empty, cosets:<class id>, union(a,b,...).\n"
    "Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error.\n"
    "The order cap defaults to 200; BURNSIDE_MAX_ORDER or --max-order overrides it.";

void print_error(std::ostream& err, const std::string& what) { err << "error: " << what << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app(description, "burnside");
  // "--h" names a subgroup class, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Emit one JSON document instead of text");
  app.add_option("--max-order", opts.max_order, "Largest group order to construct")->check(CLI::PositiveNumber);

  auto* group_cmd = app.add_subcommand("group", "Group information");
  group_cmd->require_subcommand(1);
  auto* info = group_cmd->add_subcommand("info", "Order, classes and subgroup classes");
  info->add_option("spec", opts.spec, "Group spec")->required();

  auto* marks = app.add_subcommand("marks", "Table of marks");
  marks->add_option("spec", opts.spec, "Group spec")->required();

  auto* idem = app.add_subcommand("idem", "Conlon idempotents");
  idem->add_option("spec", opts.spec, "Group spec")->required();
  idem->add_flag("--oracle", opts.oracle, "Cross-check against the table-of-marks solution");

  auto* bprod = app.add_subcommand("bprod", "Product of two basis elements <H><K>");
  bprod->add_option("spec", opts.spec, "Group spec")->required();
  bprod->add_option("H", opts.h, "Subgroup class id")->required();
  bprod->add_option("K", opts.k, "Subgroup class id")->required();

  auto* repring = app.add_subcommand("repring", "Parts of the class-function ring and coincidence checks");
  repring->add_option("spec", opts.spec, "Group spec")->required();

  auto* kth = app.add_subcommand("ktheory", "Decomposition of K(X, G) by subgroup classes");
  kth->add_option("spec", opts.spec, "Group spec")->required();
  kth->add_option("--gset", opts.gset, "G-set spec")->required();
  kth->add_option("--h", opts.h, "Only this subgroup class");

  auto* inert = app.add_subcommand("inertia", "Wild inertia over a subgroup class");
  inert->add_option("spec", opts.spec, "Group spec")->required();
  inert->add_option("--gset", opts.gset, "G-set spec")->required();
  inert->add_option("--h", opts.h, "Subgroup class id")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("spec", opts.spec, "Group spec")->required();
  verify->add_option("--suite", opts.suite, "conlon, mackey, ktheory or all")
      ->check(CLI::IsMember({"conlon", "mackey", "ktheory", "all"}));
  verify->add_option("--samples", opts.samples, "Random samples per identity")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opts.seed, "Seed for random samples and G-sets");

  std::vector<std::string> argv_store{"burnside"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty())
      leaf = leaf->get_subcommands().front();
    out << leaf->help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    print_error(err, e.what());
    err << "run 'burnside --help' for usage\n";
    return exit_usage;
  }

  Command cmd(opts, out);
  try {
    if (*info)
      return cmd.group_info();
    if (*marks)
      return cmd.marks();
    if (*idem)
      return cmd.idem();
    if (*bprod)
      return cmd.bprod();
    if (*repring)
      return cmd.repring();
    if (*kth)
      return cmd.ktheory();
    if (*inert)
      return cmd.inertia();
    if (*verify)
      return cmd.verify();
  } catch (const SpecError& e) {
    print_error(err, e.what());
    return exit_usage;
  } catch (const GroupTooLarge& e) {
    print_error(err, e.what());
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    print_error(err, e.what());
    return exit_usage;
  } catch (const std::exception& e) {
    print_error(err, e.what());
    return exit_check_failed;
  }
  print_error(err, "no command");
  return exit_usage;
}

}  // namespace burnside
