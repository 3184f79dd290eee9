#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "burnside/cli.hpp"
#include "burnside/serialize.hpp"
#include "burnside/spec.hpp"
#include "support.hpp"

using namespace burnside;
using burnside::testing::naive_closure;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_offset(std::string_view text) {
  try {
    parse_group_spec(text);
  } catch (const SpecError& e) {
    return e.offset();
  }
  FAIL("no error for '" << text << "'");
  return 0;
}

std::size_t gset_error_offset(std::string_view text) {
  try {
    parse_gset_spec(text);
  } catch (const SpecError& e) {
    return e.offset();
  }
  FAIL("no error for '" << text << "'");
  return 0;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = haystack.find(needle); at != std::string::npos; at = haystack.find(needle, at + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("group spec parsing") {
  auto s3 = parse_group_spec("S3");
  CHECK(s3.kind == GroupSpec::Kind::symmetric);
  CHECK(s3.n == 3);

  auto v4 = parse_group_spec("C2xC2");
  REQUIRE(v4.kind == GroupSpec::Kind::product);
  CHECK(v4.left->kind == GroupSpec::Kind::cyclic);
  CHECK(v4.right->n == 2);

  // Products associate to the left.
  auto three = parse_group_spec("C2xC3xC4");
  REQUIRE(three.kind == GroupSpec::Kind::product);
  CHECK(three.left->kind == GroupSpec::Kind::product);
  CHECK(three.right->n == 4);

  auto d4 = parse_group_spec("perm:4:[(0 1 2 3);(0 2)]");
  REQUIRE(d4.kind == GroupSpec::Kind::perm);
  CHECK(d4.degree == 4);
  CHECK(d4.generators.size() == 2);
  auto g = build_group(d4);
  CHECK(g->order() == naive_closure(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}).size());
  CHECK(g->order() == 8);

  CHECK(group_from_spec("perm:3:[()]")->order() == 1);
  CHECK(group_from_spec("perm:5:[(0 1)(2 3 4)]")->order() == 6);
  CHECK(group_from_spec("Q8")->order() == 8);
  CHECK(group_from_spec("D5")->order() == 10);
  CHECK(group_from_spec("A4xC2")->order() == 24);
}

TEST_CASE("print round-trips canonical forms") {
  for (const char* text : {"C1", "C12", "D4", "S3", "A4", "Q8", "C2xC2", "S3xC2xC2", "Q8xC3",
                           "perm:4:[(0 1 2 3);(0 2)]", "perm:3:[()]", "perm:6:[(0 1)(2 3 4);(5 0)]"})
    CHECK(print(parse_group_spec(text)) == text);
  for (const char* text : {"point", "regular", "empty", "cosets:3", "union(point,cosets:1,union(regular,empty))"})
    CHECK(print(parse_gset_spec(text)) == text);
}

TEST_CASE("syntax errors report byte offsets") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("X3") == 0);
  CHECK(error_offset("S") == 1);
  CHECK(error_offset("S03") == 1);
  CHECK(error_offset("S0") == 1);
  CHECK(error_offset("S3 ") == 2);
  CHECK(error_offset("S3x") == 3);
  CHECK(error_offset("S3*C2") == 2);
  CHECK(error_offset("Q9") == 0);
  CHECK(error_offset("perm:0:[()]") == 5);
  CHECK(error_offset("perm:4:[(0 4)]") == 11);
  CHECK(error_offset("perm:4:[(0 1 1)]") == 13);
  CHECK(error_offset("perm:4:[(0 1)(1 2)]") == 14);
  CHECK(error_offset("perm:4:[(0 1)") == 13);
  CHECK(error_offset("perm:4:(0 1)]") == 7);
  CHECK(error_offset("C99999999999") == 1);

  CHECK(gset_error_offset("cosets:") == 7);
  CHECK(gset_error_offset("union(point,)") == 12);
  CHECK(gset_error_offset("union(point") == 11);
  CHECK(gset_error_offset("points") == 5);
  CHECK(gset_error_offset("orbit") == 0);

  try {
    parse_group_spec("S3x");
    FAIL("expected an error");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("byte 3") != std::string::npos);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(group_from_spec("S6"), GroupTooLarge);
  CHECK(group_from_spec("S6", 720)->order() == 720);
  CHECK_THROWS_AS(group_from_spec("C15xC15"), GroupTooLarge);
  CHECK_THROWS_AS(build_gset(parse_gset_spec("cosets:4"), group_from_spec("S3")), std::invalid_argument);
  CHECK(build_gset(parse_gset_spec("union(cosets:1,point)"), group_from_spec("S3")).size() == 4);
}

TEST_CASE("JSON round-trips") {
  for (const char* spec : {"S3", "A4", "Q8", "C2xC4"}) {
    auto g = group_from_spec(spec);
    const auto& fam = conlon_idempotents(g);
    for (const auto& u : fam.idempotents) {
      auto j = to_json(u, spec);
      CHECK(j["group"] == spec);
      const auto back = burnside_from_json(json::parse(j.dump()));
      CHECK(back == u);
    }
    auto t = table_of_marks(g);
    auto j = to_json(t, g, spec);
    CHECK(j["orders"].size() == t.size());
    CHECK(marks_from_json(json::parse(j.dump())).rows == t.rows);
  }

  // Coefficients are exact rationals written as strings.
  auto j = to_json(conlon_idempotents(group_from_spec("S3"))[0], "S3");
  REQUIRE(j["coeffs"].size() == 1);
  CHECK(j["coeffs"][0]["class"] == 0);
  CHECK(j["coeffs"][0]["num"] == "1");
  CHECK(j["coeffs"][0]["den"] == "6");

  auto bad = json::parse(R"({"group": "S3", "coeffs": [{"class": 9, "num": "1", "den": "1"}]})");
  CHECK_THROWS_AS(burnside_from_json(bad), std::invalid_argument);
}

TEST_CASE("cli: idem") {
  auto r = run({"idem", "S3", "--oracle"});
  CHECK(r.code == exit_ok);
  CHECK(count(r.out, "u[") == 4);
  CHECK(r.out.find("oracle: match") != std::string::npos);
  CHECK(r.out.find("u[0] = 1/6<0>") != std::string::npos);

  auto rj = run({"idem", "S3", "--oracle", "--json"});
  CHECK(rj.code == exit_ok);
  auto j = json::parse(rj.out);
  CHECK(j["oracle_match"] == true);
  REQUIRE(j["idempotents"].size() == 4);
  const auto& fam = conlon_idempotents(group_from_spec("S3"));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(burnside_from_json(j["idempotents"][i]) == fam[static_cast<int>(i)]);
}

TEST_CASE("cli: group info, marks, bprod") {
  auto info = run({"group", "info", "perm:4:[(0 1 2 3);(0 2)]", "--json"});
  CHECK(info.code == exit_ok);
  auto j = json::parse(info.out);
  CHECK(j["order"] == 8);
  CHECK(j["element_classes"] == 5);
  CHECK(j["subgroup_classes"].size() == 8);

  auto marks = run({"marks", "S3", "--json"});
  CHECK(marks.code == exit_ok);
  auto m = json::parse(marks.out);
  CHECK(marks_from_json(m).rows == std::vector<std::vector<long>>{{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}});

  // Marks of G/C2 in S3 are (3,1,0,0); squared (9,1,0,0) = (3,1,0,0) + (6,0,0,0).
  auto p = run({"bprod", "S3", "1", "1"});
  CHECK(p.code == exit_ok);
  CHECK(p.out == "<1><1> = <1> + <0>\n");
  CHECK(run({"bprod", "S3", "1", "7"}).code == exit_usage);
}

TEST_CASE("cli: repring, ktheory, inertia") {
  auto r = run({"repring", "A4", "--json"});
  CHECK(r.code == exit_ok);
  auto j = json::parse(r.out);
  std::vector<int> dims;
  for (const auto& part : j["parts"])
    dims.push_back(part["dim"].get<int>());
  CHECK(dims == std::vector<int>{1, 1, 2, 0, 0});
  CHECK(j["passed"] == true);

  auto k = run({"ktheory", "S3", "--gset", "cosets:1", "--json"});
  CHECK(k.code == exit_ok);
  auto kj = json::parse(k.out);
  CHECK(kj["dim_total"] == 2);
  CHECK(kj["dim_source_sum"] == 2);
  CHECK(kj["parts"].size() == 4);

  auto k1 = run({"ktheory", "S3", "--gset", "regular", "--h", "2"});
  CHECK(k1.code == exit_ok);

  auto in = run({"inertia", "S3", "--gset", "cosets:1", "--h", "1", "--json"});
  CHECK(in.code == exit_ok);
  auto ij = json::parse(in.out);
  CHECK(ij["pairs_agree"] == true);
  REQUIRE(ij["summands"].size() == 1);
  CHECK(ij["summands"][0]["fixed_points"] == 1);

  CHECK(run({"inertia", "S3", "--gset", "cosets:1"}).code == exit_usage);
}

TEST_CASE("cli: verify") {
  auto r = run({"verify", "C1", "--suite", "all"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("summary: ") != std::string::npos);

  auto rj = run({"verify", "S3", "--suite", "conlon", "--json"});
  CHECK(rj.code == exit_ok);
  auto j = json::parse(rj.out);
  CHECK(j["suite"] == "conlon");
  CHECK(j["passed"] == true);
  CHECK(j["failures"] == 0);
  CHECK(!j["checks"].empty());

  CHECK(run({"verify", "S3", "--suite", "nope"}).code == exit_usage);
}

TEST_CASE("cli: exit codes and errors") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frob", "S3"}).code == exit_usage);
  auto bad = run({"marks", "S3x"});
  CHECK(bad.code == exit_usage);
  CHECK(bad.err.find("byte 3") != std::string::npos);
  CHECK(run({"marks", "C15xC15"}).code == exit_usage);
  CHECK(run({"marks", "C15xC15", "--max-order", "225"}).code == exit_ok);
  CHECK(run({"ktheory", "S3", "--gset", "cosets:9"}).code == exit_usage);
  CHECK(run({"idem", "--help"}).code == exit_ok);
}

TEST_CASE("cli: order cap from the environment") {
  ::setenv("BURNSIDE_MAX_ORDER", "10", 1);
  CHECK(run({"marks", "S4"}).code == exit_usage);
  CHECK(run({"marks", "S3"}).code == exit_ok);
  // The flag wins over the environment.
  CHECK(run({"marks", "S4", "--max-order", "24"}).code == exit_ok);
  ::unsetenv("BURNSIDE_MAX_ORDER");
  CHECK(run({"marks", "S4"}).code == exit_ok);
}

TEST_CASE("cli: identical invocations give identical output") {
  for (const char* spec : {"S3", "Q8", "C2xC4"}) {
    const std::vector<std::string> args = {"verify", spec, "--suite", "all", "--json"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
  }
  auto a = run({"idem", "A4"});
  CHECK(a.out == run({"idem", "A4"}).out);
}
