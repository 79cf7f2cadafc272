#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "mly/io.hpp"

using namespace mly;
using fixtures::machine;

namespace {

std::string error_path(const json& j) {
  try {
    parse_document(j);
  } catch (const InputError& e) {
    return e.path();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("finite sets as sizes or labelled objects", "[io]") {
  CHECK(parse_finset(json(3)) == FinSet(3));
  const auto x = parse_finset(json{{"size", 2}, {"labels", {"p", "q"}}});
  CHECK(x.label(0) == "p");
  CHECK(to_json(x) == json{{"size", 2}, {"labels", {"p", "q"}}});
  CHECK_THROWS_AS(parse_finset(json(-1)), InputError);
  CHECK_THROWS_AS(parse_finset(json{{"size", 2}, {"labels", {"p"}}}), InputError);
}

TEST_CASE("documents round-trip", "[io]") {
  const auto m = fixtures::absorbing();
  CHECK(std::get<DoubleMonad>(parse_document(to_json(m))) == m);
  CHECK(std::get<MealyMachine>(parse_document(to_json(m.machine))) == m.machine);
  const auto p = fixtures::absorbing_pair();
  CHECK(std::get<MatchedPair>(parse_document(to_json(p))) == p);
  CHECK(std::get<FinMonoid>(parse_document(to_json(p.monoid()))) == p.monoid());
  const FinFun f(FinSet(3), FinSet(2), {0, 1, 1});
  CHECK(std::get<FinFun>(parse_document(to_json(f))) == f);
  const auto c = identity_tight_cell(f);
  CHECK(std::get<Cell>(parse_document(to_json(c))) == c);
  const ModuleStructure mod{m, m.machine, m.mu};
  CHECK(std::get<ModuleStructure>(parse_document(to_json(mod))) == mod);
  const BicrossedRepresentation r{FinSet(2), m.mu, m.machine.d()};
  const auto rd = std::get<RepresentationDoc>(parse_document(to_json(m, r)));
  CHECK(rd.rep == r);
  CHECK(rd.monad == m);
}

TEST_CASE("labels survive a round trip", "[io]") {
  const auto j = read_json(std::string(MLY_EXAMPLES_DIR) + "/absorbing.json");
  const auto m = std::get<DoubleMonad>(parse_document(j));
  CHECK(m.states().label(1) == "z");
  const auto again = to_json(m);
  CHECK(again.at("machine").at("states").at("labels") == json{"e0", "z"});
}

TEST_CASE("errors carry a JSON pointer", "[io]") {
  auto j = to_json(fixtures::absorbing());
  j["machine"]["d"][1][0] = 5;
  CHECK(error_path(j) == "/machine/d/1/0");

  j = to_json(fixtures::absorbing());
  j.erase("e0");
  CHECK(error_path(j) == "/e0");

  j = to_json(fixtures::absorbing());
  j["mu"][0] = json::array({0});
  CHECK(error_path(j).rfind("/mu", 0) == 0);

  CHECK(error_path(json{{"kind", "unicorn"}}) == "/kind");
  CHECK(error_path(json::array()) != "<none>");
}

TEST_CASE("bundles", "[io]") {
  const auto one = parse_bundle(to_json(fixtures::flipflop()));
  CHECK(one.size() == 1);
  const auto two = parse_bundle(json::array({to_json(fixtures::flipflop()), to_json(FinSet(2))}));
  REQUIRE(two.size() == 2);
  CHECK(std::holds_alternative<FinSet>(two[1]));
}

TEST_CASE("malformed text is an input error", "[io]") {
  std::istringstream in("{\"kind\": ");
  CHECK_THROWS_AS(read_json(in, "stdin"), InputError);
  CHECK_THROWS_AS(read_json("/nonexistent/file.json"), InputError);
}

TEST_CASE("verdicts and witnesses", "[io]") {
  CHECK(to_json(Verdict::ok()) == json{{"pass", true}});
  const auto v = Verdict::fail("ma_2", {{"e", 1}}, 0, 1);
  CHECK(to_json(v) ==
        json{{"pass", false}, {"witness", {{"axiom", "ma_2"}, {"at", {{"e", 1}}}, {"lhs", 0}, {"rhs", 1}}}});
}

TEST_CASE("every example parses", "[io]") {
  for (const char* name : {"absorbing", "broken", "cospan", "direct_pair", "flipflop", "surjection", "swap"}) {
    INFO(name);
    CHECK_NOTHROW(parse_bundle(read_json(std::string(MLY_EXAMPLES_DIR) + "/" + name + ".json")));
  }
}
