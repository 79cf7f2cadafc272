#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mly/monoids.hpp"
#include "oracle.hpp"

using namespace mly;
using fixtures::rows;

TEST_CASE("cyclic groups satisfy the monoid laws", "[monoids]") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(check_monoid_laws(FinMonoid::cyclic_group(n)));
  CHECK(check_monoid_laws(FinMonoid::trivial()));
}

TEST_CASE("monoid law witnesses", "[monoids]") {
  // Left projection x·y = x has no two-sided unit.
  const FinMonoid proj(FinSet(2), 0, rows({{0, 0}, {1, 1}}, 2));
  const auto v = check_monoid_laws(proj);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "unit_left");

  // Unital but not associative: 1·1 = 2, 1·2 = 0, 2·1 = 1, 2·2 = 2.
  const FinMonoid bad(FinSet(3), 0, rows({{0, 1, 2}, {1, 2, 0}, {2, 1, 2}}, 3));
  const auto w = check_monoid_laws(bad);
  REQUIRE_FALSE(w);
  CHECK(w.law() == "assoc");
}

TEST_CASE("actions", "[monoids]") {
  const auto z2 = FinMonoid::cyclic_group(2);
  CHECK(check_action_laws(MonoidAction(z2, FinSet(2), rows({{0, 1}, {1, 0}}, 2), Side::left)));
  CHECK(check_action_laws(MonoidAction(z2, FinSet(2), rows({{0, 1}, {1, 0}}, 2), Side::right)));
  const auto v = check_action_laws(MonoidAction(z2, FinSet(2), rows({{0, 1}, {0, 0}}, 2), Side::left));
  REQUIRE_FALSE(v);
  CHECK(v.law() == "compat");
  CHECK(check_action_laws(MonoidAction(z2, FinSet(2), rows({{1, 0}, {1, 0}}, 2), Side::left)).law() ==
        "unit");
}

TEST_CASE("word extension agrees with the recursive definition", "[monoids]") {
  oracle::each_table(2, 2, 2, [](const oracle::Rows& d) {
    oracle::each_table(2, 2, 3, [&](const oracle::Rows& s) {
      for (const auto& w : words_up_to(2, 3))
        for (Elem e = 0; e < 2; ++e) {
          const auto x = extend_word(rows(d, 2), rows(s, 2), w, e);
          CHECK(x.state == oracle::act_state(d, w, e));
          CHECK(x.word == oracle::act_word(d, s, w, e));
        }
    });
  });
}

TEST_CASE("head letter acts last", "[monoids]") {
  // d(0, -) = 1, d(1, -) = 0: the result is decided by the first letter.
  const auto d = rows({{1, 1}, {0, 0}}, 2);
  const auto s = rows({{0, 0}, {1, 1}}, 2);
  CHECK(extend_word(d, s, {0, 1}, 0).state == 1);
  CHECK(extend_word(d, s, {1, 0}, 0).state == 0);
  CHECK_THROWS_AS(extend_word(d, s, {2}, 0), InputError);
}

TEST_CASE("absorbing pair is matched", "[monoids]") {
  const auto p = fixtures::absorbing_pair();
  CHECK(check_bicrossed_equations(p, 4));
  CHECK(check_bicrossed_product_laws(p, 4));
  CHECK(bicrossed_cospan_relations(p, 3));
}

TEST_CASE("a broken output table is caught on short words", "[monoids]") {
  auto s = fixtures::absorbing_pair().s();
  s(0, 1) = 1;
  const MatchedPair p(fixtures::absorbing_monoid(), FinSet(2), fixtures::absorbing_pair().d(), s);
  const auto v = check_bicrossed_equations(p, 4);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "word_action_mult");
  CHECK(v.witness->at.at("as").size() <= 2);
}

TEST_CASE("the twisted state equation is checked on its own", "[monoids]") {
  // E = {1, g, z}: g·g = 1, z absorbing. One letter, s constant, d(a, g) = 1
  // and d(a, z) = g.
  const FinMonoid m(FinSet(3), 0, rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}, 3));
  const MatchedPair p(m, FinSet(1), rows({{0, 0, 1}}, 3), rows({{0, 0, 0}}, 3));
  const auto v = check_bicrossed_equations(p, 4);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "bicrossed_state");
  CHECK(v.witness->at == json{{"as", {0}}, {"e", 2}, {"e2", 2}});
}

TEST_CASE("multiplication agrees with the recursive definition", "[monoids]") {
  const auto p = fixtures::absorbing_pair();
  const auto d = p.d().to_rows(), s = p.s().to_rows(), mu = p.monoid().mult().to_rows();
  const auto elems = bicrossed_elements(p, 2);
  CHECK(elems.size() == 2 * 7);
  CHECK(elems.front() == BicrossedElement{0, {}});
  CHECK(elems[1] == BicrossedElement{0, {0}});
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const auto z = bicrossed_multiply(x, y, p);
      const auto expected = oracle::bicrossed(d, s, mu, {x.e, x.w}, {y.e, y.w});
      CHECK(z.e == expected.first);
      CHECK(z.w == expected.second);
    }
}

TEST_CASE("trivial actions give the direct product", "[monoids]") {
  const auto z2 = FinMonoid::cyclic_group(2);
  const MatchedPair p(z2, FinSet(2), rows({{0, 1}, {0, 1}}, 2), rows({{0, 0}, {1, 1}}, 2));
  REQUIRE(check_bicrossed_equations(p, 4));
  for (const auto& x : bicrossed_elements(p, 2))
    for (const auto& y : bicrossed_elements(p, 2)) {
      const auto z = bicrossed_multiply(x, y, p);
      CHECK(z.e == z2(x.e, y.e));
      CHECK(z.w == concat(x.w, y.w));
    }
  CHECK(bicrossed_multiply({1, {0, 1}}, {1, {1}}, p) == BicrossedElement{0, {0, 1, 1}});
}

TEST_CASE("a non-matched pair breaks associativity of the product", "[monoids]") {
  const FinMonoid m(FinSet(3), 0, rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}, 3));
  const MatchedPair p(m, FinSet(1), rows({{0, 0, 1}}, 3), rows({{0, 0, 0}}, 3));
  const auto v = check_bicrossed_product_laws(p, 4);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "assoc");
}
