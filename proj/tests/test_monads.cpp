#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mly/monads.hpp"
#include "oracle.hpp"

using namespace mly;
using fixtures::machine;
using fixtures::rows;

TEST_CASE("absorbing monad passes, a broken mu fails unitality", "[monads]") {
  CHECK(check_monad(fixtures::absorbing()));
  auto m = fixtures::absorbing();
  m.mu = rows({{0, 1}, {0, 1}}, 2);
  const auto v = check_monad(m);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "ma_2");
  CHECK(v.witness->at == json{{"e", 1}, {"side", "right"}});
}

TEST_CASE("law order follows the axiom list", "[monads]") {
  auto m = fixtures::absorbing();
  m.machine = machine(2, 2, 2, {{0, 1}, {0, 1}}, {{1, 0}, {1, 0}});
  CHECK(check_monad(m).law() == "ac_1");
  m.machine = machine(2, 2, 2, {{1, 1}, {0, 1}}, {{0, 0}, {1, 0}});
  CHECK(check_monad(m).law() == "ac_2");
  m.machine = machine(2, 2, 2, {{0, 1}, {0, 1}}, {{0, 1}, {1, 0}});
  CHECK(check_monad(m).law() == "mc_1");
}

TEST_CASE("monad shapes are validated", "[monads]") {
  auto m = fixtures::absorbing();
  m.e0 = 2;
  CHECK_THROWS_AS(check_monad(m), InputError);
  m = fixtures::absorbing();
  m.mu = Table(2, 1);
  CHECK_THROWS_AS(check_monad(m), InputError);
  m = fixtures::absorbing();
  m.machine = machine(2, 1, 2, {{0, 1}, {0, 1}}, {{0, 0}, {0, 0}});
  CHECK_THROWS_AS(check_monad(m), InputError);
}

TEST_CASE("enumeration matches brute force table by table", "[monads]") {
  for (auto [na, ne] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    INFO("|A| = " << na << ", |E| = " << ne);
    const auto got = enumerate_monads(na, ne);
    const auto expected = oracle::monads_brute(na, ne);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(fixtures::tables_of(got[i]) == expected[i]);
  }
}

TEST_CASE("monad counts", "[monads]") {
  CHECK(enumerate_monads(1, 1).size() == 1);
  CHECK(enumerate_monads(2, 1).size() == 1);
  CHECK(enumerate_monads(1, 2).size() == 8);
  CHECK(enumerate_monads(2, 2).size() == 32);
}

TEST_CASE("larger counts agree with the staged count", "[monads][slow]") {
  CHECK(oracle::count_monads_staged(2, 3) == 1539);
  CHECK(oracle::count_monads_staged(3, 2) == 158);
  CHECK(enumerate_monads(2, 3).size() == 1539);
  CHECK(enumerate_monads(3, 2).size() == 158);
}

TEST_CASE("enumeration refuses oversized searches", "[monads]") {
  CHECK(monad_search_estimate(3, 3) > default_monad_budget);
  try {
    enumerate_monads(3, 3);
    FAIL("no budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.estimate() == monad_search_estimate(3, 3));
    CHECK(e.budget() == default_monad_budget);
  }
  CHECK_THROWS_AS(enumerate_monads(2, 2, 10), BudgetExceeded);
}

TEST_CASE("every enumerated monad yields a matched pair", "[monads]") {
  for (const auto& m : enumerate_monads(2, 2)) {
    const auto p = derive_matched_pair(m);
    CHECK(check_bicrossed_equations(p, 4));
    CHECK(p.monoid() == state_monoid(m));
  }
  auto bad = fixtures::absorbing();
  bad.mu = rows({{0, 1}, {0, 1}}, 2);
  CHECK_THROWS_AS(derive_matched_pair(bad), InputError);
}

TEST_CASE("a matched pair read as a machine is a monad", "[monads]") {
  const auto p = fixtures::absorbing_pair();
  const DoubleMonad m{MealyMachine(p.alphabet(), p.alphabet(), p.monoid().carrier(), p.d(), p.s()),
                      p.monoid().unit(), p.monoid().mult()};
  CHECK(m == fixtures::absorbing());
  CHECK(check_monad(m));
}

TEST_CASE("unit and multiplication cells are valid", "[monads]") {
  for (const auto& m : enumerate_monads(2, 2)) {
    const auto c = monad_cells(m);
    CHECK(check_cell(c.eta));
    CHECK(check_cell(c.mu));
    CHECK(c.mu.top == loose_compose(m.machine, m.machine));
  }
}

TEST_CASE("trivial monad", "[monads]") {
  const auto t = trivial_monad(FinSet(3));
  CHECK(check_monad(t));
  CHECK(t.states().size() == 1);
  CHECK(t.machine == identity_loose(FinSet(3)));
}

TEST_CASE("partial multiplications skip undefined terms", "[monads]") {
  const auto m = fixtures::absorbing();
  PartialMult only_unit = [](Elem x, Elem y) -> std::optional<Elem> {
    if (x == 0) return y;
    if (y == 0) return x;
    return std::nullopt;
  };
  CHECK(check_monad_laws(m.machine, 0, only_unit));
}

TEST_CASE("tight monad morphisms", "[monads]") {
  const auto m = fixtures::absorbing();
  const auto t = trivial_monad(FinSet(2));
  const TightMonadMorphism id{FinFun::identity(FinSet(2)), FinFun::identity(FinSet(2))};
  CHECK(check_tight_monad_morphism(m, m, id));
  CHECK(check_induced_hom(m, m, id, 3));

  const TightMonadMorphism in{FinFun::identity(FinSet(2)), FinFun(FinSet(1), FinSet(2), {0})};
  CHECK(check_tight_monad_morphism(t, m, in));
  CHECK(check_induced_hom(t, m, in, 3));

  const TightMonadMorphism out{FinFun::identity(FinSet(2)), FinFun::to_terminal(FinSet(2))};
  const auto v = check_tight_monad_morphism(m, t, out);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "cell_s");

  const TightMonadMorphism wrong_unit{FinFun::identity(FinSet(2)), FinFun(FinSet(1), FinSet(2), {1})};
  CHECK(check_tight_monad_morphism(t, m, wrong_unit).law() == "eta");
}

TEST_CASE("induced map on bicrossed elements", "[monads]") {
  const auto m = fixtures::absorbing();
  const TightMonadMorphism t{FinFun::identity(FinSet(2)), FinFun::identity(FinSet(2))};
  const auto h = induced_bicrossed_hom(t, m, 2);
  CHECK(h.domain == h.image);
  CHECK(h.domain.size() == 2 * 7);
  const TightMonadMorphism swap_letters{FinFun(FinSet(2), FinSet(2), {1, 0}), FinFun::identity(FinSet(2))};
  CHECK(apply_induced_hom(swap_letters, {1, {0, 0, 1}}) == BicrossedElement{1, {1, 1, 0}});
}

TEST_CASE("loose monad maps", "[monads]") {
  const auto m = fixtures::absorbing();
  LooseMonadMap u{identity_loose(FinSet(2)), Table(2, 1, 0), rows({{0}, {1}}, 1)};
  CHECK(check_loose_monad_map(m, m, u));

  u.sigma = rows({{0}, {0}}, 1);
  CHECK(check_loose_monad_map(m, m, u, true));
  const auto v = check_loose_monad_map(m, m, u);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "dl_1");

  u.sigma = rows({{1}, {1}}, 1);
  CHECK(check_loose_monad_map(m, m, u).law() == "dl_2");

  u.sigma = rows({{0}, {1}}, 1);
  u.delta = Table(3, 1, 0);
  CHECK_THROWS_AS(check_loose_monad_map(m, m, u), InputError);
}
