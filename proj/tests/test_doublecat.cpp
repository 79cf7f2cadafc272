#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mly/doublecat.hpp"

using namespace mly;
using fixtures::machine;

TEST_CASE("companions exist for every function", "[doublecat]") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t k = 0; k <= 3; ++k)
      for (const auto& f : all_functions(FinSet(n), FinSet(k))) {
        const auto c = companion(f);
        CHECK(c.machine.states().size() == 1);
        CHECK(check_companion_identities(f, c));
      }
}

TEST_CASE("a wrong companion cell is rejected", "[doublecat]") {
  const FinFun f(FinSet(2), FinSet(2), {0, 0});
  const auto c = companion(FinFun(FinSet(2), FinSet(2), {0, 1}));
  CHECK_FALSE(check_companion_identities(f, c));
}

TEST_CASE("conjoints exist exactly for bijections", "[doublecat]") {
  const FinFun swap(FinSet(2), FinSet(2), {1, 0});
  const auto c = conjoint_search(swap);
  REQUIRE(c);
  CHECK(check_conjoint_identities(swap, *c));
  CHECK(c->machine.s().data() == std::vector<Elem>{1, 0});

  CHECK_FALSE(conjoint_search(FinFun(FinSet(3), FinSet(2), {0, 1, 1})));
  CHECK_FALSE(conjoint_search(FinFun(FinSet(1), FinSet(2), {0})));
  CHECK_FALSE(conjoint_search(FinFun(FinSet(2), FinSet(2), {1, 1})));
  CHECK(conjoint_search(FinFun(FinSet(0), FinSet(0), {})));
}

TEST_CASE("larger conjoint carriers do not help", "[doublecat]") {
  CHECK_FALSE(conjoint_search(FinFun(FinSet(2), FinSet(1), {0, 0}), 2));
  CHECK(conjoint_search(FinFun::identity(FinSet(2)), 2));
}

TEST_CASE("cotabulator of an identity has the same carrier", "[doublecat]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto c = cotabulator(identity_loose(FinSet(n)));
    CHECK(c.carrier().size() == n);
    CHECK(check_cell(c.tau));
  }
}

TEST_CASE("cotabulator of a flip-flop collapses everything", "[doublecat]") {
  const auto c = cotabulator(fixtures::flipflop());
  CHECK(c.carrier().size() == 1);
}

TEST_CASE("cotabulator of a constant machine", "[doublecat]") {
  // A = {0, 1}, B = {0, 1}, s ≡ 0: both inputs glue to output 0, output 1 is free.
  const auto m = machine(2, 2, 1, {{0}, {0}}, {{0}, {0}});
  const auto c = cotabulator(m);
  CHECK(c.carrier().size() == 2);
}

TEST_CASE("cells into identities factor uniquely through tau", "[doublecat]") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_machine(rng, FinSet(1 + uniform_below(rng, 2)), FinSet(1 + uniform_below(rng, 2)),
                                  FinSet(1 + uniform_below(rng, 2)));
    const auto c = cotabulator(m);
    for (std::size_t nx = 0; nx <= 2; ++nx) {
      const auto ix = identity_loose(FinSet(nx));
      for (const auto& xi : enumerate_cells(m, ix)) {
        const auto h = factor_through_cotabulator(c, xi);
        CHECK(vertical(c.tau, identity_tight_cell(h)) == xi);
        std::size_t count = 0;
        for (const auto& k : all_functions(c.carrier(), FinSet(nx)))
          if (vertical(c.tau, identity_tight_cell(k)) == xi) ++count;
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("factoring rejects cells that are not into identities", "[doublecat]") {
  const auto m = fixtures::flipflop();
  const auto c = cotabulator(m);
  CHECK_THROWS_AS(factor_through_cotabulator(c, identity_cell(m)), InputError);
}

TEST_CASE("the cell into i_1 is unique", "[doublecat]") {
  const auto one = identity_loose(FinSet(1));
  for (std::size_t na = 0; na <= 2; ++na)
    for (std::size_t nb = 0; nb <= 2; ++nb)
      for (std::size_t ne = 1; ne <= 2; ++ne)
        for (const auto& m : all_machines(FinSet(na), FinSet(nb), FinSet(ne))) {
          const auto cells = enumerate_cells(m, one);
          REQUIRE(cells.size() == 1);
          CHECK(cells.front() == terminal_cell(m));
        }
}

TEST_CASE("double pullbacks mediate uniquely", "[doublecat]") {
  const FinFun f(FinSet(3), FinSet(2), {0, 0, 1});
  const FinFun g(FinSet(2), FinSet(2), {1, 0});
  const auto u = machine(2, 1, 2, {{1, 0}, {0, 0}}, {{0, 0}, {0, 0}});
  const auto base = double_pullback(f, g);
  CHECK(base.pb.object.size() == 3);
  std::size_t pairs = 0;
  for (const auto& xl : enumerate_cells(u, identity_loose(f.dom())))
    for (const auto& xr : enumerate_cells(u, identity_loose(g.dom()))) {
      if (!(vertical(xl, identity_tight_cell(f)) == vertical(xr, identity_tight_cell(g)))) {
        CHECK_THROWS_AS(double_pullback(f, g, xl, xr), InputError);
        continue;
      }
      ++pairs;
      const auto dp = double_pullback(f, g, xl, xr);
      REQUIRE(dp.mediating);
      std::size_t count = 0;
      for (const auto& k : enumerate_cells(u, identity_loose(dp.pb.object)))
        if (vertical(k, dp.proj_left) == xl && vertical(k, dp.proj_right) == xr) {
          ++count;
          CHECK(k == *dp.mediating);
        }
      CHECK(count == 1);
    }
  CHECK(pairs > 0);
}

TEST_CASE("interchange on random grids", "[doublecat]") {
  Rng rng(2024);
  for (int i = 0; i < 30; ++i) {
    const auto g = random_grid(rng, 2);
    CHECK(check_interchange(g));
  }
}

TEST_CASE("interchange reports invalid cells", "[doublecat]") {
  const auto id = identity_cell(fixtures::flipflop());
  CellGrid g{id, id, id, id};
  CHECK(check_interchange(g));
  g.top_left.alpha = FinFun(FinSet(2), FinSet(2), {0, 0});
  const auto v = check_interchange(g);
  REQUIRE_FALSE(v);
  CHECK(v.law() == "cell");
  CHECK(v.witness->at.at("position") == "top_left");
}

TEST_CASE("swap is adjoint to its inverse with singleton carriers", "[doublecat]") {
  const auto found = search_loose_adjunctions(FinSet(2), FinSet(2), 1);
  REQUIRE_FALSE(found.empty());
  for (const auto& adj : found) {
    const auto v = check_loose_adjunction(adj.l, adj.r, adj.eta, adj.epsilon);
    CHECK(v.verdict);
    CHECK(v.singleton_carriers);
  }
  bool saw_swap = false;
  for (const auto& adj : found)
    if (adj.l.s().data() == std::vector<Elem>{1, 0}) saw_swap = true;
  CHECK(saw_swap);
}

TEST_CASE("searching two-state carriers finds only singleton adjunctions", "[doublecat]") {
  for (const auto& adj : search_loose_adjunctions(FinSet(1), FinSet(1), 2))
    CHECK(check_loose_adjunction(adj.l, adj.r, adj.eta, adj.epsilon).singleton_carriers);
}

TEST_CASE("no small set is initial", "[doublecat]") {
  const auto r = refute_initial_objects(3, 2);
  REQUIRE(r.size() == 4);
  for (const auto& x : r) {
    REQUIRE(x.machine);
    CHECK(cells_from_identity(FinSet(x.candidate_size), *x.machine).size() == x.cell_count);
    CHECK(x.cell_count != 1);
  }
}

TEST_CASE("no tabulator among small carriers", "[doublecat]") {
  const auto m = fixtures::flipflop();
  const auto t = search_tabulator(m, 4, 1);
  CHECK_FALSE(t.found);
  CHECK(t.candidates_examined > 0);
}
