#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mly/free_monad.hpp"
#include "oracle.hpp"

using namespace mly;
using fixtures::machine;

namespace {

// Threaded extension: the letter is rewritten by each state it passes.
oracle::Word next_word(const oracle::Rows& d, const oracle::Rows& s, std::size_t a, const oracle::Word& es) {
  oracle::Word out;
  for (auto e : es) {
    out.push_back(d[a][e]);
    a = s[a][e];
  }
  return out;
}

std::size_t out_word(const oracle::Rows& s, std::size_t a, const oracle::Word& es) {
  for (auto e : es) a = s[a][e];
  return a;
}

std::vector<MealyMachine> endo_machines(std::size_t max_a, std::size_t max_e) {
  std::vector<MealyMachine> out;
  for (std::size_t na = 1; na <= max_a; ++na)
    for (std::size_t ne = 1; ne <= max_e; ++ne)
      for (auto& m : all_machines(FinSet(na), FinSet(na), FinSet(ne))) out.push_back(std::move(m));
  return out;
}

std::vector<Cell> generator_cells(const MealyMachine& f, const DoubleMonad& n) {
  std::vector<Cell> out;
  const auto id = FinFun::identity(f.input());
  for (auto& c : enumerate_cells(f, n.machine))
    if (c.f == id && c.g == id) out.push_back(std::move(c));
  return out;
}

}  // namespace

TEST_CASE("state words are listed in shortlex order", "[free_monad]") {
  const auto m = free_monad(fixtures::flipflop(), {.bound = 2});
  REQUIRE(m.words().size() == 7);
  CHECK(m.words()[0].empty());
  CHECK(m.words()[1] == Word{0});
  CHECK(m.words()[3] == Word{0, 0});
  CHECK(m.index_of({1, 0}) == 5);
  CHECK(m.multiply(1, 2) == m.index_of({0, 1}));
  CHECK_FALSE(m.multiply(3, 1));
}

TEST_CASE("word extensions agree with the recursion", "[free_monad]") {
  for (const auto& f : endo_machines(2, 2)) {
    const auto m = free_monad(f, {.bound = 3});
    const auto d = f.d().to_rows(), s = f.s().to_rows();
    for (const auto& w : m.words())
      for (Elem a = 0; a < f.input().size(); ++a) {
        CHECK(m.next_word(a, w) == next_word(d, s, a, w));
        CHECK(m.out_word(a, w) == out_word(s, a, w));
      }
  }
}

TEST_CASE("the default reading is a monad on every small generator", "[free_monad]") {
  for (const auto& f : endo_machines(2, 2)) REQUIRE(check_truncated_monad(free_monad(f, {.bound = 3})));
}

TEST_CASE("the default reading on random three-state generators", "[free_monad]") {
  Rng rng(42);
  for (int i = 0; i < 10; ++i) {
    const FinSet a(1 + uniform_below(rng, 2));
    const auto f = random_machine(rng, a, a, FinSet(3));
    CHECK(check_truncated_monad(free_monad(f, {.bound = 3})));
  }
}

TEST_CASE("the literal reading fails on the flip-flop", "[free_monad]") {
  const auto v = check_truncated_monad(free_monad(fixtures::flipflop(), literal_config(3)));
  REQUIRE_FALSE(v);
  CHECK(v.law() == "mc_2");
}

TEST_CASE("reversing the tail changes the output on a three-letter word", "[free_monad]") {
  const auto f = machine(2, 2, 2, {{0, 0}, {0, 0}}, {{0, 1}, {0, 0}});
  FreeMonadConfig rev{.bound = 3, .reverse_tail = true};
  const auto plain = free_monad(f, {.bound = 3});
  const auto reversed = free_monad(f, rev);
  CHECK(plain.out_word(0, {0, 0, 1}) != reversed.out_word(0, {0, 0, 1}));
  for (const auto& w : words_up_to(2, 2))
    for (Elem a = 0; a < 2; ++a) CHECK(plain.out_word(a, w) == reversed.out_word(a, w));
}

TEST_CASE("only the default reading survives the law search", "[free_monad]") {
  const auto entries = free_monad_law_search(3, 2, 2);
  REQUIRE(entries.size() == 8);
  std::size_t passing = 0;
  for (const auto& e : entries) {
    CHECK(e.generators_checked == 270);
    if (e.generators_failing == 0) {
      ++passing;
      CHECK(e.config == FreeMonadConfig{.bound = 3});
    } else {
      CHECK(e.first_failure);
      CHECK(e.witness);
    }
  }
  CHECK(passing == 1);
}

TEST_CASE("nu is a valid cell", "[free_monad]") {
  const auto m = free_monad(fixtures::flipflop(), {.bound = 3});
  const auto nu = m.nu();
  CHECK(check_cell(nu));
  CHECK(nu.alpha.table() == std::vector<Elem>{1, 2});
}

TEST_CASE("extensions of generator cells are unique", "[free_monad]") {
  std::vector<DoubleMonad> targets;
  for (std::size_t na = 1; na <= 2; ++na)
    for (std::size_t ne = 1; ne <= 2; ++ne)
      for (auto& n : enumerate_monads(na, ne)) targets.push_back(std::move(n));
  std::size_t checked = 0;
  for (const auto& n : targets)
    for (std::size_t ne = 1; ne <= 2; ++ne)
      for (const auto& f : all_machines(n.alphabet(), n.alphabet(), FinSet(ne)))
        for (const auto& gamma : generator_cells(f, n)) {
          const auto m = free_monad(f, {.bound = 2});
          const auto ext = free_monad_extend(m, n, gamma);
          CHECK(compose(ext, m.nu().alpha) == gamma.alpha);
          CHECK(check_truncated_morphism(m, n, ext));
          const auto all = all_free_extensions(m, n, gamma);
          REQUIRE(all.size() == 1);
          CHECK(all.front() == ext);
          ++checked;
        }
  CHECK(checked > 0);
}

TEST_CASE("generators are validated", "[free_monad]") {
  CHECK_THROWS_AS(free_monad(machine(1, 2, 1, {{0}}, {{1}})), InputError);
  CHECK_THROWS_AS(free_monad(fixtures::flipflop(), {.bound = 0}), InputError);
}

TEST_CASE("discrepancy report", "[free_monad]") {
  const auto r = free_monad_discrepancy_report(3, 2, 2);
  CHECK(r.at("default").at("pass") == true);
  CHECK(r.at("literal").at("pass") == false);
  CHECK(r.at("search").size() == 8);
  CHECK(r.at("consistent_readings").size() == 1);
  CHECK(r.contains("reverse_tail_first_divergence"));
}
