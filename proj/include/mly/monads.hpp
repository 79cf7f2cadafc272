#pragma once

// Monads in the double category of Mealy machines: an endo machine on A with
// a unit state e0 and a multiplication mu on its states. Also the tight and
// loose morphisms between them.
//
// Axiom labels:
//   ac_1  s(a, e0) = a                    ac_2  d(a, e0) = e0
//   mc_1  s(a, mu(e,e')) = s(s(a,e), e')
//   mc_2  d(a, mu(e,e')) = mu(d(a,e), d(s(a,e), e'))
//   ma_1  mu associative                  ma_2  e0 two-sided unit

#include <functional>
#include <optional>

#include "mly/mealy.hpp"
#include "mly/monoids.hpp"

namespace mly {

struct DoubleMonad {
  MealyMachine machine;
  Elem e0 = 0;
  Table mu;

  const FinSet& alphabet() const noexcept { return machine.input(); }
  const FinSet& states() const noexcept { return machine.states(); }

  friend bool operator==(const DoubleMonad&, const DoubleMonad&) = default;
};

/// Validates shapes and indices: endo machine, e0 in range, mu |E|x|E|.
void require_monad_shape(const DoubleMonad& m);

/// Order of evaluation: ma_1, ma_2, ac_1, ac_2, mc_1, mc_2.
Verdict check_monad(const DoubleMonad& m);

/// The same suite when mu is only partially defined (nullopt = undefined);
/// equations whose terms are undefined are skipped.
using PartialMult = std::function<std::optional<Elem>(Elem, Elem)>;
Verdict check_monad_laws(const MealyMachine& machine, Elem e0, const PartialMult& mu);

/// The monoid (E, mu, e0).
FinMonoid state_monoid(const DoubleMonad& m);

/// Unit cell i_A -> M and multiplication cell M;M -> M, both over identities.
struct MonadCells {
  Cell eta;
  Cell mu;
};
MonadCells monad_cells(const DoubleMonad& m);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t estimate, std::size_t budget);
  std::size_t estimate() const noexcept { return estimate_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t estimate_;
  std::size_t budget_;
};

inline constexpr std::size_t default_monad_budget = 10'000'000;

/// Candidates examined by enumerate_monads: monoid tables with the unit row
/// and column fixed, plus the free rows of s and of d.
std::size_t monad_search_estimate(std::size_t size_a, std::size_t size_e);

/// Every monad with |A| = size_a and |E| = size_e, ordered by (d, s, e0, mu).
std::vector<DoubleMonad> enumerate_monads(std::size_t size_a, std::size_t size_e,
                                          std::size_t budget = default_monad_budget);

/// Throws InputError when the monad laws fail.
MatchedPair derive_matched_pair(const DoubleMonad& m);

/// The trivial monad on A: one state, s(a, •) = a.
DoubleMonad trivial_monad(const FinSet& a);

// Tight morphisms --------------------------------------------------------

struct TightMonadMorphism {
  FinFun f;      // A -> B
  FinFun alpha;  // E -> E'
};

/// Order: eta (alpha(e0) = e0'), mu, then the cell equations cell_d, cell_s.
Verdict check_tight_monad_morphism(const DoubleMonad& src, const DoubleMonad& dst,
                                   const TightMonadMorphism& t);

/// (e, w) -> (alpha e, f applied letterwise to w).
BicrossedElement apply_induced_hom(const TightMonadMorphism& t, const BicrossedElement& x);

struct InducedHom {
  std::vector<BicrossedElement> domain;
  std::vector<BicrossedElement> image;
};

/// The table of the induced map on (e, w) with |w| <= bound.
InducedHom induced_bicrossed_hom(const TightMonadMorphism& t, const DoubleMonad& src,
                                 std::size_t bound);

/// "unit" and "mult" on all pairs of combined word length <= bound.
Verdict check_induced_hom(const DoubleMonad& src, const DoubleMonad& dst,
                          const TightMonadMorphism& t, std::size_t bound);

// Loose maps -------------------------------------------------------------

/// U : A ⇸ B with states X, together with delta : E×X -> X and
/// sigma : E×X -> E' (rows indexed by the state of M).
struct LooseMonadMap {
  MealyMachine machine;
  Table delta;
  Table sigma;
};

/// Order: dl_2, dl_3.1, dl_3.2, dl_1. With fugality_only, only dl_3.2.
Verdict check_loose_monad_map(const DoubleMonad& src, const DoubleMonad& dst,
                              const LooseMonadMap& u, bool fugality_only = false);

}  // namespace mly
