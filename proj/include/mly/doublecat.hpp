#pragma once

// Universal constructions in the double category of Mealy machines over
// finite sets: companions and conjoints, cotabulators, the terminal object,
// double pullbacks, the interchange law, loose adjunctions, and bounded
// searches that refute initial objects and tabulators.

#include <optional>

#include "mly/mealy.hpp"

namespace mly {

/// f_* : A ⇸ B with eta : i_A -> f_* (tights id, f) and
/// epsilon : f_* -> i_B (tights f, id).
struct Companion {
  MealyMachine machine;
  Cell epsilon;
  Cell eta;
};

/// Verifies both companion identities; throws std::logic_error on failure.
Companion companion(const FinFun& f);

/// "vertical": eta then epsilon is ι_f. "horizontal": eta beside epsilon,
/// whiskered by unitors, is the identity cell of f_*.
Verdict check_companion_identities(const FinFun& f, const Companion& c);

/// f^* : B ⇸ A with unit : i_A -> f^* (tights f, id_A) and
/// counit : f^* -> i_B (tights id_B, f).
struct Conjoint {
  MealyMachine machine;
  Cell unit;
  Cell counit;
};

Verdict check_conjoint_identities(const FinFun& f, const Conjoint& c);

/// Exhaustive search over machines B ⇸ A with 1..state_bound states and all
/// unit/counit cells. The bijectivity precheck is compared against the
/// search result; a disagreement throws std::logic_error.
std::optional<Conjoint> conjoint_search(const FinFun& f, std::size_t state_bound = 1);

struct Cotabulator {
  Coproduct sum;       // A + B
  Coequalizer coeq;    // quotient of A + B
  Cell tau;            // m -> i_carrier
  const FinSet& carrier() const { return coeq.object; }
};

/// Carrier = coequalizer of inj_B∘s and inj_A∘π_A on A×E.
Cotabulator cotabulator(const MealyMachine& m);

/// The unique h with ξ = tau ; ι_h. Throws InputError when ξ does not end at
/// an identity loose morphism, LawViolation when ξ does not factor.
FinFun factor_through_cotabulator(const Cotabulator& c, const Cell& xi);

/// The unique cell m -> i_1.
Cell terminal_cell(const MealyMachine& m);

struct DoublePullback {
  Pullback pb;
  Cell proj_left;   // ι over pb.left
  Cell proj_right;  // ι over pb.right
  std::optional<Cell> mediating;
};

DoublePullback double_pullback(const FinFun& f, const FinFun& g);

/// With witnesses ξ_A : u -> i_A and ξ_B : u -> i_B (same top) satisfying
/// ξ_A ; ι_f = ξ_B ; ι_g, also builds the mediating cell u -> i_P and checks
/// that it recomposes to both witnesses.
DoublePullback double_pullback(const FinFun& f, const FinFun& g, const Cell& xi_left,
                               const Cell& xi_right);

/// Cells laid out as
///   top_left    | top_right
///   ------------+-------------
///   bottom_left | bottom_right
struct CellGrid {
  Cell top_left;
  Cell top_right;
  Cell bottom_left;
  Cell bottom_right;
};

/// Horizontal-then-vertical versus vertical-then-horizontal, compared as
/// whole cells. Non-composable grids throw InputError.
Verdict check_interchange(const CellGrid& grid);

/// A random valid grid with every object and state set of size 1..max_size.
CellGrid random_grid(Rng& rng, std::size_t max_size);

struct AdjunctionVerdict {
  Verdict verdict;
  bool singleton_carriers = false;
};

/// eta : i_A -> l;r and epsilon : r;l -> i_B, both over identity tights.
/// Checks both cells and both zig-zag identities (coherence cells applied
/// explicitly). singleton_carriers reports |E_l| = |E_r| = 1 separately.
AdjunctionVerdict check_loose_adjunction(const MealyMachine& l, const MealyMachine& r,
                                         const Cell& eta, const Cell& epsilon);

struct LooseAdjunction {
  MealyMachine l;
  MealyMachine r;
  Cell eta;
  Cell epsilon;
};

/// Every adjunction l ⊣ r with |A|, |B| fixed and 0..state_bound states on
/// each side.
std::vector<LooseAdjunction> search_loose_adjunctions(const FinSet& a, const FinSet& b,
                                                      std::size_t state_bound);

/// Every cell i_U -> m.
std::vector<Cell> cells_from_identity(const FinSet& u, const MealyMachine& m);

struct InitialRefutation {
  std::size_t candidate_size = 0;
  std::optional<MealyMachine> machine;  // a machine with != 1 cell from i_U
  std::size_t cell_count = 0;
};

/// For each candidate U with |U| <= max_candidate, the first machine (by
/// increasing |A|, |B|, |E| <= machine_bound) admitting zero or several cells
/// from i_U.
std::vector<InitialRefutation> refute_initial_objects(std::size_t max_candidate,
                                                      std::size_t machine_bound);

struct TabulatorSearch {
  std::size_t carrier_bound = 0;
  std::size_t test_bound = 0;
  std::size_t candidates_examined = 0;
  std::optional<Cell> found;  // a cell i_T -> m passing every test
};

/// Looks for a tabulator of m among carriers T with |T| <= carrier_bound,
/// testing the universal property against all cells i_X -> m, |X| <= test_bound.
TabulatorSearch search_tabulator(const MealyMachine& m, std::size_t carrier_bound,
                                 std::size_t test_bound = 1);

}  // namespace mly
