#pragma once

// Mealy machines as loose morphisms A ⇸ B, cells between them, and the
// structure of the pseudo double category: loose (cascade) composition,
// horizontal and vertical composition of cells, identities, and the
// associator/unitor cells.
//
// Orientation: loose_compose(m1, m2) is "m1 then m2": m1's output feeds
// m2's input. States of the composite are pairs (e1, e2), encoded
// lexicographically as e1*|E2| + e2.

#include <optional>
#include <random>

#include "mly/core.hpp"
#include "mly/finsets.hpp"
#include "mly/monoids.hpp"

namespace mly {

class MealyMachine {
 public:
  MealyMachine() = default;
  /// d : A×E -> E and s : A×E -> B, rows indexed by input letter.
  MealyMachine(FinSet input, FinSet output, FinSet states, Table d, Table s);

  const FinSet& input() const noexcept { return input_; }
  const FinSet& output() const noexcept { return output_; }
  const FinSet& states() const noexcept { return states_; }
  const Table& d() const noexcept { return d_; }
  const Table& s() const noexcept { return s_; }

  Elem next(Elem a, Elem e) const { return d_(a, e); }
  Elem out(Elem a, Elem e) const { return s_(a, e); }

  bool is_endo() const noexcept { return input_ == output_; }

  friend bool operator==(const MealyMachine&, const MealyMachine&) = default;

 private:
  FinSet input_;
  FinSet output_;
  FinSet states_;
  Table d_;
  Table s_;
};

/// Square with `top` over `bottom`, tight sides f (inputs) and g (outputs),
/// and state map alpha.
struct Cell {
  MealyMachine top;
  MealyMachine bottom;
  FinFun f;
  FinFun g;
  FinFun alpha;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A coherence cell together with the inverse of its state bijection.
struct CoherenceCell {
  Cell cell;
  FinFun inverse;
};

/// Throws InputError unless the boundaries type-check.
void require_cell_boundaries(const Cell& c);

/// "cell_d": d_bot(f a, α e) = α(d_top(a, e));
/// "cell_s": s_bot(f a, α e) = g(s_top(a, e)); first failing (a, e).
Verdict check_cell(const Cell& c);

/// i_X: one state, d(x, •) = •, s(x, •) = x.
MealyMachine identity_loose(const FinSet& x);

/// Vertical identity on a machine: identity tights and state map.
Cell identity_cell(const MealyMachine& m);

/// ι_f : i_A -> i_B over f on both sides.
Cell identity_tight_cell(const FinFun& f);

/// Cascade product: d(a,(e1,e2)) = (d1(a,e1), d2(s1(a,e1), e2)),
/// s(a,(e1,e2)) = s2(s1(a,e1), e2).
MealyMachine loose_compose(const MealyMachine& m1, const MealyMachine& m2);

/// (m1;m2);m3 -> m1;(m2;m3).
CoherenceCell associator(const MealyMachine& m1, const MealyMachine& m2, const MealyMachine& m3);
/// i_A;m -> m.
CoherenceCell left_unitor(const MealyMachine& m);
/// m;i_B -> m.
CoherenceCell right_unitor(const MealyMachine& m);
/// The inverse cell of a coherence cell.
CoherenceCell invert(const CoherenceCell& c);

enum class Direction { horizontal, vertical };

/// Horizontal: c1 beside c2 (c1.g must equal c2.f), state map α1×α2 over the
/// cascade composites. Vertical: c1 above c2, state map α2∘α1.
Cell cell_compose(Direction dir, const Cell& c1, const Cell& c2);
Cell horizontal(const Cell& c1, const Cell& c2);
Cell vertical(const Cell& c1, const Cell& c2);

/// "pentagon": both composites of associators ((m1;m2);m3);m4 -> m1;(m2;(m3;m4))
/// have the same state map. Witness at the first differing state.
Verdict check_pentagon(const MealyMachine& m1, const MealyMachine& m2, const MealyMachine& m3,
                       const MealyMachine& m4);
/// "triangle": (m1;i_B);m2 -> m1;m2 through the associator and the left unitor
/// agrees with the right unitor whiskered by m2.
Verdict check_triangle(const MealyMachine& m1, const MealyMachine& m2);

struct RunResult {
  Word output;
  Elem final_state = 0;
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Consumes w left to right: emit s(a, e), move to d(a, e).
RunResult run_machine(const MealyMachine& m, Elem e, const Word& w);

/// (w ⊗ e, w ⊙ e) for an endo machine; see monoids.hpp for the recursion.
WordExtension extend_actions(const MealyMachine& m, const Word& w, Elem e);

/// Parallel product: inputs A1×A2, outputs B1×B2, states E1×E2.
MealyMachine tensor_machines(const MealyMachine& m1, const MealyMachine& m2);

/// m1⊗m2 -> m2⊗m1 by swapping every component.
CoherenceCell symmetry_cell(const MealyMachine& m1, const MealyMachine& m2);

/// Every valid cell top -> bottom (all tights and state maps enumerated).
std::vector<Cell> enumerate_cells(const MealyMachine& top, const MealyMachine& bottom);

/// Every machine with the given boundary, in lexicographic order of (d, s).
std::vector<MealyMachine> all_machines(const FinSet& input, const FinSet& output,
                                       const FinSet& states);

// Seeded generators used by the randomized suites. The engine is a plain
// mt19937_64 and values are reduced with %, so sequences are stable.
using Rng = std::mt19937_64;
Elem uniform_below(Rng& rng, std::size_t n);
FinFun random_function(Rng& rng, const FinSet& dom, const FinSet& cod);
MealyMachine random_machine(Rng& rng, const FinSet& input, const FinSet& output,
                            const FinSet& states);

/// A valid cell out of `top` with the given tight boundary sets and bottom
/// state count. Returns nullopt when no attempt succeeds.
std::optional<Cell> random_cell_from(Rng& rng, const MealyMachine& top, const FinFun& f,
                                     const FinFun& g, const FinSet& bottom_states,
                                     int attempts = 200);

}  // namespace mly
