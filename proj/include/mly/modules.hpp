#pragma once

// Left modules over a monad M on A, and the equivalent description as
// representations of the bicrossed product E⋈A*.
//
// A module is a machine P : A ⇸ X (states Q, tables delta, sigma) with an
// action xi : E×Q -> Q. Axiom labels:
//   ax_1  sigma(a, xi(e,q)) = sigma(s(a,e), q)
//   ax_2  delta(a, xi(e,q)) = xi(d(a,e), delta(s(a,e), q))
//   ax_3  xi(e0, q) = q
//   ax_4  xi(mu(e,e'), q) = xi(e, xi(e', q))
// ax_1_word and ax_2_word are the same equations for words a of length <= 3,
// with delta and sigma extended inner-first.
//
// A representation is a set Q with alpha : E×Q -> Q and beta : A×Q -> Q;
// beta extends to words inner-first and the matching relation is
//   beta(w, alpha(e, q)) = alpha(w ⊗ e, beta(w ⊙ e, q)).

#include "mly/monads.hpp"

namespace mly {

struct ModuleStructure {
  DoubleMonad monad;
  MealyMachine machine;  // A ⇸ X, states Q
  Table xi;              // E x Q

  friend bool operator==(const ModuleStructure&, const ModuleStructure&) = default;
};

struct BicrossedRepresentation {
  FinSet set;
  Table alpha;  // E x Q
  Table beta;   // A x Q

  friend bool operator==(const BicrossedRepresentation&, const BicrossedRepresentation&) = default;
};

void require_module_shape(const ModuleStructure& m);
void require_representation_shape(const DoubleMonad& m, const BicrossedRepresentation& r);

/// Order: ax_3, ax_4, ax_1, ax_2, ax_1_word, ax_2_word.
Verdict check_module(const ModuleStructure& m, std::size_t word_bound = 3);

/// "alpha_unit", "alpha_compat" (alpha is an E-action), then "matching" on
/// all words of length <= bound in shortlex order.
Verdict check_matching_relation(const DoubleMonad& m, const BicrossedRepresentation& r,
                                std::size_t bound);

/// ax_1 alone: sigma is balanced for the E-actions on A (via s) and on Q.
Verdict check_balanced(const DoubleMonad& m, const Table& alpha, const Table& sigma);

/// alpha := xi, beta := delta.
BicrossedRepresentation module_to_action(const ModuleStructure& m);

/// xi := alpha, delta := beta, sigma as supplied. Throws LawViolation when
/// the matching relation or balancedness fails.
ModuleStructure action_to_module(const DoubleMonad& m, const BicrossedRepresentation& r,
                                 const FinSet& output, const Table& sigma, std::size_t bound = 3);

/// beta extended to a word, innermost letter last in the word.
Elem act_word(const Table& beta, const Word& w, Elem q);

/// (e, w) ⋆ q = alpha(e, beta(w, q)).
Elem act_bicrossed(const BicrossedRepresentation& r, const BicrossedElement& x, Elem q);

/// Action laws of ⋆ for E⋈A* on elements with |w| <= bound: "unit", "compat".
Verdict check_bicrossed_action(const DoubleMonad& m, const BicrossedRepresentation& r,
                               std::size_t bound);

}  // namespace mly
