#pragma once

// Finite monoids, their actions, and matched pairs (E, A) whose bicrossed
// product E⋈A* is explored on the fragment of words up to a length bound.
//
// Word conventions. The left action of A* on E extends d inner-first:
//   []      ⊗ e = e
//   (a::as) ⊗ e = d(a, as ⊗ e)
// so the head letter acts last. The companion extension of s is
//   []      ⊙ e = []
//   (a::as) ⊙ e = s(a, as ⊗ e) :: (as ⊙ e)
// Elements of E⋈A* are stored (state, word) and multiply as
//   (x, as) • (y, bs) = (x · (as ⊗ y), (as ⊙ y) ++ bs).

#include <optional>

#include "mly/core.hpp"
#include "mly/finsets.hpp"

namespace mly {

class FinMonoid {
 public:
  FinMonoid() = default;
  /// Validates indices only; see check_monoid_laws for the axioms.
  FinMonoid(FinSet carrier, Elem unit, Table mult);

  static FinMonoid trivial() { return FinMonoid(FinSet(1), 0, Table(1, 1, 0)); }
  static FinMonoid cyclic_group(std::size_t n);

  const FinSet& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  Elem unit() const noexcept { return unit_; }
  const Table& mult() const noexcept { return mult_; }
  Elem operator()(Elem x, Elem y) const { return mult_(x, y); }

  friend bool operator==(const FinMonoid&, const FinMonoid&) = default;

 private:
  FinSet carrier_;
  Elem unit_ = 0;
  Table mult_;
};

/// Unit laws first ("unit_left", "unit_right"), then associativity ("assoc")
/// at the lexicographically first failing triple.
Verdict check_monoid_laws(const FinMonoid& m);

enum class Side { left, right };

/// act is indexed [monoid element][set element] regardless of side.
struct MonoidAction {
  FinMonoid monoid;
  FinSet set;
  Table act;
  Side side = Side::left;

  MonoidAction() = default;
  MonoidAction(FinMonoid m, FinSet x, Table a, Side sd);
};

/// "unit" then "compat": left  m·(m'·x) = (m m')·x,
///                       right (x·m)·m' = x·(m m').
Verdict check_action_laws(const MonoidAction& a);

struct WordExtension {
  Elem state;
  Word word;
};

/// (w ⊗ e, w ⊙ e) for a pair of tables d : A×E -> E, s : A×E -> B (rows
/// indexed by letter). Throws InputError on bad indices.
WordExtension extend_word(const Table& d, const Table& s, const Word& w, Elem e);

struct BicrossedElement {
  Elem e = 0;
  Word w;
  friend bool operator==(const BicrossedElement&, const BicrossedElement&) = default;
  friend auto operator<=>(const BicrossedElement&, const BicrossedElement&) = default;
};

class MatchedPair {
 public:
  MatchedPair() = default;
  MatchedPair(FinMonoid monoid, FinSet alphabet, Table d, Table s);

  const FinMonoid& monoid() const noexcept { return monoid_; }
  const FinSet& alphabet() const noexcept { return alphabet_; }
  const Table& d() const noexcept { return d_; }
  const Table& s() const noexcept { return s_; }

  Elem act_state(const Word& w, Elem e) const { return extend_word(d_, s_, w, e).state; }
  Word act_word(const Word& w, Elem e) const { return extend_word(d_, s_, w, e).word; }

  BicrossedElement unit() const { return {monoid_.unit(), {}}; }

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;

 private:
  FinMonoid monoid_;
  FinSet alphabet_;
  Table d_;
  Table s_;
};

/// Checks, on all words of length <= bound and all states, in this order:
///   "monoid"              the state monoid laws;
///   "state_unit_fixed"    as ⊗ e0 = e0;
///   "word_unit_fixed"     [] ⊙ e = [];
///   "word_action_unit"    as ⊙ e0 = as;
///   "word_action_mult"    as ⊙ (e·e') = (as ⊙ e) ⊙ e';
///   "state_action"        (as++bs) ⊗ e = as ⊗ (bs ⊗ e);
///   "bicrossed_state"     as ⊗ (e·e') = (as ⊗ e) · ((as ⊙ e) ⊗ e');
///   "bicrossed_word"      (as++bs) ⊙ e = (as ⊙ (bs ⊗ e)) ++ (bs ⊙ e).
/// The witness is the first failure in shortlex order of the words.
Verdict check_bicrossed_equations(const MatchedPair& p, std::size_t bound);

BicrossedElement bicrossed_multiply(const BicrossedElement& x, const BicrossedElement& y,
                                    const MatchedPair& p);

/// All (e, w) with |w| <= bound, ordered by e then shortlex w.
std::vector<BicrossedElement> bicrossed_elements(const MatchedPair& p, std::size_t bound);

/// Associativity ("assoc") on triples with total word length <= bound and
/// unitality ("unit") on elements with |w| <= bound.
Verdict check_bicrossed_product_laws(const MatchedPair& p, std::size_t bound);

/// With i_E(e) = (e, []) and i_W(w) = (e0, w):
///   "word_then_state"  i_W(w) • i_E(e) = (w ⊗ e, w ⊙ e)
///   "state_then_word"  i_E(e) • i_W(w) = (e, w)
///   "i_E_hom", "i_W_hom"  both injections are unital and multiplicative.
Verdict bicrossed_cospan_relations(const MatchedPair& p, std::size_t bound);

json to_json(const BicrossedElement& x);

}  // namespace mly
