#pragma once

// The free monad M(F) on an endo machine F : A ⇸ A, truncated to state words
// of length <= bound. States of M(F) are words over E in shortlex order; the
// unit is the empty word and the multiplication is concatenation, defined
// only when the result stays within the bound.
//
// Default extension of (d, s) to words:
//   d+(a, [])      = []          d+(a, e::es) = d(a, e) :: d+(s(a, e), es)
//   s+(a, [])      = a           s+(a, e::es) = s+(s(a, e), es)
// The flags select the alternative readings:
//   threading = pointwise   d+(a, e::es) = d(a, e) :: d+(a, es)
//   reverse_tail            s+(a, e::es) = s+(s(a, e), reverse(es))
//   mu_order = reversed     mu(u, v) = v ++ u

#include <optional>
#include <string>

#include "mly/monads.hpp"

namespace mly {

enum class Threading { threaded, pointwise };
enum class MuOrder { concat, reversed };

struct FreeMonadConfig {
  std::size_t bound = 4;
  bool reverse_tail = false;
  Threading threading = Threading::threaded;
  MuOrder mu_order = MuOrder::concat;

  friend bool operator==(const FreeMonadConfig&, const FreeMonadConfig&) = default;
};

/// Pointwise d+ with the tail reversed in s+.
FreeMonadConfig literal_config(std::size_t bound);

std::string describe(const FreeMonadConfig& cfg);

class TruncatedFreeMonad {
 public:
  TruncatedFreeMonad(MealyMachine generator, FreeMonadConfig cfg);

  const MealyMachine& generator() const noexcept { return generator_; }
  const FreeMonadConfig& config() const noexcept { return cfg_; }
  /// Machine on A whose states are the words in `words()`.
  const MealyMachine& machine() const noexcept { return machine_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  Elem unit() const noexcept { return 0; }

  Elem index_of(const Word& w) const;
  /// nullopt when the product is longer than the bound.
  std::optional<Elem> multiply(Elem x, Elem y) const;

  /// ν : F -> M(F), e |-> [e], over identity tights.
  Cell nu() const;

  Word next_word(Elem a, const Word& es) const;
  Elem out_word(Elem a, const Word& es) const;

 private:
  MealyMachine generator_;
  FreeMonadConfig cfg_;
  std::vector<Word> words_;
  MealyMachine machine_;
};

/// Throws InputError for a non-endo generator or bound 0.
TruncatedFreeMonad free_monad(const MealyMachine& f, const FreeMonadConfig& cfg = {});

/// The monad suite on the truncation: equations are checked whenever every
/// product involved has length <= bound.
Verdict check_truncated_monad(const TruncatedFreeMonad& m);

/// γ* on state words: γ*([]) = e0, γ*(e::es) = mu_N(γ(e), γ*(es)).
/// gamma must be a valid cell F -> N over identity tights.
FinFun free_monad_extend(const TruncatedFreeMonad& m, const DoubleMonad& target, const Cell& gamma);

/// Tight monad morphism conditions for (id_A, map) restricted to products
/// within the bound: "eta", "mu", "cell_d", "cell_s".
Verdict check_truncated_morphism(const TruncatedFreeMonad& m, const DoubleMonad& target,
                                 const FinFun& map);

/// Every state map satisfying the truncated morphism conditions and
/// map ∘ ν = gamma (by enumeration of all maps).
std::vector<FinFun> all_free_extensions(const TruncatedFreeMonad& m, const DoubleMonad& target,
                                        const Cell& gamma);

struct LawSearchEntry {
  FreeMonadConfig config;
  std::size_t generators_checked = 0;
  std::size_t generators_failing = 0;
  std::optional<MealyMachine> first_failure;  // generator of the first failure
  std::optional<Witness> witness;
};

/// Runs the truncated monad suite for every flag combination over every
/// generator with |A| <= max_alphabet, |E| <= max_states.
std::vector<LawSearchEntry> free_monad_law_search(std::size_t bound, std::size_t max_alphabet,
                                                  std::size_t max_states);

/// Report comparing the default reading against the literal one, plus the
/// full law search and the shortest word on which the two s+ readings differ.
json free_monad_discrepancy_report(std::size_t bound, std::size_t max_alphabet,
                                   std::size_t max_states);

}  // namespace mly
