#pragma once

// Finite sets and functions, with the handful of limits and colimits the
// higher layers consume. Elements are the indices 0..size-1; labels are for
// display only and do not take part in equality.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mly/core.hpp"

namespace mly {

class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::size_t size) : size_(size) {}
  FinSet(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(Elem x) const noexcept { return x < size_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem x) const;

  friend bool operator==(const FinSet& a, const FinSet& b) noexcept { return a.size_ == b.size_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::string> labels_;
};

inline FinSet terminal_set() { return FinSet(1); }

class FinFun {
 public:
  FinFun() = default;
  FinFun(FinSet dom, FinSet cod, std::vector<Elem> table);

  static FinFun identity(const FinSet& x);
  static FinFun constant(const FinSet& dom, const FinSet& cod, Elem value);
  static FinFun to_terminal(const FinSet& dom) { return constant(dom, terminal_set(), 0); }

  const FinSet& dom() const noexcept { return dom_; }
  const FinSet& cod() const noexcept { return cod_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  std::optional<FinFun> inverse() const;

  friend bool operator==(const FinFun& a, const FinFun& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Elem> table_;
};

/// g ∘ f. Throws InputError when f.cod != g.dom.
FinFun compose(const FinFun& g, const FinFun& f);

/// Every function dom -> cod, tables in lexicographic order.
std::vector<FinFun> all_functions(const FinSet& dom, const FinSet& cod);

/// Binary product with pairs encoded lexicographically: (a, b) -> a*|B| + b.
struct Product {
  FinSet object;
  FinFun first;
  FinFun second;
  Elem pair(Elem a, Elem b) const { return a * second.cod().size() + b; }
};
Product product(const FinSet& a, const FinSet& b);

/// f × g : A×C -> B×D on lexicographic encodings.
FinFun product_map(const FinFun& f, const FinFun& g);

/// A + B with A first.
struct Coproduct {
  FinSet object;
  FinFun inl;
  FinFun inr;
};
Coproduct coproduct(const FinSet& a, const FinSet& b);

/// [p, r] : A + B -> X.
FinFun copair(const Coproduct& c, const FinFun& p, const FinFun& r);

struct Pullback {
  FinSet object;
  FinFun left;   // to A
  FinFun right;  // to B
  std::vector<std::pair<Elem, Elem>> pairs;

  std::optional<Elem> index_of(Elem x, Elem y) const;
};

/// All (x, y) with f(x) = g(y), lexicographic in (x, y).
Pullback pullback(const FinFun& f, const FinFun& g);

/// The unique u : W -> P with left∘u = h1 and right∘u = h2. Throws InputError
/// when f∘h1 != g∘h2.
FinFun pullback_pairing(const Pullback& p, const FinFun& h1, const FinFun& h2);

struct Equalizer {
  FinSet object;
  FinFun inclusion;
};
Equalizer equalizer(const FinFun& f, const FinFun& g);

/// Quotient of the codomain by the equivalence generated by f(x) ~ g(x).
/// Classes are numbered in order of their least element.
struct Coequalizer {
  FinSet object;
  FinFun quotient;
};
Coequalizer coequalizer(const FinFun& f, const FinFun& g);

/// The unique h with h∘q = k, or nullopt when k does not coequalize.
std::optional<FinFun> coequalizer_factor(const Coequalizer& c, const FinFun& k);

}  // namespace mly
