#include "mly/finsets.hpp"

#include <numeric>
#include <set>

namespace mly {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FinSet::FinSet(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (labels_.empty()) return;
  if (labels_.size() != size_)
    throw InputError("/labels", "expected " + std::to_string(size_) + " labels, got " +
                                    std::to_string(labels_.size()));
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!seen.insert(labels_[i]).second)
      throw InputError("/labels/" + std::to_string(i), "duplicate label '" + labels_[i] + "'");
}

std::string FinSet::label(Elem x) const {
  return has_labels() && x < labels_.size() ? labels_[x] : std::to_string(x);
}

FinFun::FinFun(FinSet dom, FinSet cod, std::vector<Elem> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw InputError("/table", "expected " + std::to_string(dom_.size()) + " entries, got " +
                                   std::to_string(table_.size()));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= cod_.size())
      throw InputError("/table/" + std::to_string(i),
                       "entry " + std::to_string(table_[i]) + " outside codomain of size " +
                           std::to_string(cod_.size()));
}

FinFun FinFun::identity(const FinSet& x) {
  std::vector<Elem> t(x.size());
  std::iota(t.begin(), t.end(), 0);
  return FinFun(x, x, std::move(t));
}

FinFun FinFun::constant(const FinSet& dom, const FinSet& cod, Elem value) {
  return FinFun(dom, cod, std::vector<Elem>(dom.size(), value));
}

bool FinFun::is_injective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (Elem y : table_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool FinFun::is_surjective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (Elem y : table_) hit[y] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

std::optional<FinFun> FinFun::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<Elem> t(cod_.size());
  for (Elem x = 0; x < table_.size(); ++x) t[table_[x]] = x;
  return FinFun(cod_, dom_, std::move(t));
}

FinFun compose(const FinFun& g, const FinFun& f) {
  if (!(f.cod() == g.dom()))
    throw InputError("", "cannot compose: codomain size " + std::to_string(f.cod().size()) +
                             " vs domain size " + std::to_string(g.dom().size()));
  std::vector<Elem> t(f.dom().size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return FinFun(f.dom(), g.cod(), std::move(t));
}

std::vector<FinFun> all_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<FinFun> out;
  for_each_assignment(dom.size(), cod.size(), [&](const std::vector<Elem>& t) {
    out.emplace_back(dom, cod, t);
    return true;
  });
  return out;
}

Product product(const FinSet& a, const FinSet& b) {
  FinSet ab(a.size() * b.size());
  std::vector<Elem> p1(ab.size()), p2(ab.size());
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y) {
      p1[x * b.size() + y] = x;
      p2[x * b.size() + y] = y;
    }
  return {ab, FinFun(ab, a, std::move(p1)), FinFun(ab, b, std::move(p2))};
}

FinFun product_map(const FinFun& f, const FinFun& g) {
  const auto src = product(f.dom(), g.dom());
  const auto dst = product(f.cod(), g.cod());
  std::vector<Elem> t(src.object.size());
  for (Elem x = 0; x < f.dom().size(); ++x)
    for (Elem y = 0; y < g.dom().size(); ++y) t[src.pair(x, y)] = dst.pair(f(x), g(y));
  return FinFun(src.object, dst.object, std::move(t));
}

Coproduct coproduct(const FinSet& a, const FinSet& b) {
  FinSet sum(a.size() + b.size());
  std::vector<Elem> l(a.size()), r(b.size());
  std::iota(l.begin(), l.end(), 0);
  std::iota(r.begin(), r.end(), a.size());
  return {sum, FinFun(a, sum, std::move(l)), FinFun(b, sum, std::move(r))};
}

FinFun copair(const Coproduct& c, const FinFun& p, const FinFun& r) {
  if (!(p.dom() == c.inl.dom()) || !(r.dom() == c.inr.dom()) || !(p.cod() == r.cod()))
    throw InputError("", "copairing boundaries do not match the coproduct");
  std::vector<Elem> t;
  t.reserve(c.object.size());
  t.insert(t.end(), p.table().begin(), p.table().end());
  t.insert(t.end(), r.table().begin(), r.table().end());
  return FinFun(c.object, p.cod(), std::move(t));
}

std::optional<Elem> Pullback::index_of(Elem x, Elem y) const {
  for (Elem i = 0; i < pairs.size(); ++i)
    if (pairs[i] == std::pair{x, y}) return i;
  return std::nullopt;
}

Pullback pullback(const FinFun& f, const FinFun& g) {
  if (!(f.cod() == g.cod()))
    throw InputError("", "pullback of functions with different codomains");
  Pullback p;
  for (Elem x = 0; x < f.dom().size(); ++x)
    for (Elem y = 0; y < g.dom().size(); ++y)
      if (f(x) == g(y)) p.pairs.emplace_back(x, y);
  p.object = FinSet(p.pairs.size());
  std::vector<Elem> l, r;
  for (const auto& [x, y] : p.pairs) {
    l.push_back(x);
    r.push_back(y);
  }
  p.left = FinFun(p.object, f.dom(), std::move(l));
  p.right = FinFun(p.object, g.dom(), std::move(r));
  if (!(compose(f, p.left) == compose(g, p.right)))
    throw std::logic_error("pullback square does not commute");
  return p;
}

FinFun pullback_pairing(const Pullback& p, const FinFun& h1, const FinFun& h2) {
  if (!(h1.dom() == h2.dom()) || !(h1.cod() == p.left.cod()) || !(h2.cod() == p.right.cod()))
    throw InputError("", "pairing boundaries do not match the pullback");
  std::vector<Elem> t(h1.dom().size());
  for (Elem w = 0; w < t.size(); ++w) {
    auto i = p.index_of(h1(w), h2(w));
    if (!i) throw InputError("/" + std::to_string(w), "cone does not commute at this element");
    t[w] = *i;
  }
  return FinFun(h1.dom(), p.object, std::move(t));
}

Equalizer equalizer(const FinFun& f, const FinFun& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw InputError("", "equalizer of functions with different boundaries");
  std::vector<Elem> t;
  for (Elem x = 0; x < f.dom().size(); ++x)
    if (f(x) == g(x)) t.push_back(x);
  FinSet obj(t.size());
  return {obj, FinFun(obj, f.dom(), std::move(t))};
}

Coequalizer coequalizer(const FinFun& f, const FinFun& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw InputError("", "coequalizer of functions with different boundaries");
  const std::size_t n = f.cod().size();
  UnionFind uf(n);
  for (Elem x = 0; x < f.dom().size(); ++x) uf.unite(f(x), g(x));
  std::vector<Elem> cls(n);
  std::vector<std::size_t> class_of_root(n, n);
  std::size_t next = 0;
  for (Elem y = 0; y < n; ++y) {
    const auto r = uf.find(y);
    if (class_of_root[r] == n) class_of_root[r] = next++;
    cls[y] = class_of_root[r];
  }
  FinSet obj(next);
  return {obj, FinFun(f.cod(), obj, std::move(cls))};
}

std::optional<FinFun> coequalizer_factor(const Coequalizer& c, const FinFun& k) {
  if (!(k.dom() == c.quotient.dom()))
    throw InputError("", "map does not start at the coequalized set");
  std::vector<std::optional<Elem>> t(c.object.size());
  for (Elem y = 0; y < k.dom().size(); ++y) {
    auto& slot = t[c.quotient(y)];
    if (slot && *slot != k(y)) return std::nullopt;
    slot = k(y);
  }
  std::vector<Elem> out(t.size());
  for (Elem i = 0; i < t.size(); ++i) out[i] = *t[i];  // q is surjective
  return FinFun(c.object, k.cod(), std::move(out));
}

}  // namespace mly
