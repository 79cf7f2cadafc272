#include "mly/monoids.hpp"

namespace mly {

json to_json(const BicrossedElement& x) { return json{{"e", x.e}, {"w", x.w}}; }

FinMonoid::FinMonoid(FinSet carrier, Elem unit, Table mult)
    : carrier_(std::move(carrier)), unit_(unit), mult_(std::move(mult)) {
  const auto n = carrier_.size();
  if (n == 0) throw InputError("/carrier", "a monoid carrier cannot be empty");
  if (unit_ >= n) throw InputError("/unit", "unit " + std::to_string(unit_) + " out of range");
  if (mult_.rows() != n || mult_.cols() != n)
    throw InputError("/mult", "multiplication table must be " + std::to_string(n) + "x" +
                                  std::to_string(n));
  mult_.require_below(n, "/mult");
}

FinMonoid FinMonoid::cyclic_group(std::size_t n) {
  return FinMonoid(FinSet(n), 0, Table::tabulate(n, n, [n](Elem x, Elem y) { return (x + y) % n; }));
}

Verdict check_monoid_laws(const FinMonoid& m) {
  const auto n = m.size();
  const Elem u = m.unit();
  for (Elem x = 0; x < n; ++x) {
    if (m(u, x) != x) return Verdict::fail("unit_left", {{"x", x}}, m(u, x), x);
    if (m(x, u) != x) return Verdict::fail("unit_right", {{"x", x}}, m(x, u), x);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem l = m(m(x, y), z), r = m(x, m(y, z));
        if (l != r) return Verdict::fail("assoc", {{"x", x}, {"y", y}, {"z", z}}, l, r);
      }
  return Verdict::ok();
}

MonoidAction::MonoidAction(FinMonoid m, FinSet x, Table a, Side sd)
    : monoid(std::move(m)), set(std::move(x)), act(std::move(a)), side(sd) {
  if (act.rows() != monoid.size() || act.cols() != set.size())
    throw InputError("/act", "action table must be |monoid| x |set|");
  act.require_below(set.size(), "/act");
}

Verdict check_action_laws(const MonoidAction& a) {
  const auto& m = a.monoid;
  for (Elem x = 0; x < a.set.size(); ++x)
    if (a.act(m.unit(), x) != x) return Verdict::fail("unit", {{"x", x}}, a.act(m.unit(), x), x);
  for (Elem g = 0; g < m.size(); ++g)
    for (Elem h = 0; h < m.size(); ++h)
      for (Elem x = 0; x < a.set.size(); ++x) {
        Elem l, r;
        if (a.side == Side::left) {
          l = a.act(g, a.act(h, x));
          r = a.act(m(g, h), x);
        } else {
          l = a.act(h, a.act(g, x));
          r = a.act(m(g, h), x);
        }
        if (l != r) return Verdict::fail("compat", {{"m", g}, {"n", h}, {"x", x}}, l, r);
      }
  return Verdict::ok();
}

WordExtension extend_word(const Table& d, const Table& s, const Word& w, Elem e) {
  if (e >= d.cols()) throw InputError("/e", "state " + std::to_string(e) + " out of range");
  WordExtension out{e, Word(w.size())};
  for (std::size_t i = w.size(); i-- > 0;) {
    const Elem a = w[i];
    if (a >= d.rows()) throw InputError("/w/" + std::to_string(i), "letter out of range");
    out.word[i] = s(a, out.state);
    out.state = d(a, out.state);
  }
  return out;
}

MatchedPair::MatchedPair(FinMonoid monoid, FinSet alphabet, Table d, Table s)
    : monoid_(std::move(monoid)), alphabet_(std::move(alphabet)), d_(std::move(d)), s_(std::move(s)) {
  const auto na = alphabet_.size(), ne = monoid_.size();
  if (d_.rows() != na || d_.cols() != ne) throw InputError("/d", "d must be |A| x |E|");
  if (s_.rows() != na || s_.cols() != ne) throw InputError("/s", "s must be |A| x |E|");
  d_.require_below(ne, "/d");
  s_.require_below(na, "/s");
}

Verdict check_bicrossed_equations(const MatchedPair& p, std::size_t bound) {
  if (auto v = check_monoid_laws(p.monoid()); !v) {
    v.witness->at["monoid_law"] = v.witness->law;
    v.witness->law = "monoid";
    return v;
  }
  const auto& m = p.monoid();
  const auto ne = m.size();
  const Elem e0 = m.unit();
  const auto words = words_up_to(p.alphabet().size(), bound);

  for (const auto& w : words) {
    const auto ext = extend_word(p.d(), p.s(), w, e0);
    if (ext.state != e0) return Verdict::fail("state_unit_fixed", {{"as", w}}, ext.state, e0);
  }
  for (Elem e = 0; e < ne; ++e)
    if (!p.act_word({}, e).empty())
      return Verdict::fail("word_unit_fixed", {{"e", e}}, p.act_word({}, e), Word{});
  for (const auto& w : words) {
    const auto l = p.act_word(w, e0);
    if (l != w) return Verdict::fail("word_action_unit", {{"as", w}}, l, w);
  }
  for (const auto& w : words)
    for (Elem e = 0; e < ne; ++e)
      for (Elem f = 0; f < ne; ++f) {
        const auto l = p.act_word(w, m(e, f));
        const auto r = p.act_word(p.act_word(w, e), f);
        if (l != r) return Verdict::fail("word_action_mult", {{"as", w}, {"e", e}, {"e2", f}}, l, r);
      }
  for (const auto& u : words)
    for (const auto& v : words)
      for (Elem e = 0; e < ne; ++e) {
        const auto l = p.act_state(concat(u, v), e);
        const auto r = p.act_state(u, p.act_state(v, e));
        if (l != r) return Verdict::fail("state_action", {{"as", u}, {"bs", v}, {"e", e}}, l, r);
      }
  for (const auto& w : words)
    for (Elem e = 0; e < ne; ++e)
      for (Elem f = 0; f < ne; ++f) {
        const auto ext = extend_word(p.d(), p.s(), w, e);
        const Elem l = p.act_state(w, m(e, f));
        const Elem r = m(ext.state, p.act_state(ext.word, f));
        if (l != r) return Verdict::fail("bicrossed_state", {{"as", w}, {"e", e}, {"e2", f}}, l, r);
      }
  for (const auto& u : words)
    for (const auto& v : words)
      for (Elem e = 0; e < ne; ++e) {
        const auto l = p.act_word(concat(u, v), e);
        const auto r = concat(p.act_word(u, p.act_state(v, e)), p.act_word(v, e));
        if (l != r) return Verdict::fail("bicrossed_word", {{"as", u}, {"bs", v}, {"e", e}}, l, r);
      }
  return Verdict::ok();
}

BicrossedElement bicrossed_multiply(const BicrossedElement& x, const BicrossedElement& y,
                                    const MatchedPair& p) {
  const auto ne = p.monoid().size();
  if (x.e >= ne) throw InputError("/left/e", "state out of range");
  if (y.e >= ne) throw InputError("/right/e", "state out of range");
  for (std::size_t i = 0; i < y.w.size(); ++i)
    if (y.w[i] >= p.alphabet().size())
      throw InputError("/right/w/" + std::to_string(i), "letter out of range");
  const auto ext = extend_word(p.d(), p.s(), x.w, y.e);
  return {p.monoid()(x.e, ext.state), concat(ext.word, y.w)};
}

std::vector<BicrossedElement> bicrossed_elements(const MatchedPair& p, std::size_t bound) {
  std::vector<BicrossedElement> out;
  const auto words = words_up_to(p.alphabet().size(), bound);
  for (Elem e = 0; e < p.monoid().size(); ++e)
    for (const auto& w : words) out.push_back({e, w});
  return out;
}

Verdict check_bicrossed_product_laws(const MatchedPair& p, std::size_t bound) {
  const auto elems = bicrossed_elements(p, bound);
  const auto one = p.unit();
  for (const auto& x : elems) {
    if (auto l = bicrossed_multiply(one, x, p); l != x)
      return Verdict::fail("unit", {{"x", to_json(x)}, {"side", "left"}}, to_json(l), to_json(x));
    if (auto r = bicrossed_multiply(x, one, p); r != x)
      return Verdict::fail("unit", {{"x", to_json(x)}, {"side", "right"}}, to_json(r), to_json(x));
  }
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (x.w.size() + y.w.size() > bound) continue;
      const auto xy = bicrossed_multiply(x, y, p);
      for (const auto& z : elems) {
        if (x.w.size() + y.w.size() + z.w.size() > bound) continue;
        const auto l = bicrossed_multiply(xy, z, p);
        const auto r = bicrossed_multiply(x, bicrossed_multiply(y, z, p), p);
        if (l != r)
          return Verdict::fail("assoc", {{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}},
                               to_json(l), to_json(r));
      }
    }
  return Verdict::ok();
}

Verdict bicrossed_cospan_relations(const MatchedPair& p, std::size_t bound) {
  const auto& m = p.monoid();
  const Elem e0 = m.unit();
  const auto words = words_up_to(p.alphabet().size(), bound);
  auto i_e = [](Elem e) { return BicrossedElement{e, {}}; };
  auto i_w = [e0](const Word& w) { return BicrossedElement{e0, w}; };

  for (const auto& w : words)
    for (Elem e = 0; e < m.size(); ++e) {
      const auto l = bicrossed_multiply(i_w(w), i_e(e), p);
      const auto ext = extend_word(p.d(), p.s(), w, e);
      const BicrossedElement r{ext.state, ext.word};
      if (l != r) return Verdict::fail("word_then_state", {{"w", w}, {"e", e}}, to_json(l), to_json(r));
    }
  for (const auto& w : words)
    for (Elem e = 0; e < m.size(); ++e) {
      const auto l = bicrossed_multiply(i_e(e), i_w(w), p);
      const BicrossedElement r{e, w};
      if (l != r) return Verdict::fail("state_then_word", {{"w", w}, {"e", e}}, to_json(l), to_json(r));
    }
  if (i_e(e0) != p.unit() || i_w({}) != p.unit())
    return Verdict::fail("injection_unit", json::object(), to_json(i_e(e0)), to_json(p.unit()));
  for (Elem e = 0; e < m.size(); ++e)
    for (Elem f = 0; f < m.size(); ++f) {
      const auto l = i_e(m(e, f));
      const auto r = bicrossed_multiply(i_e(e), i_e(f), p);
      if (l != r) return Verdict::fail("i_E_hom", {{"e", e}, {"e2", f}}, to_json(l), to_json(r));
    }
  for (const auto& u : words)
    for (const auto& v : words) {
      const auto l = i_w(concat(u, v));
      const auto r = bicrossed_multiply(i_w(u), i_w(v), p);
      if (l != r) return Verdict::fail("i_W_hom", {{"u", u}, {"v", v}}, to_json(l), to_json(r));
    }
  return Verdict::ok();
}

}  // namespace mly
