#include "mly/modules.hpp"

namespace mly {

void require_module_shape(const ModuleStructure& m) {
  require_monad_shape(m.monad);
  if (!(m.machine.input() == m.monad.alphabet()))
    throw InputError("/machine/input", "module machine must read the monad's alphabet");
  const auto nq = m.machine.states().size();
  if (m.xi.rows() != m.monad.states().size() || m.xi.cols() != nq)
    throw InputError("/xi", "xi must be |E| x |Q|");
  m.xi.require_below(nq, "/xi");
}

void require_representation_shape(const DoubleMonad& m, const BicrossedRepresentation& r) {
  require_monad_shape(m);
  const auto nq = r.set.size();
  if (r.alpha.rows() != m.states().size() || r.alpha.cols() != nq)
    throw InputError("/alpha", "alpha must be |E| x |Q|");
  if (r.beta.rows() != m.alphabet().size() || r.beta.cols() != nq)
    throw InputError("/beta", "beta must be |A| x |Q|");
  r.alpha.require_below(nq, "/alpha");
  r.beta.require_below(nq, "/beta");
}

namespace {

Verdict check_alpha_action(const DoubleMonad& m, const Table& alpha, const char* unit_law,
                           const char* compat_law) {
  const auto ne = m.states().size();
  for (Elem q = 0; q < alpha.cols(); ++q)
    if (alpha(m.e0, q) != q) return Verdict::fail(unit_law, {{"q", q}}, alpha(m.e0, q), q);
  for (Elem e = 0; e < ne; ++e)
    for (Elem f = 0; f < ne; ++f)
      for (Elem q = 0; q < alpha.cols(); ++q) {
        const Elem l = alpha(m.mu(e, f), q), r = alpha(e, alpha(f, q));
        if (l != r) return Verdict::fail(compat_law, {{"e", e}, {"e2", f}, {"q", q}}, l, r);
      }
  return Verdict::ok();
}

/// beta(w, alpha(e, q)) against alpha(w ⊗ e, beta(w ⊙ e, q)).
std::optional<Witness> matching_failure(const DoubleMonad& m, const Table& alpha, const Table& beta,
                                        const Word& w, const char* law) {
  const auto& d = m.machine.d();
  const auto& s = m.machine.s();
  for (Elem e = 0; e < m.states().size(); ++e) {
    const auto ext = extend_word(d, s, w, e);
    for (Elem q = 0; q < alpha.cols(); ++q) {
      const Elem l = act_word(beta, w, alpha(e, q));
      const Elem r = alpha(ext.state, act_word(beta, ext.word, q));
      if (l != r) return Witness{law, {{"w", w}, {"e", e}, {"q", q}}, l, r};
    }
  }
  return std::nullopt;
}

}  // namespace

Elem act_word(const Table& beta, const Word& w, Elem q) {
  for (std::size_t i = w.size(); i-- > 0;) q = beta(w[i], q);
  return q;
}

Verdict check_balanced(const DoubleMonad& m, const Table& alpha, const Table& sigma) {
  for (Elem a = 0; a < m.alphabet().size(); ++a)
    for (Elem e = 0; e < m.states().size(); ++e)
      for (Elem q = 0; q < alpha.cols(); ++q) {
        const Elem l = sigma(a, alpha(e, q));
        const Elem r = sigma(m.machine.out(a, e), q);
        if (l != r) return Verdict::fail("ax_1", {{"a", a}, {"e", e}, {"q", q}}, l, r);
      }
  return Verdict::ok();
}

Verdict check_module(const ModuleStructure& mod, std::size_t word_bound) {
  require_module_shape(mod);
  const auto& m = mod.monad;
  const auto& p = mod.machine;
  const auto& xi = mod.xi;
  if (auto v = check_alpha_action(m, xi, "ax_3", "ax_4"); !v) return v;
  if (auto v = check_balanced(m, xi, p.s()); !v) return v;
  for (Elem a = 0; a < m.alphabet().size(); ++a)
    for (Elem e = 0; e < m.states().size(); ++e)
      for (Elem q = 0; q < p.states().size(); ++q) {
        const Elem l = p.next(a, xi(e, q));
        const Elem r = xi(m.machine.next(a, e), p.next(m.machine.out(a, e), q));
        if (l != r) return Verdict::fail("ax_2", {{"a", a}, {"e", e}, {"q", q}}, l, r);
      }
  const auto words = words_up_to(m.alphabet().size(), word_bound);
  for (const auto& w : words)
    for (Elem e = 0; e < m.states().size(); ++e) {
      const auto ext = extend_word(m.machine.d(), m.machine.s(), w, e);
      for (Elem q = 0; q < p.states().size(); ++q) {
        const auto l = extend_word(p.d(), p.s(), w, xi(e, q)).word;
        const auto r = extend_word(p.d(), p.s(), ext.word, q).word;
        if (l != r) return Verdict::fail("ax_1_word", {{"w", w}, {"e", e}, {"q", q}}, l, r);
      }
    }
  for (const auto& w : words)
    if (auto f = matching_failure(m, xi, p.d(), w, "ax_2_word")) return Verdict::fail(*f);
  return Verdict::ok();
}

Verdict check_matching_relation(const DoubleMonad& m, const BicrossedRepresentation& r,
                                std::size_t bound) {
  require_representation_shape(m, r);
  if (auto v = check_alpha_action(m, r.alpha, "alpha_unit", "alpha_compat"); !v) return v;
  for (const auto& w : words_up_to(m.alphabet().size(), bound))
    if (auto f = matching_failure(m, r.alpha, r.beta, w, "matching")) return Verdict::fail(*f);
  return Verdict::ok();
}

BicrossedRepresentation module_to_action(const ModuleStructure& m) {
  require_module_shape(m);
  return {m.machine.states(), m.xi, m.machine.d()};
}

ModuleStructure action_to_module(const DoubleMonad& m, const BicrossedRepresentation& r,
                                 const FinSet& output, const Table& sigma, std::size_t bound) {
  require_representation_shape(m, r);
  if (sigma.rows() != m.alphabet().size() || sigma.cols() != r.set.size())
    throw InputError("/sigma", "sigma must be |A| x |Q|");
  sigma.require_below(output.size(), "/sigma");
  if (auto v = check_matching_relation(m, r, bound); !v) throw LawViolation(*v.witness);
  if (auto v = check_balanced(m, r.alpha, sigma); !v) throw LawViolation(*v.witness);
  return {m, MealyMachine(m.alphabet(), output, r.set, r.beta, sigma), r.alpha};
}

Elem act_bicrossed(const BicrossedRepresentation& r, const BicrossedElement& x, Elem q) {
  return r.alpha(x.e, act_word(r.beta, x.w, q));
}

Verdict check_bicrossed_action(const DoubleMonad& m, const BicrossedRepresentation& r,
                               std::size_t bound) {
  require_representation_shape(m, r);
  const auto p = derive_matched_pair(m);
  const auto elems = bicrossed_elements(p, bound);
  for (Elem q = 0; q < r.set.size(); ++q)
    if (act_bicrossed(r, p.unit(), q) != q)
      return Verdict::fail("unit", {{"q", q}}, act_bicrossed(r, p.unit(), q), q);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (x.w.size() + y.w.size() > bound) continue;
      const auto xy = bicrossed_multiply(x, y, p);
      for (Elem q = 0; q < r.set.size(); ++q) {
        const Elem l = act_bicrossed(r, xy, q);
        const Elem rr = act_bicrossed(r, x, act_bicrossed(r, y, q));
        if (l != rr)
          return Verdict::fail("compat", {{"x", to_json(x)}, {"y", to_json(y)}, {"q", q}}, l, rr);
      }
    }
  return Verdict::ok();
}

}  // namespace mly
