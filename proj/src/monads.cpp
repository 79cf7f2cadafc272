#include "mly/monads.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace mly {

void require_monad_shape(const DoubleMonad& m) {
  if (!m.machine.is_endo()) throw InputError("/machine", "a monad needs an endo machine A ⇸ A");
  const auto n = m.states().size();
  if (m.e0 >= n) throw InputError("/e0", "unit state " + std::to_string(m.e0) + " out of range");
  if (m.mu.rows() != n || m.mu.cols() != n)
    throw InputError("/mu", "mu must be " + std::to_string(n) + "x" + std::to_string(n));
  m.mu.require_below(n, "/mu");
}

Verdict check_monad_laws(const MealyMachine& machine, Elem e0, const PartialMult& mu) {
  const auto na = machine.input().size();
  const auto ne = machine.states().size();
  auto opt = [](const std::optional<Elem>& v) { return v ? json(*v) : json(nullptr); };

  for (Elem x = 0; x < ne; ++x)
    for (Elem y = 0; y < ne; ++y) {
      const auto xy = mu(x, y);
      if (!xy) continue;
      for (Elem z = 0; z < ne; ++z) {
        const auto yz = mu(y, z);
        if (!yz) continue;
        const auto l = mu(*xy, z), r = mu(x, *yz);
        if (l && r && *l != *r)
          return Verdict::fail("ma_1", {{"e", x}, {"e2", y}, {"e3", z}}, *l, *r);
      }
    }
  for (Elem x = 0; x < ne; ++x) {
    if (auto l = mu(e0, x); l != x) return Verdict::fail("ma_2", {{"e", x}, {"side", "left"}}, opt(l), x);
    if (auto r = mu(x, e0); r != x) return Verdict::fail("ma_2", {{"e", x}, {"side", "right"}}, opt(r), x);
  }
  for (Elem a = 0; a < na; ++a)
    if (machine.out(a, e0) != a) return Verdict::fail("ac_1", {{"a", a}}, machine.out(a, e0), a);
  for (Elem a = 0; a < na; ++a)
    if (machine.next(a, e0) != e0) return Verdict::fail("ac_2", {{"a", a}}, machine.next(a, e0), e0);
  for (Elem a = 0; a < na; ++a)
    for (Elem e = 0; e < ne; ++e)
      for (Elem f = 0; f < ne; ++f) {
        const auto p = mu(e, f);
        if (!p) continue;
        const Elem l = machine.out(a, *p);
        const Elem r = machine.out(machine.out(a, e), f);
        if (l != r) return Verdict::fail("mc_1", {{"a", a}, {"e", e}, {"e2", f}}, l, r);
      }
  for (Elem a = 0; a < na; ++a)
    for (Elem e = 0; e < ne; ++e)
      for (Elem f = 0; f < ne; ++f) {
        const auto p = mu(e, f);
        if (!p) continue;
        const Elem l = machine.next(a, *p);
        const auto r = mu(machine.next(a, e), machine.next(machine.out(a, e), f));
        if (r != l) return Verdict::fail("mc_2", {{"a", a}, {"e", e}, {"e2", f}}, l, opt(r));
      }
  return Verdict::ok();
}

Verdict check_monad(const DoubleMonad& m) {
  require_monad_shape(m);
  return check_monad_laws(m.machine, m.e0,
                          [&](Elem x, Elem y) -> std::optional<Elem> { return m.mu(x, y); });
}

FinMonoid state_monoid(const DoubleMonad& m) { return FinMonoid(m.states(), m.e0, m.mu); }

MonadCells monad_cells(const DoubleMonad& m) {
  require_monad_shape(m);
  const auto& a = m.alphabet();
  const auto& e = m.states();
  const auto id = FinFun::identity(a);
  const auto mm = loose_compose(m.machine, m.machine);
  std::vector<Elem> mult(mm.states().size());
  for (Elem x = 0; x < e.size(); ++x)
    for (Elem y = 0; y < e.size(); ++y) mult[x * e.size() + y] = m.mu(x, y);
  return {Cell{identity_loose(a), m.machine, id, id, FinFun::constant(FinSet(1), e, m.e0)},
          Cell{mm, m.machine, id, id, FinFun(mm.states(), e, std::move(mult))}};
}

BudgetExceeded::BudgetExceeded(std::size_t estimate, std::size_t budget)
    : std::runtime_error("search space of " + std::to_string(estimate) +
                         " candidates exceeds the budget of " + std::to_string(budget)),
      estimate_(estimate),
      budget_(budget) {}

std::size_t monad_search_estimate(std::size_t size_a, std::size_t size_e) {
  if (size_e == 0) return 0;
  const auto monoids = checked_pow(size_e, (size_e - 1) * (size_e - 1));
  const auto outputs = checked_pow(size_a, size_a * (size_e - 1));
  const auto nexts = checked_pow(size_e, size_a * (size_e - 1));
  const std::size_t cap = std::numeric_limits<std::size_t>::max();
  std::size_t total = size_e;
  for (auto f : {monoids, outputs, nexts}) total = (f != 0 && total > cap / f) ? cap : total * f;
  return total;
}

std::vector<DoubleMonad> enumerate_monads(std::size_t size_a, std::size_t size_e,
                                          std::size_t budget) {
  if (size_a == 0) throw InputError("/size_a", "alphabet size must be at least 1");
  if (size_e == 0) throw InputError("/size_e", "state count must be at least 1");
  if (const auto est = monad_search_estimate(size_a, size_e); est > budget)
    throw BudgetExceeded(est, budget);

  const FinSet a(size_a), e(size_e);
  std::vector<DoubleMonad> out;
  // Slots off the unit row and column.
  std::vector<std::pair<Elem, Elem>> mu_slots, machine_slots;

  for (Elem e0 = 0; e0 < size_e; ++e0) {
    mu_slots.clear();
    machine_slots.clear();
    for (Elem x = 0; x < size_e; ++x)
      for (Elem y = 0; y < size_e; ++y)
        if (x != e0 && y != e0) mu_slots.emplace_back(x, y);
    for (Elem x = 0; x < size_a; ++x)
      for (Elem y = 0; y < size_e; ++y)
        if (y != e0) machine_slots.emplace_back(x, y);

    Table mu = Table::tabulate(size_e, size_e, [e0](Elem x, Elem y) { return x == e0 ? y : x; });
    for_each_assignment(mu_slots.size(), size_e, [&](const std::vector<Elem>& mv) {
      for (std::size_t i = 0; i < mv.size(); ++i) mu(mu_slots[i].first, mu_slots[i].second) = mv[i];
      if (!check_monoid_laws(FinMonoid(e, e0, mu))) return true;

      Table s = Table::tabulate(size_a, size_e, [](Elem x, Elem) { return x; });
      for_each_assignment(machine_slots.size(), size_a, [&](const std::vector<Elem>& sv) {
        for (std::size_t i = 0; i < sv.size(); ++i)
          s(machine_slots[i].first, machine_slots[i].second) = sv[i];
        for (Elem x = 0; x < size_a; ++x)
          for (Elem p = 0; p < size_e; ++p)
            for (Elem q = 0; q < size_e; ++q)
              if (s(x, mu(p, q)) != s(s(x, p), q)) return true;

        Table d(size_a, size_e, e0);
        for_each_assignment(machine_slots.size(), size_e, [&](const std::vector<Elem>& dv) {
          for (std::size_t i = 0; i < dv.size(); ++i)
            d(machine_slots[i].first, machine_slots[i].second) = dv[i];
          for (Elem x = 0; x < size_a; ++x)
            for (Elem p = 0; p < size_e; ++p)
              for (Elem q = 0; q < size_e; ++q)
                if (d(x, mu(p, q)) != mu(d(x, p), d(s(x, p), q))) return true;
          out.push_back(DoubleMonad{MealyMachine(a, a, e, d, s), e0, mu});
          return true;
        });
        return true;
      });
      return true;
    });
  }

  std::sort(out.begin(), out.end(), [](const DoubleMonad& x, const DoubleMonad& y) {
    return std::tie(x.machine.d().data(), x.machine.s().data(), x.e0, x.mu.data()) <
           std::tie(y.machine.d().data(), y.machine.s().data(), y.e0, y.mu.data());
  });
  for (const auto& m : out)
    if (!check_monad(m)) throw std::logic_error("enumerated a table set that is not a monad");
  return out;
}

MatchedPair derive_matched_pair(const DoubleMonad& m) {
  if (auto v = check_monad(m); !v)
    throw InputError("", "not a monad: " + v.law() + " fails");
  return MatchedPair(state_monoid(m), m.alphabet(), m.machine.d(), m.machine.s());
}

DoubleMonad trivial_monad(const FinSet& a) {
  return DoubleMonad{identity_loose(a), 0, Table(1, 1, 0)};
}

Verdict check_tight_monad_morphism(const DoubleMonad& src, const DoubleMonad& dst,
                                   const TightMonadMorphism& t) {
  require_monad_shape(src);
  require_monad_shape(dst);
  if (!(t.f.dom() == src.alphabet()) || !(t.f.cod() == dst.alphabet()))
    throw InputError("/f", "f must map the source alphabet to the target alphabet");
  if (!(t.alpha.dom() == src.states()) || !(t.alpha.cod() == dst.states()))
    throw InputError("/alpha", "alpha must map source states to target states");

  if (t.alpha(src.e0) != dst.e0) return Verdict::fail("eta", json::object(), t.alpha(src.e0), dst.e0);
  const auto n = src.states().size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem l = t.alpha(src.mu(x, y));
      const Elem r = dst.mu(t.alpha(x), t.alpha(y));
      if (l != r) return Verdict::fail("mu", {{"e", x}, {"e2", y}}, l, r);
    }
  return check_cell(Cell{src.machine, dst.machine, t.f, t.f, t.alpha});
}

BicrossedElement apply_induced_hom(const TightMonadMorphism& t, const BicrossedElement& x) {
  BicrossedElement y{t.alpha(x.e), Word(x.w.size())};
  std::transform(x.w.begin(), x.w.end(), y.w.begin(), [&](Elem a) { return t.f(a); });
  return y;
}

InducedHom induced_bicrossed_hom(const TightMonadMorphism& t, const DoubleMonad& src,
                                 std::size_t bound) {
  InducedHom out;
  for (Elem e = 0; e < src.states().size(); ++e)
    for (const auto& w : words_up_to(src.alphabet().size(), bound)) {
      out.domain.push_back({e, w});
      out.image.push_back(apply_induced_hom(t, out.domain.back()));
    }
  return out;
}

Verdict check_induced_hom(const DoubleMonad& src, const DoubleMonad& dst,
                          const TightMonadMorphism& t, std::size_t bound) {
  const auto p = derive_matched_pair(src);
  const auto q = derive_matched_pair(dst);
  if (auto h = apply_induced_hom(t, p.unit()); h != q.unit())
    return Verdict::fail("unit", json::object(), to_json(h), to_json(q.unit()));
  const auto elems = bicrossed_elements(p, bound);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (x.w.size() + y.w.size() > bound) continue;
      const auto l = apply_induced_hom(t, bicrossed_multiply(x, y, p));
      const auto r = bicrossed_multiply(apply_induced_hom(t, x), apply_induced_hom(t, y), q);
      if (l != r) return Verdict::fail("mult", {{"x", to_json(x)}, {"y", to_json(y)}}, to_json(l), to_json(r));
    }
  return Verdict::ok();
}

Verdict check_loose_monad_map(const DoubleMonad& src, const DoubleMonad& dst,
                              const LooseMonadMap& u, bool fugality_only) {
  require_monad_shape(src);
  require_monad_shape(dst);
  const auto& um = u.machine;
  if (!(um.input() == src.alphabet())) throw InputError("/machine/input", "U must start at the source alphabet");
  if (!(um.output() == dst.alphabet())) throw InputError("/machine/output", "U must end at the target alphabet");
  const auto ne = src.states().size();
  const auto nx = um.states().size();
  if (u.delta.rows() != ne || u.delta.cols() != nx) throw InputError("/delta", "delta must be |E| x |X|");
  if (u.sigma.rows() != ne || u.sigma.cols() != nx) throw InputError("/sigma", "sigma must be |E| x |X|");
  u.delta.require_below(nx, "/delta");
  u.sigma.require_below(dst.states().size(), "/sigma");

  const auto& dl = u.delta;
  const auto& sg = u.sigma;
  const auto& m = src.machine;
  const auto& n = dst.machine;

  if (!fugality_only) {
    for (Elem x = 0; x < nx; ++x) {
      if (dl(src.e0, x) != x) return Verdict::fail("dl_2", {{"x", x}, {"equation", 1}}, dl(src.e0, x), x);
      if (sg(src.e0, x) != dst.e0)
        return Verdict::fail("dl_2", {{"x", x}, {"equation", 2}}, sg(src.e0, x), dst.e0);
    }
    for (Elem e = 0; e < ne; ++e)
      for (Elem f = 0; f < ne; ++f)
        for (Elem x = 0; x < nx; ++x) {
          const Elem l = dl(src.mu(e, f), x), r = dl(e, dl(f, x));
          if (l != r) return Verdict::fail("dl_3.1", {{"e", e}, {"e2", f}, {"x", x}}, l, r);
        }
  }
  for (Elem e = 0; e < ne; ++e)
    for (Elem f = 0; f < ne; ++f)
      for (Elem x = 0; x < nx; ++x) {
        const Elem l = sg(src.mu(e, f), x);
        const Elem r = dst.mu(sg(e, dl(f, x)), sg(f, x));
        if (l != r) return Verdict::fail("dl_3.2", {{"e", e}, {"e2", f}, {"x", x}}, l, r);
      }
  if (fugality_only) return Verdict::ok();

  for (Elem a = 0; a < src.alphabet().size(); ++a)
    for (Elem e = 0; e < ne; ++e)
      for (Elem x = 0; x < nx; ++x) {
        auto at = [&](int eq) { return json{{"a", a}, {"e", e}, {"x", x}, {"equation", eq}}; };
        const Elem moved = dl(e, x);
        const Elem sa = m.out(a, e);
        {
          const Elem l = n.out(um.out(a, moved), sg(e, x));
          const Elem r = um.out(sa, x);
          if (l != r) return Verdict::fail("dl_1", at(1), l, r);
        }
        {
          const Elem l = dl(m.next(a, e), um.next(sa, x));
          const Elem r = um.next(a, moved);
          if (l != r) return Verdict::fail("dl_1", at(2), l, r);
        }
        {
          const Elem l = sg(m.next(a, e), um.next(sa, x));
          const Elem r = n.next(um.out(a, moved), sg(e, x));
          if (l != r) return Verdict::fail("dl_1", at(3), l, r);
        }
      }
  return Verdict::ok();
}

}  // namespace mly
