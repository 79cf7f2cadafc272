#include "mly/mealy.hpp"

namespace mly {

MealyMachine::MealyMachine(FinSet input, FinSet output, FinSet states, Table d, Table s)
    : input_(std::move(input)),
      output_(std::move(output)),
      states_(std::move(states)),
      d_(std::move(d)),
      s_(std::move(s)) {
  const auto na = input_.size(), ne = states_.size();
  if (d_.rows() != na || d_.cols() != ne)
    throw InputError("/d", "d must have " + std::to_string(na) + " rows of " + std::to_string(ne) +
                               " entries");
  if (s_.rows() != na || s_.cols() != ne)
    throw InputError("/s", "s must have " + std::to_string(na) + " rows of " + std::to_string(ne) +
                               " entries");
  d_.require_below(ne, "/d");
  s_.require_below(output_.size(), "/s");
}

void require_cell_boundaries(const Cell& c) {
  if (!(c.f.dom() == c.top.input())) throw InputError("/f", "f must start at the top input");
  if (!(c.g.dom() == c.top.output())) throw InputError("/g", "g must start at the top output");
  if (!(c.f.cod() == c.bottom.input())) throw InputError("/f", "f must land in the bottom input");
  if (!(c.g.cod() == c.bottom.output())) throw InputError("/g", "g must land in the bottom output");
  if (!(c.alpha.dom() == c.top.states()) || !(c.alpha.cod() == c.bottom.states()))
    throw InputError("/alpha", "alpha must map top states to bottom states");
}

Verdict check_cell(const Cell& c) {
  require_cell_boundaries(c);
  for (Elem a = 0; a < c.top.input().size(); ++a)
    for (Elem e = 0; e < c.top.states().size(); ++e) {
      const Elem fa = c.f(a), ae = c.alpha(e);
      const Elem dl = c.bottom.next(fa, ae), dr = c.alpha(c.top.next(a, e));
      if (dl != dr) return Verdict::fail("cell_d", {{"a", a}, {"e", e}}, dl, dr);
      const Elem sl = c.bottom.out(fa, ae), sr = c.g(c.top.out(a, e));
      if (sl != sr) return Verdict::fail("cell_s", {{"a", a}, {"e", e}}, sl, sr);
    }
  return Verdict::ok();
}

MealyMachine identity_loose(const FinSet& x) {
  return MealyMachine(x, x, FinSet(1), Table(x.size(), 1, 0),
                      Table::tabulate(x.size(), 1, [](Elem a, Elem) { return a; }));
}

Cell identity_cell(const MealyMachine& m) {
  return {m, m, FinFun::identity(m.input()), FinFun::identity(m.output()),
          FinFun::identity(m.states())};
}

Cell identity_tight_cell(const FinFun& f) {
  return {identity_loose(f.dom()), identity_loose(f.cod()), f, f,
          FinFun::identity(FinSet(1))};
}

MealyMachine loose_compose(const MealyMachine& m1, const MealyMachine& m2) {
  if (!(m1.output() == m2.input()))
    throw InputError("", "loose composition needs the first output to be the second input");
  const auto pe = product(m1.states(), m2.states());
  const auto n2 = m2.states().size();
  Table d(m1.input().size(), pe.object.size()), s(m1.input().size(), pe.object.size());
  for (Elem a = 0; a < m1.input().size(); ++a)
    for (Elem e1 = 0; e1 < m1.states().size(); ++e1)
      for (Elem e2 = 0; e2 < n2; ++e2) {
        const Elem b = m1.out(a, e1);
        d(a, e1 * n2 + e2) = m1.next(a, e1) * n2 + m2.next(b, e2);
        s(a, e1 * n2 + e2) = m2.out(b, e2);
      }
  return MealyMachine(m1.input(), m2.output(), pe.object, std::move(d), std::move(s));
}

namespace {

CoherenceCell coherence(const MealyMachine& top, const MealyMachine& bottom, FinFun alpha) {
  auto inv = alpha.inverse();
  if (!inv) throw std::logic_error("coherence state map is not a bijection");
  Cell c{top, bottom, FinFun::identity(top.input()), FinFun::identity(top.output()),
         std::move(alpha)};
  if (!check_cell(c)) throw std::logic_error("coherence cell fails the cell condition");
  return {std::move(c), *inv};
}

}  // namespace

CoherenceCell associator(const MealyMachine& m1, const MealyMachine& m2, const MealyMachine& m3) {
  const auto left = loose_compose(loose_compose(m1, m2), m3);
  const auto right = loose_compose(m1, loose_compose(m2, m3));
  const auto n1 = m1.states().size(), n2 = m2.states().size(), n3 = m3.states().size();
  std::vector<Elem> t(left.states().size());
  for (Elem e1 = 0; e1 < n1; ++e1)
    for (Elem e2 = 0; e2 < n2; ++e2)
      for (Elem e3 = 0; e3 < n3; ++e3) t[(e1 * n2 + e2) * n3 + e3] = e1 * (n2 * n3) + (e2 * n3 + e3);
  return coherence(left, right, FinFun(left.states(), right.states(), std::move(t)));
}

CoherenceCell left_unitor(const MealyMachine& m) {
  const auto top = loose_compose(identity_loose(m.input()), m);
  // (•, e) has index e.
  std::vector<Elem> t(top.states().size());
  for (Elem e = 0; e < m.states().size(); ++e) t[0 * m.states().size() + e] = e;
  return coherence(top, m, FinFun(top.states(), m.states(), std::move(t)));
}

CoherenceCell right_unitor(const MealyMachine& m) {
  const auto top = loose_compose(m, identity_loose(m.output()));
  // (e, •) has index e*1 + 0.
  std::vector<Elem> t(top.states().size());
  for (Elem e = 0; e < m.states().size(); ++e) t[e * 1 + 0] = e;
  return coherence(top, m, FinFun(top.states(), m.states(), std::move(t)));
}

CoherenceCell invert(const CoherenceCell& c) {
  Cell inv{c.cell.bottom, c.cell.top, FinFun::identity(c.cell.bottom.input()),
           FinFun::identity(c.cell.bottom.output()), c.inverse};
  if (!check_cell(inv)) throw std::logic_error("inverse coherence cell fails the cell condition");
  return {std::move(inv), c.cell.alpha};
}

Cell horizontal(const Cell& c1, const Cell& c2) {
  require_cell_boundaries(c1);
  require_cell_boundaries(c2);
  if (!(c1.g == c2.f)) throw InputError("", "horizontal composition needs matching inner tights");
  if (!(c1.top.output() == c2.top.input()) || !(c1.bottom.output() == c2.bottom.input()))
    throw InputError("", "horizontal composition needs composable machines");
  return {loose_compose(c1.top, c2.top), loose_compose(c1.bottom, c2.bottom), c1.f, c2.g,
          product_map(c1.alpha, c2.alpha)};
}

Cell vertical(const Cell& c1, const Cell& c2) {
  require_cell_boundaries(c1);
  require_cell_boundaries(c2);
  if (!(c1.bottom == c2.top))
    throw InputError("", "vertical composition needs the first bottom to equal the second top");
  return {c1.top, c2.bottom, compose(c2.f, c1.f), compose(c2.g, c1.g), compose(c2.alpha, c1.alpha)};
}

Cell cell_compose(Direction dir, const Cell& c1, const Cell& c2) {
  return dir == Direction::horizontal ? horizontal(c1, c2) : vertical(c1, c2);
}

namespace {

Verdict same_state_map(const char* law, const Cell& lhs, const Cell& rhs) {
  if (!(lhs.top == rhs.top) || !(lhs.bottom == rhs.bottom))
    throw std::logic_error(std::string(law) + ": composites have different boundaries");
  for (Elem e = 0; e < lhs.top.states().size(); ++e)
    if (lhs.alpha(e) != rhs.alpha(e)) return Verdict::fail(law, {{"e", e}}, lhs.alpha(e), rhs.alpha(e));
  return Verdict::ok();
}

}  // namespace

Verdict check_pentagon(const MealyMachine& m1, const MealyMachine& m2, const MealyMachine& m3,
                       const MealyMachine& m4) {
  const auto m12 = loose_compose(m1, m2), m23 = loose_compose(m2, m3), m34 = loose_compose(m3, m4);
  const Cell direct = vertical(associator(m12, m3, m4).cell, associator(m1, m2, m34).cell);
  const Cell around =
      vertical(vertical(horizontal(associator(m1, m2, m3).cell, identity_cell(m4)),
                        associator(m1, m23, m4).cell),
               horizontal(identity_cell(m1), associator(m2, m3, m4).cell));
  return same_state_map("pentagon", direct, around);
}

Verdict check_triangle(const MealyMachine& m1, const MealyMachine& m2) {
  const auto i = identity_loose(m1.output());
  const Cell through = vertical(associator(m1, i, m2).cell,
                                horizontal(identity_cell(m1), left_unitor(m2).cell));
  const Cell direct = horizontal(right_unitor(m1).cell, identity_cell(m2));
  return same_state_map("triangle", through, direct);
}

RunResult run_machine(const MealyMachine& m, Elem e, const Word& w) {
  if (e >= m.states().size()) throw InputError("/e", "state out of range");
  RunResult r{{}, e};
  r.output.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= m.input().size()) throw InputError("/w/" + std::to_string(i), "letter out of range");
    r.output.push_back(m.out(w[i], r.final_state));
    r.final_state = m.next(w[i], r.final_state);
  }
  return r;
}

WordExtension extend_actions(const MealyMachine& m, const Word& w, Elem e) {
  if (!m.is_endo()) throw InputError("", "word actions need a machine with input = output");
  return extend_word(m.d(), m.s(), w, e);
}

MealyMachine tensor_machines(const MealyMachine& m1, const MealyMachine& m2) {
  const auto pa = product(m1.input(), m2.input());
  const auto pb = product(m1.output(), m2.output());
  const auto pe = product(m1.states(), m2.states());
  Table d(pa.object.size(), pe.object.size()), s(pa.object.size(), pe.object.size());
  for (Elem a1 = 0; a1 < m1.input().size(); ++a1)
    for (Elem a2 = 0; a2 < m2.input().size(); ++a2)
      for (Elem e1 = 0; e1 < m1.states().size(); ++e1)
        for (Elem e2 = 0; e2 < m2.states().size(); ++e2) {
          const Elem a = pa.pair(a1, a2), e = pe.pair(e1, e2);
          d(a, e) = pe.pair(m1.next(a1, e1), m2.next(a2, e2));
          s(a, e) = pb.pair(m1.out(a1, e1), m2.out(a2, e2));
        }
  return MealyMachine(pa.object, pb.object, pe.object, std::move(d), std::move(s));
}

namespace {

FinFun swap_map(const FinSet& x, const FinSet& y) {
  const auto xy = product(x, y), yx = product(y, x);
  std::vector<Elem> t(xy.object.size());
  for (Elem i = 0; i < x.size(); ++i)
    for (Elem j = 0; j < y.size(); ++j) t[xy.pair(i, j)] = yx.pair(j, i);
  return FinFun(xy.object, yx.object, std::move(t));
}

}  // namespace

CoherenceCell symmetry_cell(const MealyMachine& m1, const MealyMachine& m2) {
  Cell c{tensor_machines(m1, m2), tensor_machines(m2, m1), swap_map(m1.input(), m2.input()),
         swap_map(m1.output(), m2.output()), swap_map(m1.states(), m2.states())};
  if (!check_cell(c)) throw std::logic_error("symmetry cell fails the cell condition");
  auto inv = c.alpha.inverse();
  return {std::move(c), *inv};
}

std::vector<Cell> enumerate_cells(const MealyMachine& top, const MealyMachine& bottom) {
  std::vector<Cell> out;
  const auto fs = all_functions(top.input(), bottom.input());
  const auto gs = all_functions(top.output(), bottom.output());
  const auto as = all_functions(top.states(), bottom.states());
  for (const auto& f : fs)
    for (const auto& g : gs)
      for (const auto& a : as) {
        Cell c{top, bottom, f, g, a};
        if (check_cell(c)) out.push_back(std::move(c));
      }
  return out;
}

std::vector<MealyMachine> all_machines(const FinSet& input, const FinSet& output,
                                       const FinSet& states) {
  std::vector<MealyMachine> out;
  const auto cells = input.size() * states.size();
  for_each_assignment(cells, states.size(), [&](const std::vector<Elem>& d) {
    for_each_assignment(cells, output.size(), [&](const std::vector<Elem>& s) {
      out.emplace_back(input, output, states, Table(input.size(), states.size(), d),
                       Table(input.size(), states.size(), s));
      return true;
    });
    return true;
  });
  return out;
}

Elem uniform_below(Rng& rng, std::size_t n) { return n == 0 ? 0 : rng() % n; }

FinFun random_function(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (cod.empty() && !dom.empty()) throw InputError("", "no function into the empty set");
  std::vector<Elem> t(dom.size());
  for (auto& x : t) x = uniform_below(rng, cod.size());
  return FinFun(dom, cod, std::move(t));
}

MealyMachine random_machine(Rng& rng, const FinSet& input, const FinSet& output,
                            const FinSet& states) {
  Table d(input.size(), states.size()), s(input.size(), states.size());
  for (Elem a = 0; a < input.size(); ++a)
    for (Elem e = 0; e < states.size(); ++e) {
      d(a, e) = uniform_below(rng, states.size());
      s(a, e) = uniform_below(rng, output.size());
    }
  return MealyMachine(input, output, states, std::move(d), std::move(s));
}

std::optional<Cell> random_cell_from(Rng& rng, const MealyMachine& top, const FinFun& f,
                                     const FinFun& g, const FinSet& bottom_states, int attempts) {
  const auto nx = f.cod().size(), ne = bottom_states.size();
  if (ne == 0 && !top.states().empty()) return std::nullopt;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const auto alpha = random_function(rng, top.states(), bottom_states);
    std::vector<std::optional<Elem>> d(nx * ne), s(nx * ne);
    bool ok = true;
    for (Elem a = 0; a < top.input().size() && ok; ++a)
      for (Elem e = 0; e < top.states().size() && ok; ++e) {
        const auto k = f(a) * ne + alpha(e);
        const Elem want_d = alpha(top.next(a, e)), want_s = g(top.out(a, e));
        if ((d[k] && *d[k] != want_d) || (s[k] && *s[k] != want_s)) ok = false;
        d[k] = want_d;
        s[k] = want_s;
      }
    if (!ok) continue;
    Table dt(nx, ne), st(nx, ne);
    for (Elem x = 0; x < nx; ++x)
      for (Elem e = 0; e < ne; ++e) {
        const auto k = x * ne + e;
        dt(x, e) = d[k] ? *d[k] : uniform_below(rng, ne);
        if (s[k])
          st(x, e) = *s[k];
        else if (g.cod().empty())
          ok = false;
        else
          st(x, e) = uniform_below(rng, g.cod().size());
      }
    if (!ok) continue;
    Cell c{top, MealyMachine(f.cod(), g.cod(), bottom_states, std::move(dt), std::move(st)), f, g,
           alpha};
    return c;
  }
  return std::nullopt;
}

}  // namespace mly
