#include "mly/doublecat.hpp"

namespace mly {

namespace {

Verdict compare_cells(std::string law, const Cell& got, const Cell& want) {
  if (got == want) return Verdict::ok();
  return Verdict::fail(std::move(law), json::object(),
                       json{{"f", got.f.table()}, {"g", got.g.table()}, {"alpha", got.alpha.table()}},
                       json{{"f", want.f.table()}, {"g", want.g.table()}, {"alpha", want.alpha.table()}});
}

Verdict labelled(std::string law, Verdict v) {
  if (!v) {
    v.witness->at["cell_law"] = v.witness->law;
    v.witness->law = std::move(law);
  }
  return v;
}

}  // namespace

Verdict check_companion_identities(const FinFun& f, const Companion& c) {
  if (auto v = labelled("eta_cell", check_cell(c.eta)); !v) return v;
  if (auto v = labelled("epsilon_cell", check_cell(c.epsilon)); !v) return v;
  if (auto v = compare_cells("vertical", vertical(c.eta, c.epsilon), identity_tight_cell(f)); !v)
    return v;
  const auto whiskered =
      vertical(vertical(invert(left_unitor(c.machine)).cell, horizontal(c.eta, c.epsilon)),
               right_unitor(c.machine).cell);
  return compare_cells("horizontal", whiskered, identity_cell(c.machine));
}

Companion companion(const FinFun& f) {
  const auto& a = f.dom();
  const auto& b = f.cod();
  MealyMachine fs(a, b, FinSet(1), Table(a.size(), 1, 0),
                  Table::tabulate(a.size(), 1, [&](Elem x, Elem) { return f(x); }));
  const auto one = FinFun::identity(FinSet(1));
  Companion c{fs, Cell{fs, identity_loose(b), f, FinFun::identity(b), one},
              Cell{identity_loose(a), fs, FinFun::identity(a), f, one}};
  if (auto v = check_companion_identities(f, c); !v)
    throw std::logic_error("companion identity failed: " + v.law());
  return c;
}

Verdict check_conjoint_identities(const FinFun& f, const Conjoint& c) {
  if (auto v = labelled("unit_cell", check_cell(c.unit)); !v) return v;
  if (auto v = labelled("counit_cell", check_cell(c.counit)); !v) return v;
  if (auto v = compare_cells("vertical", vertical(c.unit, c.counit), identity_tight_cell(f)); !v)
    return v;
  const auto whiskered =
      vertical(vertical(invert(right_unitor(c.machine)).cell, horizontal(c.counit, c.unit)),
               left_unitor(c.machine).cell);
  return compare_cells("horizontal", whiskered, identity_cell(c.machine));
}

std::optional<Conjoint> conjoint_search(const FinFun& f, std::size_t state_bound) {
  const bool precheck = f.is_bijective();
  const auto& a = f.dom();
  const auto& b = f.cod();
  std::optional<Conjoint> found;
  for (std::size_t k = 1; k <= state_bound && !found; ++k) {
    const FinSet states(k);
    for (const auto& m : all_machines(b, a, states)) {
      for (Elem x0 = 0; x0 < k && !found; ++x0) {
        Conjoint c{m, Cell{identity_loose(a), m, f, FinFun::identity(a), FinFun::constant(FinSet(1), states, x0)},
                   Cell{m, identity_loose(b), FinFun::identity(b), f, FinFun::to_terminal(states)}};
        // Boundary mismatch is impossible here; only law failures are skipped.
        if (check_conjoint_identities(f, c)) found = std::move(c);
      }
      if (found) break;
    }
  }
  if (precheck != found.has_value())
    throw std::logic_error(precheck ? "bijection without a conjoint in the searched range"
                                    : "non-bijection admits a conjoint");
  return found;
}

Cotabulator cotabulator(const MealyMachine& m) {
  const auto& a = m.input();
  const auto& b = m.output();
  const auto ae = product(a, m.states());
  auto sum = coproduct(a, b);
  std::vector<Elem> via_s(ae.object.size()), via_a(ae.object.size());
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem e = 0; e < m.states().size(); ++e) {
      via_s[ae.pair(x, e)] = sum.inr(m.out(x, e));
      via_a[ae.pair(x, e)] = sum.inl(x);
    }
  auto coeq = coequalizer(FinFun(ae.object, sum.object, std::move(via_s)),
                          FinFun(ae.object, sum.object, std::move(via_a)));
  Cell tau{m, identity_loose(coeq.object), compose(coeq.quotient, sum.inl),
           compose(coeq.quotient, sum.inr), FinFun::to_terminal(m.states())};
  if (!check_cell(tau)) throw std::logic_error("cotabulator cell fails the cell condition");
  return {std::move(sum), std::move(coeq), std::move(tau)};
}

FinFun factor_through_cotabulator(const Cotabulator& c, const Cell& xi) {
  require_cell_boundaries(xi);
  if (!(xi.top == c.tau.top)) throw InputError("/top", "cell does not start at the cotabulated machine");
  if (!(xi.bottom == identity_loose(xi.bottom.input())))
    throw InputError("/bottom", "cell must end at an identity loose morphism");
  if (auto v = check_cell(xi); !v) throw LawViolation(*v.witness);
  auto h = coequalizer_factor(c.coeq, copair(c.sum, xi.f, xi.g));
  if (!h) throw LawViolation(Witness{"cotabulator_factor", json::object(), nullptr, nullptr});
  if (!(vertical(c.tau, identity_tight_cell(*h)) == xi))
    throw std::logic_error("cotabulator factorization does not recompose");
  return *h;
}

Cell terminal_cell(const MealyMachine& m) {
  return {m, identity_loose(FinSet(1)), FinFun::to_terminal(m.input()),
          FinFun::to_terminal(m.output()), FinFun::to_terminal(m.states())};
}

DoublePullback double_pullback(const FinFun& f, const FinFun& g) {
  auto pb = pullback(f, g);
  auto pl = identity_tight_cell(pb.left);
  auto pr = identity_tight_cell(pb.right);
  return {std::move(pb), std::move(pl), std::move(pr), std::nullopt};
}

DoublePullback double_pullback(const FinFun& f, const FinFun& g, const Cell& xi_left,
                               const Cell& xi_right) {
  auto out = double_pullback(f, g);
  require_cell_boundaries(xi_left);
  require_cell_boundaries(xi_right);
  if (!(xi_left.top == xi_right.top)) throw InputError("", "witness cells must share their top");
  if (!(xi_left.bottom == identity_loose(f.dom())))
    throw InputError("/left", "left witness must end at i_A");
  if (!(xi_right.bottom == identity_loose(g.dom())))
    throw InputError("/right", "right witness must end at i_B");
  if (!check_cell(xi_left) || !check_cell(xi_right))
    throw InputError("", "witnesses must be valid cells");
  if (!(vertical(xi_left, identity_tight_cell(f)) == vertical(xi_right, identity_tight_cell(g))))
    throw InputError("", "witnesses are not compatible over the cospan");
  Cell med{xi_left.top, identity_loose(out.pb.object),
           pullback_pairing(out.pb, xi_left.f, xi_right.f),
           pullback_pairing(out.pb, xi_left.g, xi_right.g),
           FinFun::to_terminal(xi_left.top.states())};
  if (!check_cell(med)) throw std::logic_error("mediating cell fails the cell condition");
  if (!(vertical(med, out.proj_left) == xi_left) || !(vertical(med, out.proj_right) == xi_right))
    throw std::logic_error("mediating cell does not recompose to the witnesses");
  out.mediating = std::move(med);
  return out;
}

Verdict check_interchange(const CellGrid& grid) {
  const Cell* cells[] = {&grid.top_left, &grid.top_right, &grid.bottom_left, &grid.bottom_right};
  const char* names[] = {"top_left", "top_right", "bottom_left", "bottom_right"};
  for (int i = 0; i < 4; ++i)
    if (auto v = check_cell(*cells[i]); !v) {
      v.witness->at["position"] = names[i];
      v.witness->at["cell_law"] = v.witness->law;
      v.witness->law = "cell";
      return v;
    }
  const auto rows_first = vertical(horizontal(grid.top_left, grid.top_right),
                                   horizontal(grid.bottom_left, grid.bottom_right));
  const auto cols_first = horizontal(vertical(grid.top_left, grid.bottom_left),
                                     vertical(grid.top_right, grid.bottom_right));
  return compare_cells("interchange", rows_first, cols_first);
}

CellGrid random_grid(Rng& rng, std::size_t max_size) {
  auto pick = [&](std::size_t lo) { return FinSet(lo + uniform_below(rng, max_size - lo + 1)); };
  for (;;) {
    const FinSet x0 = pick(1), x1 = pick(1), x2 = pick(1);
    const FinSet y0 = pick(1), y1 = pick(1), y2 = pick(1);
    const FinSet z0 = pick(1), z1 = pick(1), z2 = pick(1);
    const auto m1 = random_machine(rng, x0, x1, pick(1));
    const auto m2 = random_machine(rng, x1, x2, pick(1));
    const auto f0 = random_function(rng, x0, y0), f1 = random_function(rng, x1, y1),
               f2 = random_function(rng, x2, y2);
    const auto h0 = random_function(rng, y0, z0), h1 = random_function(rng, y1, z1),
               h2 = random_function(rng, y2, z2);
    auto tl = random_cell_from(rng, m1, f0, f1, pick(1), 20);
    if (!tl) continue;
    auto tr = random_cell_from(rng, m2, f1, f2, pick(1), 20);
    if (!tr) continue;
    auto bl = random_cell_from(rng, tl->bottom, h0, h1, pick(1), 20);
    if (!bl) continue;
    auto br = random_cell_from(rng, tr->bottom, h1, h2, pick(1), 20);
    if (!br) continue;
    return {std::move(*tl), std::move(*tr), std::move(*bl), std::move(*br)};
  }
}

AdjunctionVerdict check_loose_adjunction(const MealyMachine& l, const MealyMachine& r,
                                         const Cell& eta, const Cell& epsilon) {
  if (!(l.output() == r.input()) || !(r.output() == l.input()))
    throw InputError("", "l : A ⇸ B and r : B ⇸ A required");
  const auto& a = l.input();
  const auto& b = l.output();
  require_cell_boundaries(eta);
  require_cell_boundaries(epsilon);
  if (!(eta.top == identity_loose(a)) || !(eta.bottom == loose_compose(l, r)) ||
      !(eta.f == FinFun::identity(a)) || !(eta.g == FinFun::identity(a)))
    throw InputError("/eta", "eta must be a cell i_A -> l;r over identities");
  if (!(epsilon.top == loose_compose(r, l)) || !(epsilon.bottom == identity_loose(b)) ||
      !(epsilon.f == FinFun::identity(b)) || !(epsilon.g == FinFun::identity(b)))
    throw InputError("/epsilon", "epsilon must be a cell r;l -> i_B over identities");

  AdjunctionVerdict out;
  out.singleton_carriers = l.states().size() == 1 && r.states().size() == 1;
  out.verdict = [&] {
    if (auto v = labelled("eta_cell", check_cell(eta)); !v) return v;
    if (auto v = labelled("epsilon_cell", check_cell(epsilon)); !v) return v;
    const auto zig = vertical(
        vertical(vertical(vertical(invert(left_unitor(l)).cell, horizontal(eta, identity_cell(l))),
                          associator(l, r, l).cell),
                 horizontal(identity_cell(l), epsilon)),
        right_unitor(l).cell);
    if (auto v = compare_cells("zigzag_l", zig, identity_cell(l)); !v) return v;
    const auto zag = vertical(
        vertical(vertical(vertical(invert(right_unitor(r)).cell, horizontal(identity_cell(r), eta)),
                          invert(associator(r, l, r)).cell),
                 horizontal(epsilon, identity_cell(r))),
        left_unitor(r).cell);
    return compare_cells("zigzag_r", zag, identity_cell(r));
  }();
  return out;
}

namespace {

/// Cells i_X -> m over identity tights (so X = A = B); one per fixed state.
std::vector<Cell> unit_like_cells(const MealyMachine& m) {
  std::vector<Cell> out;
  const auto& x = m.input();
  for (Elem e = 0; e < m.states().size(); ++e) {
    Cell c{identity_loose(x), m, FinFun::identity(x), FinFun::identity(x),
           FinFun::constant(FinSet(1), m.states(), e)};
    if (check_cell(c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<LooseAdjunction> search_loose_adjunctions(const FinSet& a, const FinSet& b,
                                                      std::size_t state_bound) {
  std::vector<LooseAdjunction> out;
  std::vector<MealyMachine> ls, rs;
  for (std::size_t k = 0; k <= state_bound; ++k) {
    for (auto& m : all_machines(a, b, FinSet(k))) ls.push_back(std::move(m));
    for (auto& m : all_machines(b, a, FinSet(k))) rs.push_back(std::move(m));
  }
  for (const auto& l : ls)
    for (const auto& r : rs) {
      const auto rl = loose_compose(r, l);
      Cell eps{rl, identity_loose(b), FinFun::identity(b), FinFun::identity(b),
               FinFun::to_terminal(rl.states())};
      if (!check_cell(eps)) continue;
      for (const auto& eta : unit_like_cells(loose_compose(l, r)))
        if (check_loose_adjunction(l, r, eta, eps).verdict) out.push_back({l, r, eta, eps});
    }
  return out;
}

std::vector<Cell> cells_from_identity(const FinSet& u, const MealyMachine& m) {
  // A cell i_U -> m is a state e and f : U -> A landing in the letters that
  // fix e; g is then forced to be s(f(-), e).
  std::vector<Cell> out;
  const auto top = identity_loose(u);
  for (Elem e = 0; e < m.states().size(); ++e) {
    std::vector<Elem> fixing;
    for (Elem x = 0; x < m.input().size(); ++x)
      if (m.next(x, e) == e) fixing.push_back(x);
    for_each_assignment(u.size(), fixing.size(), [&](const std::vector<Elem>& pick) {
      std::vector<Elem> ft(u.size()), gt(u.size());
      for (Elem i = 0; i < u.size(); ++i) {
        ft[i] = fixing[pick[i]];
        gt[i] = m.out(ft[i], e);
      }
      Cell c{top, m, FinFun(u, m.input(), std::move(ft)), FinFun(u, m.output(), std::move(gt)),
             FinFun::constant(FinSet(1), m.states(), e)};
      if (!check_cell(c)) throw std::logic_error("constructed cell from identity is invalid");
      out.push_back(std::move(c));
      return true;
    });
  }
  return out;
}

std::vector<InitialRefutation> refute_initial_objects(std::size_t max_candidate,
                                                      std::size_t machine_bound) {
  std::vector<InitialRefutation> out;
  for (std::size_t n = 0; n <= max_candidate; ++n) {
    InitialRefutation ref{n, std::nullopt, 0};
    const FinSet u(n);
    for (std::size_t total = 0; total <= 3 * machine_bound && !ref.machine; ++total)
      for (std::size_t na = 0; na <= machine_bound && !ref.machine; ++na)
        for (std::size_t nb = 0; nb <= machine_bound && !ref.machine; ++nb) {
          if (na + nb > total || total - na - nb > machine_bound) continue;
          const std::size_t ne = total - na - nb;
          for (const auto& m : all_machines(FinSet(na), FinSet(nb), FinSet(ne))) {
            const auto count = enumerate_cells(identity_loose(u), m).size();
            if (count != 1) {
              ref.machine = m;
              ref.cell_count = count;
              break;
            }
          }
        }
    out.push_back(std::move(ref));
  }
  return out;
}

TabulatorSearch search_tabulator(const MealyMachine& m, std::size_t carrier_bound,
                                 std::size_t test_bound) {
  TabulatorSearch out{carrier_bound, test_bound, 0, std::nullopt};
  std::vector<std::pair<FinSet, std::vector<Cell>>> tests;
  for (std::size_t n = 0; n <= test_bound; ++n) tests.emplace_back(FinSet(n), cells_from_identity(FinSet(n), m));

  for (std::size_t t = 0; t <= carrier_bound && !out.found; ++t) {
    const FinSet carrier(t);
    for (const auto& tau : cells_from_identity(carrier, m)) {
      ++out.candidates_examined;
      bool universal = true;
      for (const auto& [x, xis] : tests) {
        const auto hs = all_functions(x, carrier);
        for (const auto& xi : xis) {
          std::size_t factorizations = 0;
          for (const auto& h : hs)
            if (vertical(identity_tight_cell(h), tau) == xi) ++factorizations;
          if (factorizations != 1) {
            universal = false;
            break;
          }
        }
        if (!universal) break;
      }
      if (universal) {
        out.found = tau;
        break;
      }
    }
  }
  return out;
}

}  // namespace mly
