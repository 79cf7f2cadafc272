#include "mly/free_monad.hpp"

#include <algorithm>

#include "mly/io.hpp"

namespace mly {

FreeMonadConfig literal_config(std::size_t bound) {
  return FreeMonadConfig{bound, true, Threading::pointwise, MuOrder::concat};
}

std::string describe(const FreeMonadConfig& cfg) {
  return std::string(cfg.threading == Threading::threaded ? "threaded" : "pointwise") + " d+, " +
         (cfg.reverse_tail ? "reversed-tail" : "left-fold") + " s+, " +
         (cfg.mu_order == MuOrder::concat ? "concat" : "reversed") + " mu";
}

TruncatedFreeMonad::TruncatedFreeMonad(MealyMachine generator, FreeMonadConfig cfg)
    : generator_(std::move(generator)), cfg_(cfg) {
  if (!generator_.is_endo()) throw InputError("/input", "the free monad needs an endo machine");
  if (cfg_.bound == 0) throw InputError("/bound", "bound must be at least 1");
  words_ = words_up_to(generator_.states().size(), cfg_.bound);
  const auto& a = generator_.input();
  Table d(a.size(), words_.size()), s(a.size(), words_.size());
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem i = 0; i < words_.size(); ++i) {
      d(x, i) = index_of(next_word(x, words_[i]));
      s(x, i) = out_word(x, words_[i]);
    }
  machine_ = MealyMachine(a, a, FinSet(words_.size()), std::move(d), std::move(s));
}

Elem TruncatedFreeMonad::index_of(const Word& w) const {
  const auto n = generator_.states().size();
  if (w.size() > cfg_.bound) throw InputError("", "state word longer than the bound");
  std::size_t offset = 0, block = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    offset += block;
    block *= n;
  }
  std::size_t rank = 0;
  for (Elem e : w) {
    if (e >= n) throw InputError("", "state out of range");
    rank = rank * n + e;
  }
  return offset + rank;
}

std::optional<Elem> TruncatedFreeMonad::multiply(Elem x, Elem y) const {
  const auto& u = words_[x];
  const auto& v = words_[y];
  if (u.size() + v.size() > cfg_.bound) return std::nullopt;
  return index_of(cfg_.mu_order == MuOrder::concat ? concat(u, v) : concat(v, u));
}

Word TruncatedFreeMonad::next_word(Elem a, const Word& es) const {
  Word out;
  for (Elem e : es) {
    out.push_back(generator_.next(a, e));
    if (cfg_.threading == Threading::threaded) a = generator_.out(a, e);
  }
  return out;
}

Elem TruncatedFreeMonad::out_word(Elem a, const Word& es) const {
  if (!cfg_.reverse_tail) {
    for (Elem e : es) a = generator_.out(a, e);
    return a;
  }
  Word rest = es;
  while (!rest.empty()) {
    a = generator_.out(a, rest.front());
    rest.erase(rest.begin());
    std::reverse(rest.begin(), rest.end());
  }
  return a;
}

Cell TruncatedFreeMonad::nu() const {
  const auto& e = generator_.states();
  std::vector<Elem> t(e.size());
  for (Elem x = 0; x < e.size(); ++x) t[x] = index_of({x});
  const auto id = FinFun::identity(generator_.input());
  return Cell{generator_, machine_, id, id, FinFun(e, machine_.states(), std::move(t))};
}

TruncatedFreeMonad free_monad(const MealyMachine& f, const FreeMonadConfig& cfg) {
  return TruncatedFreeMonad(f, cfg);
}

Verdict check_truncated_monad(const TruncatedFreeMonad& m) {
  auto v = check_monad_laws(m.machine(), m.unit(), [&](Elem x, Elem y) { return m.multiply(x, y); });
  if (v) return v;
  // Report state words rather than their indices.
  auto words = [&](json& at) {
    for (const char* k : {"e", "e2", "e3"})
      if (at.contains(k)) at[k] = m.words()[at[k].get<Elem>()];
  };
  words(v.witness->at);
  if (v.law() != "ac_1" && v.law() != "mc_1") {
    for (json* side : {&v.witness->lhs, &v.witness->rhs})
      if (side->is_number()) *side = m.words()[side->get<Elem>()];
  }
  return v;
}

namespace {

void require_generator_cell(const TruncatedFreeMonad& m, const DoubleMonad& target, const Cell& gamma) {
  require_monad_shape(target);
  require_cell_boundaries(gamma);
  const auto& a = m.generator().input();
  if (!(target.alphabet() == a)) throw InputError("/target", "target monad must live on the same alphabet");
  if (!(gamma.top == m.generator())) throw InputError("/gamma/top", "gamma must start at the generator");
  if (!(gamma.bottom == target.machine)) throw InputError("/gamma/bottom", "gamma must end at the target monad");
  if (!(gamma.f == FinFun::identity(a)) || !(gamma.g == FinFun::identity(a)))
    throw InputError("/gamma", "gamma must have identity tights");
  if (auto v = check_cell(gamma); !v) throw InputError("/gamma", "gamma is not a cell: " + v.law() + " fails");
}

}  // namespace

FinFun free_monad_extend(const TruncatedFreeMonad& m, const DoubleMonad& target, const Cell& gamma) {
  require_generator_cell(m, target, gamma);
  std::vector<Elem> t;
  for (const auto& w : m.words()) {
    Elem acc = target.e0;
    for (std::size_t i = w.size(); i-- > 0;) acc = target.mu(gamma.alpha(w[i]), acc);
    t.push_back(acc);
  }
  return FinFun(m.machine().states(), target.states(), std::move(t));
}

Verdict check_truncated_morphism(const TruncatedFreeMonad& m, const DoubleMonad& target,
                                 const FinFun& map) {
  if (map(m.unit()) != target.e0) return Verdict::fail("eta", json::object(), map(m.unit()), target.e0);
  const auto n = m.words().size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const auto xy = m.multiply(x, y);
      if (!xy) continue;
      const Elem l = map(*xy), r = target.mu(map(x), map(y));
      if (l != r) return Verdict::fail("mu", {{"e", m.words()[x]}, {"e2", m.words()[y]}}, l, r);
    }
  const auto id = FinFun::identity(target.alphabet());
  return check_cell(Cell{m.machine(), target.machine, id, id, map});
}

std::vector<FinFun> all_free_extensions(const TruncatedFreeMonad& m, const DoubleMonad& target,
                                        const Cell& gamma) {
  require_generator_cell(m, target, gamma);
  const auto nu = m.nu();
  std::vector<FinFun> out;
  for (auto& f : all_functions(m.machine().states(), target.states()))
    if (compose(f, nu.alpha) == gamma.alpha && check_truncated_morphism(m, target, f))
      out.push_back(std::move(f));
  return out;
}

namespace {

std::vector<FreeMonadConfig> all_configs(std::size_t bound) {
  std::vector<FreeMonadConfig> out;
  for (Threading t : {Threading::threaded, Threading::pointwise})
    for (bool rev : {false, true})
      for (MuOrder mo : {MuOrder::concat, MuOrder::reversed}) out.push_back({bound, rev, t, mo});
  return out;
}

std::vector<MealyMachine> generators(std::size_t max_alphabet, std::size_t max_states) {
  std::vector<MealyMachine> out;
  for (std::size_t na = 0; na <= max_alphabet; ++na)
    for (std::size_t ne = 0; ne <= max_states; ++ne)
      for (auto& m : all_machines(FinSet(na), FinSet(na), FinSet(ne))) out.push_back(std::move(m));
  return out;
}

json entry_json(const LawSearchEntry& e) {
  json out{{"config", to_json(e.config)},
           {"reading", describe(e.config)},
           {"pass", e.generators_failing == 0},
           {"generators_checked", e.generators_checked},
           {"generators_failing", e.generators_failing}};
  if (e.first_failure) {
    out["first_failure"] = {{"generator", to_json(*e.first_failure)}, {"witness", to_json(*e.witness)}};
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

}  // namespace

std::vector<LawSearchEntry> free_monad_law_search(std::size_t bound, std::size_t max_alphabet,
                                                  std::size_t max_states) {
  const auto gens = generators(max_alphabet, max_states);
  std::vector<LawSearchEntry> out;
  for (const auto& cfg : all_configs(bound)) {
    LawSearchEntry entry{cfg, 0, 0, std::nullopt, std::nullopt};
    for (const auto& g : gens) {
      ++entry.generators_checked;
      auto v = check_truncated_monad(free_monad(g, cfg));
      if (v) continue;
      if (entry.generators_failing++ == 0) {
        entry.first_failure = g;
        entry.witness = v.witness;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

json free_monad_discrepancy_report(std::size_t bound, std::size_t max_alphabet,
                                   std::size_t max_states) {
  const auto search = free_monad_law_search(bound, max_alphabet, max_states);
  const FreeMonadConfig def{bound, false, Threading::threaded, MuOrder::concat};
  const auto lit = literal_config(bound);

  json report{{"bound", bound}, {"max_alphabet", max_alphabet}, {"max_states", max_states}};
  json all = json::array(), consistent = json::array();
  for (const auto& e : search) {
    all.push_back(entry_json(e));
    if (e.generators_failing == 0) consistent.push_back(describe(e.config));
    if (e.config == def) report["default"] = entry_json(e);
    if (e.config == lit) report["literal"] = entry_json(e);
  }
  report["search"] = std::move(all);
  report["consistent_readings"] = std::move(consistent);

  // Shortest state word on which reversing the tail changes s+.
  json divergence = nullptr;
  const auto gens = generators(max_alphabet, max_states);
  for (std::size_t len = 0; len <= bound && divergence.is_null(); ++len)
    for (const auto& g : gens) {
      const auto plain = free_monad(g, FreeMonadConfig{bound, false, Threading::threaded, MuOrder::concat});
      const auto rev = free_monad(g, FreeMonadConfig{bound, true, Threading::threaded, MuOrder::concat});
      for (const auto& w : plain.words()) {
        if (w.size() != len) continue;
        for (Elem a = 0; a < g.input().size(); ++a)
          if (plain.out_word(a, w) != rev.out_word(a, w)) {
            divergence = {{"generator", to_json(g)}, {"a", a}, {"es", w},
                          {"left_fold", plain.out_word(a, w)}, {"reversed_tail", rev.out_word(a, w)}};
            break;
          }
        if (!divergence.is_null()) break;
      }
      if (!divergence.is_null()) break;
    }
  report["reverse_tail_first_divergence"] = std::move(divergence);
  return report;
}

}  // namespace mly
