#include "mly/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <ostream>

#include "mly/io.hpp"

namespace mly {

namespace {

struct Report {
  Exit status = Exit::ok;
  json body;
};

Report verdict_report(const Verdict& v) { return {v ? Exit::ok : Exit::violation, to_json(v)}; }

template <class T>
T as(const Document& d, const char* kind, const std::string& path = "") {
  if (const T* p = std::get_if<T>(&d)) return *p;
  throw InputError(path, std::string("expected a ") + kind + " document");
}

template <class T>
T load(const std::string& file, const char* kind) {
  return as<T>(parse_document(read_json(file)), kind);
}

std::vector<Document> load_bundle(const std::string& file, std::size_t size) {
  auto docs = parse_bundle(read_json(file));
  if (docs.size() != size)
    throw InputError("", "expected a bundle of " + std::to_string(size) + " documents");
  return docs;
}

MatchedPair load_pair(const std::string& file) {
  auto d = parse_document(read_json(file));
  if (auto* m = std::get_if<DoubleMonad>(&d)) return derive_matched_pair(*m);
  return as<MatchedPair>(d, "matched_pair or monad");
}

BicrossedElement element_arg(const std::string& text, const MatchedPair& p, const char* which) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw InputError(std::string("/") + which, "malformed element");
  }
  auto x = parse_element(j, std::string("/") + which);
  if (x.e >= p.monoid().size()) throw InputError(std::string("/") + which + "/e", "state out of range");
  for (std::size_t i = 0; i < x.w.size(); ++i)
    if (x.w[i] >= p.alphabet().size())
      throw InputError(std::string("/") + which + "/w/" + std::to_string(i), "letter out of range");
  return x;
}

json partial_table(const TruncatedFreeMonad& m) {
  json rows = json::array();
  for (Elem x = 0; x < m.words().size(); ++x) {
    json row = json::array();
    for (Elem y = 0; y < m.words().size(); ++y) {
      auto p = m.multiply(x, y);
      row.push_back(p ? json(*p) : json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Options {
  std::size_t bound = 4;
  std::uint64_t seed = 0;
  std::string format = "json";
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for Mealy machines, their cells, monads and modules"};
  app.name("mly");
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--bound", opt.bound, "Word length bound for bounded checks")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();

  std::function<Report()> action;
  std::string file;

  auto* check_cell_cmd = app.add_subcommand("check-cell", "Check the cell condition");
  check_cell_cmd->add_option("file", file)->required();
  check_cell_cmd->callback([&] {
    action = [&] { return verdict_report(check_cell(load<Cell>(file, "cell"))); };
  });

  std::string direction = "loose";
  auto* compose_cmd = app.add_subcommand("compose", "Compose two machines or two cells (bundle of two)");
  compose_cmd->add_option("file", file)->required();
  compose_cmd->add_option("--direction", direction)
      ->check(CLI::IsMember({"loose", "horizontal", "vertical"}))
      ->capture_default_str();
  compose_cmd->callback([&] {
    action = [&]() -> Report {
      auto docs = load_bundle(file, 2);
      if (direction == "loose")
        return {Exit::ok, to_json(loose_compose(as<MealyMachine>(docs[0], "machine", "/0"),
                                                as<MealyMachine>(docs[1], "machine", "/1")))};
      const auto c1 = as<Cell>(docs[0], "cell", "/0");
      const auto c2 = as<Cell>(docs[1], "cell", "/1");
      return {Exit::ok, to_json(direction == "horizontal" ? horizontal(c1, c2) : vertical(c1, c2))};
    };
  });

  auto* check_monad_cmd = app.add_subcommand("check-monad", "Check the monad axioms");
  check_monad_cmd->add_option("file", file)->required();
  check_monad_cmd->callback([&] {
    action = [&] { return verdict_report(check_monad(load<DoubleMonad>(file, "monad"))); };
  });

  std::size_t size_a = 2, size_e = 2, budget = default_monad_budget;
  auto* enum_cmd = app.add_subcommand("enumerate-monads", "List every monad of the given sizes");
  enum_cmd->add_option("--alphabet", size_a)->capture_default_str();
  enum_cmd->add_option("--states", size_e)->capture_default_str();
  enum_cmd->add_option("--budget", budget)->capture_default_str();
  enum_cmd->callback([&] {
    action = [&]() -> Report {
      const auto ms = enumerate_monads(size_a, size_e, budget);
      json list = json::array();
      for (const auto& m : ms) list.push_back(to_json(m));
      return {Exit::ok, json{{"count", ms.size()}, {"monads", std::move(list)}}};
    };
  });

  auto* pair_cmd = app.add_subcommand("matched-pair", "Derive the matched pair of a monad");
  pair_cmd->add_option("file", file)->required();
  pair_cmd->callback([&] {
    action = [&]() -> Report {
      const auto p = derive_matched_pair(load<DoubleMonad>(file, "monad"));
      auto v = check_bicrossed_equations(p, opt.bound);
      auto body = to_json(p);
      body["equations"] = to_json(v);
      return {v ? Exit::ok : Exit::violation, body};
    };
  });

  std::string left, right;
  auto* bicrossed_cmd = app.add_subcommand("bicrossed", "Bicrossed product of a matched pair");
  bicrossed_cmd->require_subcommand(1);
  auto* mult_cmd = bicrossed_cmd->add_subcommand("multiply", "Multiply two elements");
  mult_cmd->add_option("file", file)->required();
  mult_cmd->add_option("--left", left, "Element as {\"e\":i,\"w\":[...]}")->required();
  mult_cmd->add_option("--right", right, "Element as {\"e\":i,\"w\":[...]}")->required();
  mult_cmd->callback([&] {
    action = [&]() -> Report {
      const auto p = load_pair(file);
      const auto x = bicrossed_multiply(element_arg(left, p, "left"), element_arg(right, p, "right"), p);
      return {Exit::ok, json{{"product", to_json(x)}}};
    };
  });
  auto* bcheck_cmd = bicrossed_cmd->add_subcommand("check", "Check the matched-pair equations and product laws");
  bcheck_cmd->add_option("file", file)->required();
  bcheck_cmd->callback([&] {
    action = [&]() -> Report {
      const auto p = load_pair(file);
      auto v = check_bicrossed_equations(p, opt.bound);
      if (v) v = check_bicrossed_product_laws(p, opt.bound);
      if (v) v = bicrossed_cospan_relations(p, opt.bound);
      return verdict_report(v);
    };
  });
  auto* cayley_cmd = bicrossed_cmd->add_subcommand("cayley", "Multiplication table up to --bound");
  cayley_cmd->add_option("file", file)->required();
  cayley_cmd->callback([&] {
    action = [&]() -> Report {
      const auto p = load_pair(file);
      const auto elems = bicrossed_elements(p, opt.bound);
      json names = json::array(), table = json::array();
      for (const auto& x : elems) names.push_back(to_json(x));
      for (const auto& x : elems) {
        json row = json::array();
        for (const auto& y : elems) {
          if (x.w.size() + y.w.size() > opt.bound) {
            row.push_back(nullptr);
            continue;
          }
          const auto xy = bicrossed_multiply(x, y, p);
          row.push_back(std::lower_bound(elems.begin(), elems.end(), xy,
                                         [](const BicrossedElement& a, const BicrossedElement& b) {
                                           return std::make_tuple(a.e, a.w.size(), std::cref(a.w)) <
                                                  std::make_tuple(b.e, b.w.size(), std::cref(b.w));
                                         }) - elems.begin());
        }
        table.push_back(std::move(row));
      }
      return {Exit::ok, json{{"elements", std::move(names)}, {"table", std::move(table)}}};
    };
  });

  bool reverse = false, law_search = false;
  std::string threading = "threaded", mu_order = "concat", target_file, gamma_file;
  auto* free_cmd = app.add_subcommand("free-monad", "Truncated free monad on an endo machine");
  free_cmd->add_option("file", file);
  free_cmd->add_flag("--reverse", reverse, "Reverse the tail in the output recursion");
  free_cmd->add_option("--threading", threading)->check(CLI::IsMember({"threaded", "pointwise"}))->capture_default_str();
  free_cmd->add_option("--mu-order", mu_order)->check(CLI::IsMember({"concat", "reversed"}))->capture_default_str();
  free_cmd->add_flag("--law-search", law_search, "Compare every reading over all small generators");
  free_cmd->add_option("--target", target_file, "Monad to extend a cell into");
  free_cmd->add_option("--gamma", gamma_file, "Cell from the generator into --target");
  free_cmd->callback([&] {
    action = [&]() -> Report {
      if (law_search) return {Exit::ok, free_monad_discrepancy_report(opt.bound, 2, 2)};
      if (file.empty()) throw InputError("", "a generator machine is required");
      FreeMonadConfig cfg{opt.bound, reverse,
                          threading == "threaded" ? Threading::threaded : Threading::pointwise,
                          mu_order == "concat" ? MuOrder::concat : MuOrder::reversed};
      const auto m = free_monad(load<MealyMachine>(file, "machine"), cfg);
      const auto v = check_truncated_monad(m);
      json body{{"config", to_json(cfg)}, {"machine", to_json(m.machine())}, {"words", m.words()},
                {"e0", m.unit()},         {"mu", partial_table(m)},        {"nu", to_json(m.nu())},
                {"laws", to_json(v)}};
      Exit status = v ? Exit::ok : Exit::violation;
      if (!target_file.empty() || !gamma_file.empty()) {
        if (target_file.empty() || gamma_file.empty())
          throw InputError("", "--target and --gamma go together");
        const auto target = load<DoubleMonad>(target_file, "monad");
        const auto gamma = load<Cell>(gamma_file, "cell");
        const auto ext = free_monad_extend(m, target, gamma);
        const auto mv = check_truncated_morphism(m, target, ext);
        body["extension"] = {{"map", ext.table()}, {"morphism", to_json(mv)}};
        if (!mv) status = Exit::violation;
      }
      return {status, body};
    };
  });

  auto* module_cmd = app.add_subcommand("check-module", "Check the module axioms");
  module_cmd->add_option("file", file)->required();
  module_cmd->callback([&] {
    action = [&] { return verdict_report(check_module(load<ModuleStructure>(file, "module"))); };
  });

  std::string to;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a module to a representation or back");
  convert_cmd->add_option("file", file, "Module, or bundle [representation, output_map]")->required();
  convert_cmd->add_option("--to", to)->check(CLI::IsMember({"action", "module"}))->required();
  convert_cmd->callback([&] {
    action = [&]() -> Report {
      if (to == "action") {
        const auto m = load<ModuleStructure>(file, "module");
        if (auto v = check_module(m); !v) return verdict_report(v);
        return {Exit::ok, to_json(m.monad, module_to_action(m))};
      }
      auto docs = load_bundle(file, 2);
      const auto r = as<RepresentationDoc>(docs[0], "representation", "/0");
      const auto o = as<OutputMap>(docs[1], "output_map", "/1");
      return {Exit::ok, to_json(action_to_module(r.monad, r.rep, o.output, o.sigma, opt.bound))};
    };
  });

  auto* matching_cmd = app.add_subcommand("check-matching", "Check the matching relation of a representation");
  matching_cmd->add_option("file", file)->required();
  matching_cmd->callback([&] {
    action = [&]() -> Report {
      const auto r = load<RepresentationDoc>(file, "representation");
      return verdict_report(check_matching_relation(r.monad, r.rep, opt.bound));
    };
  });

  auto* companion_cmd = app.add_subcommand("companion", "Companion of a function");
  companion_cmd->add_option("file", file)->required();
  companion_cmd->callback([&] {
    action = [&]() -> Report {
      const auto f = load<FinFun>(file, "function");
      const auto c = companion(f);
      return {Exit::ok, json{{"companion", to_json(c.machine)},
                             {"eta", to_json(c.eta)},
                             {"epsilon", to_json(c.epsilon)},
                             {"identities", to_json(check_companion_identities(f, c))}}};
    };
  });

  std::size_t conjoint_states = 1;
  auto* conjoint_cmd = app.add_subcommand("conjoint", "Search for a conjoint of a function");
  conjoint_cmd->add_option("file", file)->required();
  conjoint_cmd->add_option("--states", conjoint_states, "Largest state set searched")->capture_default_str();
  conjoint_cmd->callback([&] {
    action = [&]() -> Report {
      const auto f = load<FinFun>(file, "function");
      const auto c = conjoint_search(f, conjoint_states);
      json body{{"bijective", f.is_bijective()}, {"exists", c.has_value()}};
      if (!c) return {Exit::violation, body};
      body["conjoint"] = to_json(c->machine);
      body["unit"] = to_json(c->unit);
      body["counit"] = to_json(c->counit);
      return {Exit::ok, body};
    };
  });

  std::string factor_file;
  auto* cotab_cmd = app.add_subcommand("cotabulator", "Cotabulator of a machine");
  cotab_cmd->add_option("file", file)->required();
  cotab_cmd->add_option("--factor", factor_file, "Cell into an identity loose morphism to factor");
  cotab_cmd->callback([&] {
    action = [&]() -> Report {
      const auto m = load<MealyMachine>(file, "machine");
      const auto c = cotabulator(m);
      json body{{"carrier", to_json(c.carrier())}, {"quotient", to_json(c.coeq.quotient)}, {"tau", to_json(c.tau)}};
      if (!factor_file.empty()) body["factor"] = to_json(factor_through_cotabulator(c, load<Cell>(factor_file, "cell")));
      return {Exit::ok, body};
    };
  });

  auto* terminal_cmd = app.add_subcommand("terminal", "The unique cell into the terminal identity");
  terminal_cmd->add_option("file", file)->required();
  terminal_cmd->callback([&] {
    action = [&]() -> Report { return {Exit::ok, json{{"cell", to_json(terminal_cell(load<MealyMachine>(file, "machine")))}}}; };
  });

  auto* pullback_cmd = app.add_subcommand("pullback", "Double pullback of a cospan of functions");
  pullback_cmd->add_option("file", file)->required();
  pullback_cmd->callback([&] {
    action = [&]() -> Report {
      const auto c = load<CospanDoc>(file, "cospan");
      const auto p = c.left ? double_pullback(c.f, c.g, *c.left, *c.right) : double_pullback(c.f, c.g);
      json pairs = json::array();
      for (auto [x, y] : p.pb.pairs) pairs.push_back({x, y});
      json body{{"object", to_json(p.pb.object)}, {"pairs", std::move(pairs)},
                {"left", to_json(p.pb.left)},     {"right", to_json(p.pb.right)},
                {"proj_left", to_json(p.proj_left)}, {"proj_right", to_json(p.proj_right)}};
      if (p.mediating) body["mediating"] = to_json(*p.mediating);
      return {Exit::ok, body};
    };
  });

  std::size_t random_grids = 0, max_size = 3;
  auto* inter_cmd = app.add_subcommand("interchange", "Check the interchange law on a 2x2 grid of cells");
  inter_cmd->add_option("file", file);
  inter_cmd->add_option("--random", random_grids, "Check this many seeded random grids instead");
  inter_cmd->add_option("--max-size", max_size, "Largest set in random grids")->capture_default_str();
  inter_cmd->callback([&] {
    action = [&]() -> Report {
      if (random_grids == 0) {
        if (file.empty()) throw InputError("", "a grid document or --random is required");
        return verdict_report(check_interchange(load<CellGrid>(file, "grid")));
      }
      if (max_size == 0) throw InputError("/max-size", "must be at least 1");
      Rng rng(opt.seed);
      for (std::size_t i = 0; i < random_grids; ++i) {
        const auto g = random_grid(rng, max_size);
        if (auto v = check_interchange(g); !v) {
          auto body = to_json(v);
          body["grid"] = to_json(g);
          return {Exit::violation, body};
        }
      }
      return {Exit::ok, json{{"pass", true}, {"grids", random_grids}}};
    };
  });

  bool search = false;
  std::size_t adj_a = 1, adj_b = 1, adj_states = 2;
  auto* adj_cmd = app.add_subcommand("adjunction", "Check or search for loose adjunctions");
  adj_cmd->add_option("file", file);
  adj_cmd->add_flag("--search", search, "Enumerate adjunctions between small sets");
  adj_cmd->add_option("--from", adj_a, "|A| for --search")->capture_default_str();
  adj_cmd->add_option("--to", adj_b, "|B| for --search")->capture_default_str();
  adj_cmd->add_option("--states", adj_states, "Largest state set for --search")->capture_default_str();
  adj_cmd->callback([&] {
    action = [&]() -> Report {
      if (search) {
        const auto found = search_loose_adjunctions(FinSet(adj_a), FinSet(adj_b), adj_states);
        json list = json::array();
        bool singletons = true;
        for (const auto& x : found) {
          list.push_back({{"kind", "adjunction"}, {"l", to_json(x.l)}, {"r", to_json(x.r)},
                          {"eta", to_json(x.eta)}, {"epsilon", to_json(x.epsilon)}});
          singletons = singletons && x.l.states().size() == 1 && x.r.states().size() == 1;
        }
        return {Exit::ok, json{{"count", found.size()}, {"all_singleton", singletons}, {"adjunctions", std::move(list)}}};
      }
      if (file.empty()) throw InputError("", "an adjunction document or --search is required");
      const auto a = load<AdjunctionDoc>(file, "adjunction");
      const auto v = check_loose_adjunction(a.l, a.r, a.eta, a.epsilon);
      auto body = to_json(v.verdict);
      body["singleton_carriers"] = v.singleton_carriers;
      return {v.verdict ? Exit::ok : Exit::violation, body};
    };
  });

  std::string variant;
  auto* map_cmd = app.add_subcommand("monad-map", "Check a tight or loose map of monads");
  map_cmd->add_option("variant", variant)->check(CLI::IsMember({"tight", "loose", "fugality"}))->required();
  map_cmd->add_option("file", file)->required();
  map_cmd->callback([&] {
    action = [&]() -> Report {
      if (variant == "tight") {
        const auto t = load<TightMorphismDoc>(file, "tight_morphism");
        const auto v = check_tight_monad_morphism(t.source, t.target, t.morphism);
        auto body = to_json(v);
        if (!v) return {Exit::violation, body};
        const auto h = check_induced_hom(t.source, t.target, t.morphism, opt.bound);
        body["induced_hom"] = to_json(h);
        return {h ? Exit::ok : Exit::violation, body};
      }
      const auto u = load<LooseMapDoc>(file, "loose_map");
      return verdict_report(check_loose_monad_map(u.source, u.target, u.map, variant == "fugality"));
    };
  });

  auto emit = [&](Exit status, const json& body) {
    out << body.dump(2) << "\n";
    return static_cast<int>(status);
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return static_cast<int>(Exit::input_error);
  }

  try {
    const auto r = action();
    return emit(r.status, r.body);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return emit(Exit::input_error, json{{"error", "input"}, {"path", e.path()}, {"message", e.what()}});
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return emit(Exit::input_error, json{{"error", "budget"}, {"estimate", e.estimate()}, {"budget", e.budget()}});
  } catch (const LawViolation& e) {
    return emit(Exit::violation, json{{"pass", false}, {"witness", to_json(e.witness())}});
  }
}

}  // namespace mly
