#include "mly/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mly {

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& r : t.to_rows()) rows.push_back(r);
  return rows;
}

json to_json(const FinSet& x) {
  if (!x.has_labels()) return x.size();
  return json{{"size", x.size()}, {"labels", x.labels()}};
}

json to_json(const FinFun& f) {
  return json{{"kind", "function"}, {"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", f.table()}};
}

json to_json(const MealyMachine& m) {
  return json{{"kind", "machine"},
              {"input", to_json(m.input())},
              {"output", to_json(m.output())},
              {"states", to_json(m.states())},
              {"d", table_json(m.d())},
              {"s", table_json(m.s())}};
}

json to_json(const Cell& c) {
  return json{{"kind", "cell"},       {"top", to_json(c.top)}, {"bottom", to_json(c.bottom)},
              {"f", c.f.table()},     {"g", c.g.table()},      {"alpha", c.alpha.table()}};
}

json to_json(const FinMonoid& m) {
  return json{{"kind", "monoid"}, {"carrier", to_json(m.carrier())}, {"unit", m.unit()}, {"mult", table_json(m.mult())}};
}

json to_json(const MatchedPair& p) {
  return json{{"kind", "matched_pair"},
              {"monoid", to_json(p.monoid())},
              {"alphabet", to_json(p.alphabet())},
              {"d", table_json(p.d())},
              {"s", table_json(p.s())}};
}

json to_json(const DoubleMonad& m) {
  return json{{"kind", "monad"}, {"machine", to_json(m.machine)}, {"e0", m.e0}, {"mu", table_json(m.mu)}};
}

json to_json(const ModuleStructure& m) {
  return json{{"kind", "module"}, {"monad", to_json(m.monad)}, {"machine", to_json(m.machine)}, {"xi", table_json(m.xi)}};
}

json to_json(const DoubleMonad& m, const BicrossedRepresentation& r) {
  return json{{"kind", "representation"},
              {"monad", to_json(m)},
              {"set", to_json(r.set)},
              {"alpha", table_json(r.alpha)},
              {"beta", table_json(r.beta)}};
}

json to_json(const FreeMonadConfig& cfg) {
  return json{{"bound", cfg.bound},
              {"reverse_tail", cfg.reverse_tail},
              {"threading", cfg.threading == Threading::threaded ? "threaded" : "pointwise"},
              {"mu_order", cfg.mu_order == MuOrder::concat ? "concat" : "reversed"}};
}

json to_json(const Witness& w) {
  return json{{"axiom", w.law}, {"at", w.at}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

json to_json(const Verdict& v) {
  json out{{"pass", v.pass}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

json to_json(const TightMorphismDoc& t) {
  return json{{"kind", "tight_morphism"},
              {"source", to_json(t.source)},
              {"target", to_json(t.target)},
              {"f", t.morphism.f.table()},
              {"alpha", t.morphism.alpha.table()}};
}

json to_json(const LooseMapDoc& u) {
  return json{{"kind", "loose_map"},
              {"source", to_json(u.source)},
              {"target", to_json(u.target)},
              {"machine", to_json(u.map.machine)},
              {"delta", table_json(u.map.delta)},
              {"sigma", table_json(u.map.sigma)}};
}

json to_json(const OutputMap& o) {
  return json{{"kind", "output_map"}, {"output", to_json(o.output)}, {"sigma", table_json(o.sigma)}};
}

json to_json(const CellGrid& g) {
  return json{{"kind", "grid"},
              {"top_left", to_json(g.top_left)},
              {"top_right", to_json(g.top_right)},
              {"bottom_left", to_json(g.bottom_left)},
              {"bottom_right", to_json(g.bottom_right)}};
}

// Parsing ----------------------------------------------------------------

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(child(path, key), "missing field");
  return *it;
}

void require_kind(const json& j, const char* kind, const std::string& path) {
  if (!j.is_object()) throw InputError(path, std::string("expected a ") + kind + " object");
  auto it = j.find("kind");
  if (it == j.end()) return;
  if (!it->is_string() || it->get<std::string>() != kind)
    throw InputError(child(path, "kind"), std::string("expected kind \"") + kind + "\"");
}

Elem parse_index(const json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(path, "expected a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= bound)
    throw InputError(path, "index " + std::to_string(v) + " out of range (size " + std::to_string(bound) + ")");
  return v;
}

std::size_t parse_size(const json& j, const std::string& path) {
  return parse_index(j, std::numeric_limits<std::size_t>::max(), path);
}

Word parse_word(const json& j, std::size_t alphabet, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected a word (array of letters)");
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i) w.push_back(parse_index(j[i], alphabet, child(path, i)));
  return w;
}

}  // namespace

FinSet parse_finset(const json& j, const std::string& path) {
  if (j.is_number()) return FinSet(parse_size(j, path));
  require_kind(j, "finset", path);
  const auto n = parse_size(field(j, "size", path), child(path, "size"));
  auto it = j.find("labels");
  if (it == j.end()) return FinSet(n);
  if (!it->is_array()) throw InputError(child(path, "labels"), "expected an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_string()) throw InputError(child(child(path, "labels"), i), "expected a string");
    labels.push_back((*it)[i].get<std::string>());
  }
  try {
    return FinSet(n, std::move(labels));
  } catch (const InputError& e) {
    throw InputError(child(path, "labels"), e.what());
  }
}

FinFun parse_function(const json& j, const std::string& path) {
  require_kind(j, "function", path);
  auto dom = parse_finset(field(j, "dom", path), child(path, "dom"));
  auto cod = parse_finset(field(j, "cod", path), child(path, "cod"));
  return parse_function_on(field(j, "table", path), dom, cod, child(path, "table"));
}

FinFun parse_function_on(const json& j, const FinSet& dom, const FinSet& cod, const std::string& path) {
  if (j.is_object()) {
    auto f = parse_function(j, path);
    if (!(f.dom() == dom)) throw InputError(child(path, "dom"), "domain does not match its boundary");
    if (!(f.cod() == cod)) throw InputError(child(path, "cod"), "codomain does not match its boundary");
    return f;
  }
  if (!j.is_array()) throw InputError(path, "expected a function table");
  if (j.size() != dom.size())
    throw InputError(path, "expected " + std::to_string(dom.size()) + " entries, got " + std::to_string(j.size()));
  std::vector<Elem> t;
  for (std::size_t i = 0; i < j.size(); ++i) t.push_back(parse_index(j[i], cod.size(), child(path, i)));
  return FinFun(dom, cod, std::move(t));
}

Table parse_table(const json& j, std::size_t rows, std::size_t cols, std::size_t bound,
                  const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of rows");
  if (j.size() != rows)
    throw InputError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Table t(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto p = child(path, r);
    if (!j[r].is_array()) throw InputError(p, "expected a row");
    if (j[r].size() != cols)
      throw InputError(p, "expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
    for (std::size_t c = 0; c < cols; ++c) t(r, c) = parse_index(j[r][c], bound, child(p, c));
  }
  return t;
}

MealyMachine parse_machine(const json& j, const std::string& path) {
  require_kind(j, "machine", path);
  auto in = parse_finset(field(j, "input", path), child(path, "input"));
  auto out = parse_finset(field(j, "output", path), child(path, "output"));
  auto st = parse_finset(field(j, "states", path), child(path, "states"));
  auto d = parse_table(field(j, "d", path), in.size(), st.size(), st.size(), child(path, "d"));
  auto s = parse_table(field(j, "s", path), in.size(), st.size(), out.size(), child(path, "s"));
  return MealyMachine(std::move(in), std::move(out), std::move(st), std::move(d), std::move(s));
}

Cell parse_cell(const json& j, const std::string& path) {
  require_kind(j, "cell", path);
  auto top = parse_machine(field(j, "top", path), child(path, "top"));
  auto bottom = parse_machine(field(j, "bottom", path), child(path, "bottom"));
  auto f = parse_function_on(field(j, "f", path), top.input(), bottom.input(), child(path, "f"));
  auto g = parse_function_on(field(j, "g", path), top.output(), bottom.output(), child(path, "g"));
  auto a = parse_function_on(field(j, "alpha", path), top.states(), bottom.states(), child(path, "alpha"));
  return Cell{std::move(top), std::move(bottom), std::move(f), std::move(g), std::move(a)};
}

FinMonoid parse_monoid(const json& j, const std::string& path) {
  require_kind(j, "monoid", path);
  auto c = parse_finset(field(j, "carrier", path), child(path, "carrier"));
  if (c.empty()) throw InputError(child(path, "carrier"), "a monoid carrier cannot be empty");
  const auto u = parse_index(field(j, "unit", path), c.size(), child(path, "unit"));
  auto mult = parse_table(field(j, "mult", path), c.size(), c.size(), c.size(), child(path, "mult"));
  return FinMonoid(std::move(c), u, std::move(mult));
}

MatchedPair parse_matched_pair(const json& j, const std::string& path) {
  require_kind(j, "matched_pair", path);
  auto m = parse_monoid(field(j, "monoid", path), child(path, "monoid"));
  auto a = parse_finset(field(j, "alphabet", path), child(path, "alphabet"));
  auto d = parse_table(field(j, "d", path), a.size(), m.size(), m.size(), child(path, "d"));
  auto s = parse_table(field(j, "s", path), a.size(), m.size(), a.size(), child(path, "s"));
  return MatchedPair(std::move(m), std::move(a), std::move(d), std::move(s));
}

DoubleMonad parse_monad(const json& j, const std::string& path) {
  require_kind(j, "monad", path);
  auto m = parse_machine(field(j, "machine", path), child(path, "machine"));
  if (!m.is_endo()) throw InputError(child(path, "machine"), "a monad needs an endo machine A ⇸ A");
  const auto n = m.states().size();
  const auto e0 = parse_index(field(j, "e0", path), n, child(path, "e0"));
  auto mu = parse_table(field(j, "mu", path), n, n, n, child(path, "mu"));
  return DoubleMonad{std::move(m), e0, std::move(mu)};
}

ModuleStructure parse_module(const json& j, const std::string& path) {
  require_kind(j, "module", path);
  auto monad = parse_monad(field(j, "monad", path), child(path, "monad"));
  auto m = parse_machine(field(j, "machine", path), child(path, "machine"));
  if (!(m.input() == monad.alphabet()))
    throw InputError(child(child(path, "machine"), "input"), "module machine must read the monad's alphabet");
  auto xi = parse_table(field(j, "xi", path), monad.states().size(), m.states().size(),
                        m.states().size(), child(path, "xi"));
  return ModuleStructure{std::move(monad), std::move(m), std::move(xi)};
}

RepresentationDoc parse_representation(const json& j, const std::string& path) {
  require_kind(j, "representation", path);
  auto monad = parse_monad(field(j, "monad", path), child(path, "monad"));
  auto set = parse_finset(field(j, "set", path), child(path, "set"));
  auto alpha = parse_table(field(j, "alpha", path), monad.states().size(), set.size(), set.size(),
                           child(path, "alpha"));
  auto beta = parse_table(field(j, "beta", path), monad.alphabet().size(), set.size(), set.size(),
                          child(path, "beta"));
  return {std::move(monad), {std::move(set), std::move(alpha), std::move(beta)}};
}

OutputMap parse_output_map(const json& j, const std::string& path) {
  require_kind(j, "output_map", path);
  auto out = parse_finset(field(j, "output", path), child(path, "output"));
  const auto& sj = field(j, "sigma", path);
  if (!sj.is_array()) throw InputError(child(path, "sigma"), "expected an array of rows");
  const std::size_t cols = sj.empty() || !sj[0].is_array() ? 0 : sj[0].size();
  auto sigma = parse_table(sj, sj.size(), cols, out.size(), child(path, "sigma"));
  return {std::move(out), std::move(sigma)};
}

TightMorphismDoc parse_tight_morphism(const json& j, const std::string& path) {
  require_kind(j, "tight_morphism", path);
  auto src = parse_monad(field(j, "source", path), child(path, "source"));
  auto dst = parse_monad(field(j, "target", path), child(path, "target"));
  auto f = parse_function_on(field(j, "f", path), src.alphabet(), dst.alphabet(), child(path, "f"));
  auto a = parse_function_on(field(j, "alpha", path), src.states(), dst.states(), child(path, "alpha"));
  return {std::move(src), std::move(dst), {std::move(f), std::move(a)}};
}

LooseMapDoc parse_loose_map(const json& j, const std::string& path) {
  require_kind(j, "loose_map", path);
  auto src = parse_monad(field(j, "source", path), child(path, "source"));
  auto dst = parse_monad(field(j, "target", path), child(path, "target"));
  auto m = parse_machine(field(j, "machine", path), child(path, "machine"));
  if (!(m.input() == src.alphabet()))
    throw InputError(child(child(path, "machine"), "input"), "U must start at the source alphabet");
  if (!(m.output() == dst.alphabet()))
    throw InputError(child(child(path, "machine"), "output"), "U must end at the target alphabet");
  const auto ne = src.states().size(), nx = m.states().size();
  auto delta = parse_table(field(j, "delta", path), ne, nx, nx, child(path, "delta"));
  auto sigma = parse_table(field(j, "sigma", path), ne, nx, dst.states().size(), child(path, "sigma"));
  return {std::move(src), std::move(dst), {std::move(m), std::move(delta), std::move(sigma)}};
}

CellGrid parse_grid(const json& j, const std::string& path) {
  require_kind(j, "grid", path);
  return {parse_cell(field(j, "top_left", path), child(path, "top_left")),
          parse_cell(field(j, "top_right", path), child(path, "top_right")),
          parse_cell(field(j, "bottom_left", path), child(path, "bottom_left")),
          parse_cell(field(j, "bottom_right", path), child(path, "bottom_right"))};
}

AdjunctionDoc parse_adjunction(const json& j, const std::string& path) {
  require_kind(j, "adjunction", path);
  return {parse_machine(field(j, "l", path), child(path, "l")),
          parse_machine(field(j, "r", path), child(path, "r")),
          parse_cell(field(j, "eta", path), child(path, "eta")),
          parse_cell(field(j, "epsilon", path), child(path, "epsilon"))};
}

CospanDoc parse_cospan(const json& j, const std::string& path) {
  require_kind(j, "cospan", path);
  CospanDoc c{parse_function(field(j, "f", path), child(path, "f")),
              parse_function(field(j, "g", path), child(path, "g")), std::nullopt, std::nullopt};
  if (!(c.f.cod() == c.g.cod())) throw InputError(child(path, "g"), "f and g must share a codomain");
  if (auto it = j.find("witnesses"); it != j.end()) {
    const auto p = child(path, "witnesses");
    c.left = parse_cell(field(*it, "left", p), child(p, "left"));
    c.right = parse_cell(field(*it, "right", p), child(p, "right"));
  }
  return c;
}

BicrossedElement parse_element(const json& j, const std::string& path) {
  const auto max = std::numeric_limits<std::size_t>::max();
  return {parse_index(field(j, "e", path), max, child(path, "e")),
          parse_word(field(j, "w", path), max, child(path, "w"))};
}

Document parse_document(const json& j, const std::string& path) {
  if (j.is_number()) return parse_finset(j, path);
  if (!j.is_object()) throw InputError(path, "expected a document object");
  const auto& k = field(j, "kind", path);
  if (!k.is_string()) throw InputError(child(path, "kind"), "expected a string");
  const auto kind = k.get<std::string>();
  if (kind == "finset") return parse_finset(j, path);
  if (kind == "function") return parse_function(j, path);
  if (kind == "machine") return parse_machine(j, path);
  if (kind == "cell") return parse_cell(j, path);
  if (kind == "monoid") return parse_monoid(j, path);
  if (kind == "matched_pair") return parse_matched_pair(j, path);
  if (kind == "monad") return parse_monad(j, path);
  if (kind == "module") return parse_module(j, path);
  if (kind == "representation") return parse_representation(j, path);
  if (kind == "output_map") return parse_output_map(j, path);
  if (kind == "tight_morphism") return parse_tight_morphism(j, path);
  if (kind == "loose_map") return parse_loose_map(j, path);
  if (kind == "grid") return parse_grid(j, path);
  if (kind == "adjunction") return parse_adjunction(j, path);
  if (kind == "cospan") return parse_cospan(j, path);
  throw InputError(child(path, "kind"), "unknown kind \"" + kind + "\"");
}

std::vector<Document> parse_bundle(const json& j) {
  std::vector<Document> out;
  if (!j.is_array()) {
    out.push_back(parse_document(j));
    return out;
  }
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_document(j[i], child("", i)));
  return out;
}

json read_json(std::istream& in, const std::string& name) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("", name + ": malformed JSON (" + e.what() + ")");
  }
}

json read_json(const std::string& path) {
  if (path == "-") return read_json(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot read " + path);
  return read_json(in, path);
}

}  // namespace mly
