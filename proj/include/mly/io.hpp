#pragma once

// JSON documents. Every object carries a "kind" discriminator; nested
// objects may omit it. Finite sets are written either as a bare size or as
// {"size": n, "labels": [...]}. Tables are arrays of rows. Parse errors are
// InputError with a JSON-pointer path to the offending datum.

#include <iosfwd>
#include <string>
#include <variant>

#include "mly/doublecat.hpp"
#include "mly/free_monad.hpp"
#include "mly/modules.hpp"
#include "mly/monads.hpp"

namespace mly {

json to_json(const FinSet& x);
json to_json(const FinFun& f);
json to_json(const MealyMachine& m);
json to_json(const Cell& c);
json to_json(const FinMonoid& m);
json to_json(const MatchedPair& p);
json to_json(const DoubleMonad& m);
json to_json(const ModuleStructure& m);
json to_json(const DoubleMonad& m, const BicrossedRepresentation& r);
json to_json(const FreeMonadConfig& cfg);
json to_json(const Witness& w);
json to_json(const Verdict& v);
json table_json(const Table& t);

struct RepresentationDoc {
  DoubleMonad monad;
  BicrossedRepresentation rep;
};

struct OutputMap {
  FinSet output;
  Table sigma;  // A x Q
};

struct TightMorphismDoc {
  DoubleMonad source;
  DoubleMonad target;
  TightMonadMorphism morphism;
};

struct LooseMapDoc {
  DoubleMonad source;
  DoubleMonad target;
  LooseMonadMap map;
};

struct AdjunctionDoc {
  MealyMachine l;
  MealyMachine r;
  Cell eta;
  Cell epsilon;
};

struct CospanDoc {
  FinFun f;
  FinFun g;
  std::optional<Cell> left;
  std::optional<Cell> right;
};

json to_json(const TightMorphismDoc& t);
json to_json(const LooseMapDoc& u);
json to_json(const OutputMap& o);
json to_json(const CellGrid& g);

FinSet parse_finset(const json& j, const std::string& path = "");
FinFun parse_function(const json& j, const std::string& path = "");
/// A bare list of images, or a function object whose dom/cod must agree.
FinFun parse_function_on(const json& j, const FinSet& dom, const FinSet& cod, const std::string& path);
Table parse_table(const json& j, std::size_t rows, std::size_t cols, std::size_t bound,
                  const std::string& path);
MealyMachine parse_machine(const json& j, const std::string& path = "");
Cell parse_cell(const json& j, const std::string& path = "");
FinMonoid parse_monoid(const json& j, const std::string& path = "");
MatchedPair parse_matched_pair(const json& j, const std::string& path = "");
DoubleMonad parse_monad(const json& j, const std::string& path = "");
ModuleStructure parse_module(const json& j, const std::string& path = "");
RepresentationDoc parse_representation(const json& j, const std::string& path = "");
OutputMap parse_output_map(const json& j, const std::string& path = "");
TightMorphismDoc parse_tight_morphism(const json& j, const std::string& path = "");
LooseMapDoc parse_loose_map(const json& j, const std::string& path = "");
CellGrid parse_grid(const json& j, const std::string& path = "");
AdjunctionDoc parse_adjunction(const json& j, const std::string& path = "");
CospanDoc parse_cospan(const json& j, const std::string& path = "");
BicrossedElement parse_element(const json& j, const std::string& path = "");

using Document = std::variant<FinSet, FinFun, MealyMachine, Cell, FinMonoid, MatchedPair,
                              DoubleMonad, ModuleStructure, RepresentationDoc, OutputMap,
                              TightMorphismDoc, LooseMapDoc, CellGrid, AdjunctionDoc, CospanDoc>;

/// Dispatches on "kind".
Document parse_document(const json& j, const std::string& path = "");

/// A JSON array parses element-wise; any other document is a bundle of one.
std::vector<Document> parse_bundle(const json& j);

/// Reads a file ("-" = standard input). Malformed JSON is an InputError.
json read_json(const std::string& path);
json read_json(std::istream& in, const std::string& name);

}  // namespace mly
