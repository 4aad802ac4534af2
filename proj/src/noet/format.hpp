#pragma once

#include "noet/catalog.hpp"
#include "noet/loop.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace noet::format {

using Json = nlohmann::json;  // objects keep their keys sorted

// Values: {"int": 3}, {"pair": [v, v]}, {"interval": [lo, hi]},
// {"iset": [[lo, hi], ...]}, {"seq": [...]}, {"tuple": [...]}, {"node": "a"}.
// A bare integer or string is read as an int or a node.
Json to_json(const Value& v);
Value value_from_json(const Json& j);
Value parse_value(const std::string& text);

// Spaces: int_range, explicit, product, intervals_of, interval_sets_of and
// integers. Filtered spaces are written out as their explicit values.
Json to_json(const Space& s);
Space space_from_json(const Json& j, std::size_t max_space = kDefaultMaxSpace);

Json to_json(const std::vector<ValuePair>& pairs);  // sorted, duplicate-free
std::vector<ValuePair> pairs_from_json(const Json& j);

Json to_json(const catalog::CatalogExpr& e);
// Missing "over" spaces and missing lo/hi of named families come from
// `context`, the document's space.
catalog::CatalogExpr expr_from_json(const Json& j, const Space& context,
                                    std::size_t max_space = kDefaultMaxSpace);

// {"space": <space>, "relation": <expr>}
struct RelationDoc {
  Space space;
  catalog::CatalogExpr relation;
};

Json to_json(const RelationDoc& d);
RelationDoc relation_doc_from_json(const Json& j, std::size_t max_space = kDefaultMaxSpace);
// The relation on the document space (restricted to it when the expression
// lives on a larger carrier).
Relation build(const RelationDoc& d, std::size_t max_space = kDefaultMaxSpace);
RelationDoc extensional_doc(const Relation& r);

// {"space", "inputs"?, "order", "init"?, "body", "postcondition"?}. A missing
// init is the identity on the inputs; missing inputs are the space.
struct LoopDoc {
  Space space;
  std::optional<Space> inputs;
  catalog::CatalogExpr order;
  std::optional<std::vector<ValuePair>> init;
  catalog::CatalogExpr body;
  std::optional<std::string> postcondition;
};

Json to_json(const LoopDoc& d);
LoopDoc loop_doc_from_json(const Json& j, std::size_t max_space = kDefaultMaxSpace);
// Unchecked; pass through make_loop for the structural checks.
LoopDef candidate(const LoopDoc& d, std::size_t max_space = kDefaultMaxSpace);

// Either document kind, told apart by the "body" key.
bool is_loop_document(const Json& j);

Json parse(const std::string& text);  // MalformedInput on bad JSON
Json read_file(const std::string& path);
// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace noet::format
