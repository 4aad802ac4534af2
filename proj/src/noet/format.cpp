#include "noet/format.hpp"

#include "noet/error.hpp"
#include "noet/examples.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace noet::format {

namespace {

using catalog::CatalogExpr;
using K = CatalogExpr::Kind;

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorCode::MalformedInput, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

ValueList values_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of values");
  ValueList out;
  for (const auto& v : j) out.push_back(value_from_json(v));
  return out;
}

Json values_to_json(ValueList values) {
  normalize(values);
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

bool windowed(Rule r) {
  switch (r) {
    case Rule::Successor: case Rule::IntGreater: case Rule::Predecessor: case Rule::IntLesser:
    case Rule::IntDiff: case Rule::IntSum: case Rule::MaxInt: case Rule::MinInt:
    case Rule::SupInterval: case Rule::SubInterval: case Rule::IntervalRule: case Rule::IntervalPrime:
    case Rule::IntervalSupset: case Rule::IntervalSubset: case Rule::IntervalMax:
      return true;
    default:
      return false;
  }
}

bool graph_rule(Rule r) { return r == Rule::Acyclic || r == Rule::AcyclicPrime; }
bool tree_rule(Rule r) {
  return r == Rule::Parent || r == Rule::Child || r == Rule::Ancestor || r == Rule::Descendant;
}

// lo..hi implied by a document space, if it has one.
std::optional<std::pair<std::int64_t, std::int64_t>> window_of(const Space& s) {
  switch (s.kind()) {
    case Space::Kind::IntRange:
    case Space::Kind::IntervalsOf:
    case Space::Kind::IntervalSetsOf:
      return std::pair{s.lo(), s.hi()};
    case Space::Kind::Product: {
      const auto& f = s.factors();
      if (f.size() == 2 && f[0].kind() == Space::Kind::IntRange && f[0] == f[1]) return std::pair{f[0].lo(), f[0].hi()};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

const char* kind_name(K k) {
  switch (k) {
    case K::Named: return "named";
    case K::Extensional: return "extensional";
    case K::Compose: return "compose";
    case K::Closure: return "closure";
    case K::Subrel: return "subrel";
    case K::Restrict: return "restrict";
    case K::Induced: return "induced";
    case K::Projection: return "projection";
    case K::Inverse: return "inverse";
  }
  return "?";
}

K kind_from_name(const std::string& s) {
  for (K k : {K::Named, K::Extensional, K::Compose, K::Closure, K::Subrel, K::Restrict, K::Induced, K::Projection,
              K::Inverse})
    if (s == kind_name(k)) return k;
  malformed("unknown relation kind \"" + s + "\"");
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("malformed document: ") + e.what());
  }
}

} // namespace

Json to_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int: return {{"int", v.as_int()}};
    case Value::Kind::Pair: return {{"pair", Json::array({to_json(v.first()), to_json(v.second())})}};
    case Value::Kind::Interval: return {{"interval", Json::array({v.as_interval().lo, v.as_interval().hi})}};
    case Value::Kind::IntervalSet: {
      Json members = Json::array();
      for (const auto& I : v.as_interval_set()) members.push_back(Json::array({I.lo, I.hi}));
      return {{"iset", members}};
    }
    case Value::Kind::Seq: {
      Json items = Json::array();
      for (auto i : v.as_seq()) items.push_back(i);
      return {{"seq", items}};
    }
    case Value::Kind::Node: return {{"node", v.as_node()}};
    case Value::Kind::Tuple: {
      Json items = Json::array();
      for (const auto& x : v.items()) items.push_back(to_json(x));
      return {{"tuple", items}};
    }
  }
  return nullptr;
}

Value value_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_number_integer()) return Value::integer(j.get<std::int64_t>());
    if (j.is_string()) return Value::node(j.get<std::string>());
    if (!j.is_object() || j.size() != 1) malformed("a value is an object with exactly one key: " + j.dump());
    const auto& [key, body] = *j.items().begin();
    if (key == "int") {
      if (!body.is_number_integer()) malformed("int value must be an integer");
      return Value::integer(body.get<std::int64_t>());
    }
    if (key == "pair") {
      if (!body.is_array() || body.size() != 2) malformed("pair needs two values");
      return Value::pair(value_from_json(body[0]), value_from_json(body[1]));
    }
    if (key == "interval") {
      if (!body.is_array() || body.size() != 2) malformed("interval needs [lo, hi]");
      return Value::interval(body[0].get<std::int64_t>(), body[1].get<std::int64_t>());
    }
    if (key == "iset") {
      std::vector<Interval> members;
      for (const auto& m : body) {
        if (!m.is_array() || m.size() != 2) malformed("iset members are [lo, hi]");
        members.push_back({m[0].get<std::int64_t>(), m[1].get<std::int64_t>()});
      }
      return Value::interval_set(std::move(members));
    }
    if (key == "seq") return Value::seq(body.get<std::vector<std::int64_t>>());
    if (key == "node") return Value::node(body.get<std::string>());
    if (key == "tuple") return Value::tuple(values_from_json(body));
    malformed("unknown value kind \"" + key + "\"");
  });
}

Value parse_value(const std::string& text) { return value_from_json(parse(text)); }

Json to_json(const Space& s) {
  switch (s.kind()) {
    case Space::Kind::IntRange: return {{"kind", "int_range"}, {"lo", s.lo()}, {"hi", s.hi()}};
    case Space::Kind::IntervalsOf: return {{"kind", "intervals_of"}, {"lo", s.lo()}, {"hi", s.hi()}};
    case Space::Kind::IntervalSetsOf: return {{"kind", "interval_sets_of"}, {"lo", s.lo()}, {"hi", s.hi()}};
    case Space::Kind::Product: {
      Json of = Json::array();
      for (const auto& f : s.factors()) of.push_back(to_json(f));
      return {{"kind", "product"}, {"of", of}};
    }
    case Space::Kind::Integers: return {{"kind", "integers"}};
    case Space::Kind::Explicit:
    case Space::Kind::Filtered:
      return {{"kind", "explicit"}, {"values", values_to_json(s.values())}};
  }
  return nullptr;
}

Space space_from_json(const Json& j, std::size_t max_space) {
  return guarded([&] {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "int_range") return Space::int_range(int_field(j, "lo"), int_field(j, "hi"), max_space);
    if (kind == "intervals_of") return Space::intervals_of(int_field(j, "lo"), int_field(j, "hi"), max_space);
    if (kind == "interval_sets_of") return Space::interval_sets_of(int_field(j, "lo"), int_field(j, "hi"), max_space);
    if (kind == "explicit") return Space::explicit_values(values_from_json(field(j, "values")), max_space);
    if (kind == "integers") return Space::integers();
    if (kind == "product") {
      std::vector<Space> factors;
      for (const auto& f : field(j, "of")) factors.push_back(space_from_json(f, max_space));
      return Space::product(std::move(factors), max_space);
    }
    malformed("unknown space kind \"" + kind + "\"");
  });
}

Json to_json(const std::vector<ValuePair>& pairs) {
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Json out = Json::array();
  for (const auto& [a, b] : sorted) out.push_back(Json::array({to_json(a), to_json(b)}));
  return out;
}

std::vector<ValuePair> pairs_from_json(const Json& j) {
  if (!j.is_array()) malformed("pairs must be an array");
  std::vector<ValuePair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) malformed("each pair is a two-element array: " + p.dump());
    out.emplace_back(value_from_json(p[0]), value_from_json(p[1]));
  }
  return out;
}

Json to_json(const CatalogExpr& e) {
  Json j{{"kind", kind_name(e.kind)}};
  auto operand = [&](std::size_t i) { return e.operands.size() > i ? to_json(e.operands[i]) : Json(nullptr); };
  switch (e.kind) {
    case K::Named:
      j["name"] = std::string(rule_name(e.rule));
      if (windowed(e.rule)) {
        j["lo"] = e.lo;
        j["hi"] = e.hi;
      } else if (graph_rule(e.rule)) {
        j["nodes"] = values_to_json(e.values);
        j["edges"] = to_json(e.pairs);
      } else if (tree_rule(e.rule)) {
        j["nodes"] = values_to_json(e.values);
        j["parent_of"] = to_json(e.pairs);
      } else {
        j["base"] = values_to_json(e.values);
      }
      break;
    case K::Extensional:
      if (e.over) j["over"] = to_json(*e.over);
      j["pairs"] = to_json(e.pairs);
      break;
    case K::Compose: j["of"] = Json::array({operand(0), operand(1)}); break;
    case K::Closure:
    case K::Inverse: j["of"] = operand(0); break;
    case K::Subrel:
      j["of"] = operand(0);
      j["pairs"] = to_json(e.pairs);
      break;
    case K::Restrict:
      j["of"] = operand(0);
      if (e.to) j["to"] = to_json(*e.to);
      break;
    case K::Induced:
      j["of"] = operand(0);
      if (e.over) j["over"] = to_json(*e.over);
      if (!e.function_map.empty()) {
        j["map"] = to_json(e.function_map);
      } else {
        j["function"] = e.function;
        if (e.function == "depth") j["parent_of"] = to_json(e.pairs);
      }
      break;
    case K::Projection:
      j["of"] = operand(0);
      if (e.over) j["over"] = to_json(*e.over);
      j["index"] = e.index;
      break;
  }
  return j;
}

CatalogExpr expr_from_json(const Json& j, const Space& context, std::size_t max_space) {
  return guarded([&] {
    CatalogExpr e;
    e.kind = kind_from_name(field(j, "kind").get<std::string>());
    // Operands of induced and projection live on the function's codomain,
    // so they get no defaults from the document space.
    const Space none = Space::explicit_values({});
    auto sub = [&](const Json& x, const Space& ctx) { e.operands.push_back(expr_from_json(x, ctx, max_space)); };
    auto over = [&] { return j.contains("over") ? space_from_json(j.at("over"), max_space) : context; };
    switch (e.kind) {
      case K::Named: {
        const auto name = field(j, "name").get<std::string>();
        auto rule = rule_from_name(name);
        if (!rule) throw Error(ErrorCode::MalformedExpr, "unknown catalog relation \"" + name + "\"", name);
        e.rule = *rule;
        if (windowed(e.rule)) {
          auto window = window_of(context);
          if (j.contains("lo") || j.contains("hi")) {
            e.lo = int_field(j, "lo");
            e.hi = int_field(j, "hi");
          } else if (window) {
            std::tie(e.lo, e.hi) = *window;
          } else {
            malformed(name + " needs lo and hi here");
          }
        } else if (graph_rule(e.rule)) {
          e.values = values_from_json(j.value("nodes", Json::array()));
          e.pairs = pairs_from_json(field(j, "edges"));
        } else if (tree_rule(e.rule)) {
          e.values = values_from_json(j.value("nodes", Json::array()));
          e.pairs = pairs_from_json(field(j, "parent_of"));
        } else if (e.rule == Rule::Supset || e.rule == Rule::Subset) {
          e.values = values_from_json(field(j, "base"));
        } else {
          throw Error(ErrorCode::MalformedExpr, name + " is a constructor, not a named relation", name);
        }
        normalize(e.values);
        break;
      }
      case K::Extensional:
        e.over = over();
        e.pairs = pairs_from_json(field(j, "pairs"));
        break;
      case K::Compose: {
        const auto& of = field(j, "of");
        if (!of.is_array() || of.size() != 2) malformed("compose needs \"of\": [r, s]");
        sub(of[0], context);
        sub(of[1], context);
        break;
      }
      case K::Closure:
      case K::Inverse: sub(field(j, "of"), context); break;
      case K::Subrel:
        sub(field(j, "of"), context);
        e.pairs = pairs_from_json(field(j, "pairs"));
        break;
      case K::Restrict:
        sub(field(j, "of"), context);
        e.to = space_from_json(field(j, "to"), max_space);
        break;
      case K::Induced:
        sub(field(j, "of"), none);
        e.over = over();
        if (j.contains("map")) {
          e.function_map = pairs_from_json(j.at("map"));
        } else {
          e.function = field(j, "function").get<std::string>();
          if (e.function == "depth") e.pairs = pairs_from_json(field(j, "parent_of"));
        }
        break;
      case K::Projection:
        sub(field(j, "of"), none);
        e.over = over();
        e.index = field(j, "index").get<std::size_t>();
        break;
    }
    return e;
  });
}

Json to_json(const RelationDoc& d) { return {{"space", to_json(d.space)}, {"relation", to_json(d.relation)}}; }

RelationDoc relation_doc_from_json(const Json& j, std::size_t max_space) {
  auto space = space_from_json(field(j, "space"), max_space);
  auto rel = expr_from_json(field(j, "relation"), space, max_space);
  return {space, rel};
}

namespace {

Relation onto(const Relation& r, const Space& space, const char* what) {
  if (r.space() == space && r.homogeneous()) return r;
  if (r.homogeneous() && space.enumerable() &&
      std::all_of(space.values().begin(), space.values().end(), [&](const Value& v) { return r.space().contains(v); }))
    return catalog::restrict_to(r, space);
  throw Error(ErrorCode::SpaceMismatch, std::string(what) + " does not live on the document space");
}

} // namespace

Relation build(const RelationDoc& d, std::size_t max_space) {
  return onto(catalog::build(d.relation, max_space), d.space, "the relation");
}

RelationDoc extensional_doc(const Relation& r) {
  CatalogExpr e;
  e.kind = K::Extensional;
  e.over = r.space();
  e.pairs = r.pairs();
  return {r.space(), e};
}

Json to_json(const LoopDoc& d) {
  Json j{{"space", to_json(d.space)}, {"order", to_json(d.order)}, {"body", to_json(d.body)}};
  if (d.inputs) j["inputs"] = to_json(*d.inputs);
  if (d.init) j["init"] = to_json(*d.init);
  if (d.postcondition) j["postcondition"] = *d.postcondition;
  return j;
}

LoopDoc loop_doc_from_json(const Json& j, std::size_t max_space) {
  return guarded([&] {
    LoopDoc d{space_from_json(field(j, "space"), max_space), {}, {}, {}, {}, {}};
    if (j.contains("inputs")) d.inputs = space_from_json(j.at("inputs"), max_space);
    d.order = expr_from_json(field(j, "order"), d.space, max_space);
    d.body = expr_from_json(field(j, "body"), d.space, max_space);
    if (j.contains("init")) {
      const auto& init = j.at("init");
      if (!(init.is_string() && init.get<std::string>() == "identity")) d.init = pairs_from_json(init);
    }
    if (j.contains("postcondition")) {
      d.postcondition = j.at("postcondition").get<std::string>();
      examples::oracle(*d.postcondition);
    }
    return d;
  });
}

LoopDef candidate(const LoopDoc& d, std::size_t max_space) {
  const Space& X = d.space;
  const Space inputs = d.inputs.value_or(X);
  auto order = catalog::build(d.order, max_space);
  auto body = onto(catalog::build(d.body, max_space), X, "the body");
  Relation init = Relation::identity(X);
  if (!d.init) {
    init = Relation::from_image(inputs, X, [](const Value& v) { return ValueList{v}; });
  } else {
    ValueList range;
    for (const auto& [i, x] : *d.init) range.push_back(x);
    bool inside = std::all_of(range.begin(), range.end(), [&](const Value& v) { return X.contains(v); });
    init = Relation::extensional(inputs, inside ? X : Space::explicit_values(range, max_space), *d.init);
  }
  std::optional<Postcondition> post;
  if (d.postcondition) post = examples::oracle(*d.postcondition);
  return LoopDef::candidate(LoopParts{X, order, init, body, post, {}});
}

bool is_loop_document(const Json& j) { return j.is_object() && j.contains("body"); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace noet::format
