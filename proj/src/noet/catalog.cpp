#include "noet/catalog.hpp"

#include "noet/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace noet::catalog {

namespace {

// Relation defined by comparing keys: [a, b] iff holds(key(a), key(b)).
// Elements are grouped by key once, so images and domain tests cost one
// pass over the distinct keys.
class KeyedImpl final : public RelationImpl {
public:
  using KeyFn = std::function<Value(const Value&)>;
  using KeyPred = std::function<bool(const Value&, const Value&)>;

  KeyedImpl(const Space& space, KeyFn key, KeyPred holds) : key_(std::move(key)), holds_(std::move(holds)) {
    for (const auto& v : space.values()) groups_[key_(v)].push_back(v);
  }

  ValueList image(const Value& a) const override {
    const Value ka = key_(a);
    ValueList out;
    for (const auto& [k, members] : groups_)
      if (holds_(ka, k)) out.insert(out.end(), members.begin(), members.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  bool contains(const Value& a, const Value& b) const override { return holds_(key_(a), key_(b)); }
  bool in_domain(const Value& a) const override {
    const Value ka = key_(a);
    for (const auto& [k, members] : groups_)
      if (holds_(ka, k)) return true;
    return false;
  }

private:
  KeyFn key_;
  KeyPred holds_;
  std::map<Value, ValueList> groups_;
};

class FilterImpl final : public RelationImpl {
public:
  FilterImpl(Relation inner, Relation::PairPredicate keep) : inner_(std::move(inner)), keep_(std::move(keep)) {}

  ValueList image(const Value& a) const override {
    ValueList out;
    for (auto& b : inner_.image(a))
      if (keep_(a, b)) out.push_back(std::move(b));
    return out;
  }
  bool contains(const Value& a, const Value& b) const override {
    return inner_.contains(a, b) && keep_(a, b);
  }

private:
  Relation inner_;
  Relation::PairPredicate keep_;
};

[[noreturn]] void malformed(const std::string& msg, std::string witness = {}) {
  throw Error(ErrorCode::MalformedExpr, msg, std::move(witness));
}

void require_naturals(const char* name, std::int64_t lo) {
  if (lo < 0) malformed(std::string(name) + " is defined on the natural integers; lo must be >= 0");
}

Relation keyed(const Space& space, KeyedImpl::KeyFn key, KeyedImpl::KeyPred holds, Rule rule,
               std::vector<NoetherianCert> premises = {}) {
  return Relation::from_impl(space, space, std::make_shared<KeyedImpl>(space, std::move(key), std::move(holds)))
      .with_cert(NoetherianCert::make(rule, std::move(premises)));
}

Relation predicate(const Space& space, Relation::PairPredicate holds, Rule rule,
                   std::vector<NoetherianCert> premises = {}) {
  return Relation::from_predicate(space, std::move(holds)).with_cert(NoetherianCert::make(rule, std::move(premises)));
}

bool greater_int(const Value& a, const Value& b) { return a.as_int() > b.as_int(); }
bool lesser_int(const Value& a, const Value& b) { return a.as_int() < b.as_int(); }

Space pair_space(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  auto side = Space::int_range(lo, hi, max_space);
  return Space::product({side, side}, max_space);
}

Value interval_length(const Value& v) { return Value::integer(v.as_interval().length()); }

bool interval_set_subset(std::span<const Interval> a, std::span<const Interval> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Space graph_space(const ValueList& nodes, const std::vector<ValuePair>& edges) {
  ValueList all = nodes;
  for (const auto& [a, b] : edges) {
    all.push_back(a);
    all.push_back(b);
  }
  return Space::explicit_values(std::move(all));
}

void require_acyclic(const Relation& r, const char* what) {
  auto verdict = is_noetherian(r);
  if (!verdict.noetherian())
    malformed(std::string(what) + " needs an acyclic graph", verdict.witness ? to_string(*verdict.witness) : "");
}

NoetherianCert premise_of(const Relation& r) {
  if (r.cert()) return *r.cert();
  auto verdict = is_noetherian(r);
  if (!verdict.noetherian())
    malformed("operand has no certificate and is not Noetherian",
              verdict.witness ? to_string(*verdict.witness) : "");
  return NoetherianCert::make(Rule::Exhaustive);
}

} // namespace

NamedFunction named_function(std::string_view name) {
  auto ints = [](const Value& v) { return std::pair{v.first().as_int(), v.second().as_int()}; };
  if (name == "max")
    return {"max", [ints](const Value& v) { auto [m, n] = ints(v); return Value::integer(std::max(m, n)); }};
  if (name == "min")
    return {"min", [ints](const Value& v) { auto [m, n] = ints(v); return Value::integer(std::min(m, n)); }};
  if (name == "sum")
    return {"sum", [ints](const Value& v) { auto [m, n] = ints(v); return Value::integer(m + n); }};
  if (name == "abs_diff")
    return {"abs_diff", [ints](const Value& v) { auto [m, n] = ints(v); return Value::integer(m > n ? m - n : n - m); }};
  if (name == "length")
    return {"length", [](const Value& v) { return Value::integer(static_cast<std::int64_t>(v.as_seq().size())); }};
  if (name == "interval_width") return {"interval_width", interval_length};
  if (name == "max_interval_length")
    return {"max_interval_length", [](const Value& v) {
              std::int64_t best = 0;
              for (const auto& iv : v.as_interval_set()) best = std::max(best, iv.length());
              return Value::integer(best);
            }};
  if (name == "cardinality")
    return {"cardinality", [](const Value& v) {
              auto n = v.is(Value::Kind::IntervalSet) ? v.as_interval_set().size() : v.items().size();
              return Value::integer(static_cast<std::int64_t>(n));
            }};
  if (name.size() > 4 && name.substr(0, 4) == "proj") {
    std::size_t index = 0;
    for (char c : name.substr(4)) {
      if (c < '0' || c > '9') throw Error(ErrorCode::UnknownNamedFunction, "unknown function " + std::string(name));
      index = index * 10 + static_cast<std::size_t>(c - '0');
    }
    return {std::string(name), [index](const Value& v) {
              auto items = v.items();
              if (index >= items.size())
                throw Error(ErrorCode::MalformedExpr, "projection index out of range", to_string(v));
              return items[index];
            }};
  }
  throw Error(ErrorCode::UnknownNamedFunction, "unknown function " + std::string(name));
}

NamedFunction depth_function(const std::vector<ValuePair>& parent_of) {
  std::map<Value, Value> parents(parent_of.begin(), parent_of.end());
  return {"depth", [parents](const Value& v) {
            std::int64_t d = 0;
            auto it = parents.find(v);
            while (it != parents.end()) {
              if (++d > static_cast<std::int64_t>(parents.size()))
                throw Error(ErrorCode::MalformedExpr, "parent map has a cycle", to_string(v));
              it = parents.find(it->second);
            }
            return Value::integer(d);
          }};
}

NamedFunction value_map(std::vector<ValuePair> map, std::string name) {
  std::map<Value, Value> table;
  for (auto& [k, v] : map) {
    auto [it, inserted] = table.emplace(k, v);
    if (!inserted && it->second != v) malformed("value map assigns two values to " + to_string(k), to_string(k));
  }
  return {std::move(name), [table = std::move(table)](const Value& v) {
            auto it = table.find(v);
            if (it == table.end())
              throw Error(ErrorCode::NonTotalFunction, "value map is undefined at " + to_string(v), to_string(v));
            return it->second;
          }};
}

Relation successor(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  require_naturals("SUCCESSOR", lo);
  return predicate(Space::int_range(lo, hi, max_space),
                   [](const Value& a, const Value& b) { return a.as_int() == b.as_int() + 1; }, Rule::Successor);
}

Relation intgreater(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  require_naturals("INTGREATER", lo);
  return keyed(Space::int_range(lo, hi, max_space), [](const Value& v) { return v; }, greater_int, Rule::IntGreater);
}

Relation predecessor(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return predicate(Space::int_range(lo, hi, max_space),
                   [](const Value& a, const Value& b) { return a.as_int() == b.as_int() - 1; }, Rule::Predecessor);
}

Relation intlesser(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return keyed(Space::int_range(lo, hi, max_space), [](const Value& v) { return v; }, lesser_int, Rule::IntLesser);
}

Relation intdiff(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return keyed(pair_space(lo, hi, max_space), named_function("abs_diff").apply, greater_int, Rule::IntDiff);
}

Relation intsum(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  require_naturals("INTSUM", lo);
  return keyed(pair_space(lo, hi, max_space), named_function("sum").apply, greater_int, Rule::IntSum);
}

Relation maxint(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  require_naturals("MAXINT", lo);
  return keyed(pair_space(lo, hi, max_space), named_function("max").apply, greater_int, Rule::MaxInt);
}

Relation minint(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  require_naturals("MININT", lo);
  return keyed(pair_space(lo, hi, max_space), named_function("min").apply, greater_int, Rule::MinInt);
}

Relation supinterval(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return predicate(Space::intervals_of(lo, hi, max_space),
                   [](const Value& a, const Value& b) { return b.as_interval().strict_subset_of(a.as_interval()); },
                   Rule::SupInterval);
}

Relation subinterval(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return predicate(Space::intervals_of(lo, hi, max_space),
                   [](const Value& a, const Value& b) { return a.as_interval().strict_subset_of(b.as_interval()); },
                   Rule::SubInterval);
}

Relation interval(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return keyed(Space::intervals_of(lo, hi, max_space), interval_length, greater_int, Rule::IntervalRule);
}

Relation interval_prime(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  auto base = interval(lo, hi, max_space);
  return noet::inverse(base.materialize()).with_cert(NoetherianCert::make(Rule::IntervalPrime));
}

Relation intervalsupset(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return predicate(Space::interval_sets_of(lo, hi, max_space),
                   [](const Value& a, const Value& b) {
                     return a != b && interval_set_subset(b.as_interval_set(), a.as_interval_set());
                   },
                   Rule::IntervalSupset);
}

Relation intervalsubset(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return predicate(Space::interval_sets_of(lo, hi, max_space),
                   [](const Value& a, const Value& b) {
                     return a != b && interval_set_subset(a.as_interval_set(), b.as_interval_set());
                   },
                   Rule::IntervalSubset);
}

Relation intervalmax(std::int64_t lo, std::int64_t hi, std::size_t max_space) {
  return keyed(Space::interval_sets_of(lo, hi, max_space), named_function("max_interval_length").apply, greater_int,
               Rule::IntervalMax);
}

Relation family_on(Rule family, const Space& sub) {
  auto need = [&](Value::Kind kind) {
    for (const auto& v : sub.values())
      if (v.kind() != kind)
        malformed(std::string(rule_name(family)) + " is not defined on " + to_string(v), to_string(v));
  };
  auto restricted = NoetherianCert::make(family);
  auto by_key = [&](Value::Kind kind, KeyedImpl::KeyFn key, KeyedImpl::KeyPred holds) {
    need(kind);
    return keyed(sub, std::move(key), std::move(holds), Rule::Restrict, {restricted});
  };
  auto by_pred = [&](Value::Kind kind, Relation::PairPredicate holds) {
    need(kind);
    return predicate(sub, std::move(holds), Rule::Restrict, {restricted});
  };
  auto self = [](const Value& v) { return v; };
  switch (family) {
    case Rule::IntGreater:
      for (const auto& v : sub.values())
        if (v.is(Value::Kind::Int) && v.as_int() < 0) malformed("INTGREATER needs naturals", to_string(v));
      return by_key(Value::Kind::Int, self, greater_int);
    case Rule::IntLesser: return by_key(Value::Kind::Int, self, lesser_int);
    case Rule::IntDiff: return by_key(Value::Kind::Pair, named_function("abs_diff").apply, greater_int);
    case Rule::IntSum:
    case Rule::MaxInt:
    case Rule::MinInt: {
      for (const auto& v : sub.values())
        if (v.is(Value::Kind::Pair) && (v.first().as_int() < 0 || v.second().as_int() < 0))
          malformed(std::string(rule_name(family)) + " needs pairs of naturals", to_string(v));
      const char* f = family == Rule::IntSum ? "sum" : family == Rule::MaxInt ? "max" : "min";
      return by_key(Value::Kind::Pair, named_function(f).apply, greater_int);
    }
    case Rule::SupInterval:
      return by_pred(Value::Kind::Interval, [](const Value& a, const Value& b) {
        return b.as_interval().strict_subset_of(a.as_interval());
      });
    case Rule::SubInterval:
      return by_pred(Value::Kind::Interval, [](const Value& a, const Value& b) {
        return a.as_interval().strict_subset_of(b.as_interval());
      });
    case Rule::IntervalRule: return by_key(Value::Kind::Interval, interval_length, greater_int);
    case Rule::IntervalSupset:
      return by_pred(Value::Kind::IntervalSet, [](const Value& a, const Value& b) {
        return a != b && interval_set_subset(b.as_interval_set(), a.as_interval_set());
      });
    case Rule::IntervalSubset:
      return by_pred(Value::Kind::IntervalSet, [](const Value& a, const Value& b) {
        return a != b && interval_set_subset(a.as_interval_set(), b.as_interval_set());
      });
    case Rule::IntervalMax:
      return by_key(Value::Kind::IntervalSet, named_function("max_interval_length").apply, greater_int);
    default: malformed(std::string(rule_name(family)) + " cannot be restricted by family_on");
  }
}

Space powerset(ValueList base) {
  normalize(base);
  if (base.size() > 10)
    throw Error(ErrorCode::SpaceTooLarge, "powerset base has " + std::to_string(base.size()) + " elements; the cap is 10");
  ValueList subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << base.size()); ++mask) {
    ValueList members;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(base[i]);
    subsets.push_back(Value::tuple(std::move(members)));
  }
  return Space::explicit_values(std::move(subsets));
}

namespace {

bool tuple_strict_subset(const Value& a, const Value& b) {
  auto x = a.items();
  auto y = b.items();
  return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
}

} // namespace

Relation supset(ValueList base) {
  return predicate(powerset(std::move(base)), [](const Value& a, const Value& b) { return tuple_strict_subset(b, a); },
                   Rule::Supset);
}

Relation subset(ValueList base) {
  return predicate(powerset(std::move(base)), [](const Value& a, const Value& b) { return tuple_strict_subset(a, b); },
                   Rule::Subset);
}

Relation acyclic(const Graph& g) {
  auto r = Relation::extensional(graph_space(g.nodes, g.edges), g.edges);
  require_acyclic(r, "ACYCLIC");
  return r.with_cert(NoetherianCert::make(Rule::Acyclic));
}

Relation acyclic_prime(const Graph& g) {
  auto r = Relation::extensional(graph_space(g.nodes, g.edges), g.edges);
  require_acyclic(r, "ACYCLIC'");
  return noet::inverse(r).with_cert(NoetherianCert::make(Rule::AcyclicPrime));
}

namespace {

Relation parent_edges(const Forest& f) {
  std::vector<ValuePair> edges;
  std::set<Value> children;
  for (const auto& [c, p] : f.parent_of) {
    if (!children.insert(c).second) malformed("node " + to_string(c) + " has two parents", to_string(c));
    edges.emplace_back(p, c);
  }
  auto r = Relation::extensional(graph_space(f.nodes, edges), edges);
  require_acyclic(r, "a forest");
  return r;
}

} // namespace

Relation parent(const Forest& f) { return parent_edges(f).with_cert(NoetherianCert::make(Rule::Parent)); }

Relation child(const Forest& f) {
  return noet::inverse(parent_edges(f)).with_cert(NoetherianCert::make(Rule::Child));
}

Relation ancestor(const Forest& f) {
  return closures(parent_edges(f)).plus.with_cert(
      NoetherianCert::make(Rule::Ancestor, {NoetherianCert::make(Rule::Parent)}));
}

Relation descendant(const Forest& f) {
  return noet::inverse(closures(parent_edges(f)).plus)
      .with_cert(NoetherianCert::make(Rule::Descendant, {NoetherianCert::make(Rule::Child)}));
}

Relation compose(const Relation& r, const Relation& s) {
  return noet::compose(r, s).with_cert(NoetherianCert::make(Rule::Compose, {premise_of(r), premise_of(s)}));
}

Relation closure(const Relation& r) {
  return closures(r).plus.with_cert(NoetherianCert::make(Rule::Closure, {premise_of(r)}));
}

Relation subrel(const Relation& r, std::vector<ValuePair> pairs) {
  for (const auto& [a, b] : pairs)
    if (!r.contains(a, b))
      malformed("SUBREL pair [" + to_string(a) + ", " + to_string(b) + "] is not in the base relation",
                "[" + to_string(a) + ", " + to_string(b) + "]");
  auto cert = NoetherianCert::make(Rule::Subrel, {premise_of(r)});
  return Relation::extensional(r.source(), r.target(), std::move(pairs)).with_cert(std::move(cert));
}

Relation subrel(const Relation& r, std::string filter_id, Relation::PairPredicate keep) {
  (void)filter_id;
  auto cert = NoetherianCert::make(Rule::Subrel, {premise_of(r)});
  return Relation::from_impl(r.source(), r.target(), std::make_shared<FilterImpl>(r, std::move(keep)))
      .with_cert(std::move(cert));
}

Relation restrict(const Relation& r, const Space& c) {
  return noet::restrict(c, r).with_cert(NoetherianCert::make(Rule::Restrict, {premise_of(r)}));
}

Relation restrict_to(const Relation& r, const Space& sub) {
  return noet::restrict_to(r, sub).with_cert(NoetherianCert::make(Rule::Restrict, {premise_of(r)}));
}

Relation induced(const Space& domain, const NamedFunction& f, const Relation& base) {
  for (const auto& v : domain.values()) {
    auto image = f.apply(v);
    if (!base.space().contains(image))
      malformed("function " + f.name + " maps " + to_string(v) + " to " + to_string(image) +
                    ", outside the base relation's space",
                to_string(v));
  }
  auto cert = NoetherianCert::make(Rule::Induced, {premise_of(base)});
  return keyed(domain, f.apply, [base](const Value& x, const Value& y) { return base.contains(x, y); },
               Rule::Induced, cert.premises);
}

Relation projection(const Space& product, std::size_t index, const Relation& base) {
  auto f = named_function("proj" + std::to_string(index));
  auto r = induced(product, f, base);
  return r.with_cert(NoetherianCert::make(Rule::Projection, r.cert()->premises));
}

Relation inverse(const Relation& r) {
  auto cert = NoetherianCert::make(Rule::Inverse, {premise_of(r)});
  return noet::inverse(r.materialize()).with_cert(std::move(cert));
}

bool builds_order(const NoetherianCert& cert) {
  switch (cert.rule) {
  case Rule::IntGreater: case Rule::IntLesser: case Rule::Ancestor: case Rule::Descendant:
  case Rule::Supset: case Rule::Subset: case Rule::SupInterval: case Rule::SubInterval:
  case Rule::IntDiff: case Rule::IntSum: case Rule::MaxInt: case Rule::MinInt:
  case Rule::IntervalRule: case Rule::IntervalPrime: case Rule::IntervalSupset:
  case Rule::IntervalSubset: case Rule::IntervalMax: case Rule::Closure:
    return true;
  case Rule::Induced: case Rule::Projection: case Rule::Inverse:
    return !cert.premises.empty() && builds_order(cert.premises.front());
  default:
    return false;
  }
}

Certification certify(const Relation& r, std::size_t fuel) {
  Certification out;
  if (r.cert() && r.cert()->trust == Trust::Sound) {
    out.verdict.status = NoetherianStatus::Noetherian;
    out.verdict.method = VerdictMethod::Certificate;
    return out;
  }
  out.verdict = is_noetherian(r, fuel);
  out.discrepancy = r.cert().has_value() && out.verdict.status == NoetherianStatus::NotNoetherian;
  return out;
}

Relation build(const CatalogExpr& e, std::size_t max_space) {
  using K = CatalogExpr::Kind;
  auto operand = [&](std::size_t i) {
    if (e.operands.size() <= i) malformed("constructor is missing an operand");
    return build(e.operands[i], max_space);
  };
  switch (e.kind) {
  case K::Named:
    switch (e.rule) {
    case Rule::Successor: return successor(e.lo, e.hi, max_space);
    case Rule::IntGreater: return intgreater(e.lo, e.hi, max_space);
    case Rule::Predecessor: return predecessor(e.lo, e.hi, max_space);
    case Rule::IntLesser: return intlesser(e.lo, e.hi, max_space);
    case Rule::IntDiff: return intdiff(e.lo, e.hi, max_space);
    case Rule::IntSum: return intsum(e.lo, e.hi, max_space);
    case Rule::MaxInt: return maxint(e.lo, e.hi, max_space);
    case Rule::MinInt: return minint(e.lo, e.hi, max_space);
    case Rule::SupInterval: return supinterval(e.lo, e.hi, max_space);
    case Rule::SubInterval: return subinterval(e.lo, e.hi, max_space);
    case Rule::IntervalRule: return interval(e.lo, e.hi, max_space);
    case Rule::IntervalPrime: return interval_prime(e.lo, e.hi, max_space);
    case Rule::IntervalSupset: return intervalsupset(e.lo, e.hi, max_space);
    case Rule::IntervalSubset: return intervalsubset(e.lo, e.hi, max_space);
    case Rule::IntervalMax: return intervalmax(e.lo, e.hi, max_space);
    case Rule::Supset: return supset(e.values);
    case Rule::Subset: return subset(e.values);
    case Rule::Acyclic: return acyclic({e.values, e.pairs});
    case Rule::AcyclicPrime: return acyclic_prime({e.values, e.pairs});
    case Rule::Parent: return parent({e.values, e.pairs});
    case Rule::Child: return child({e.values, e.pairs});
    case Rule::Ancestor: return ancestor({e.values, e.pairs});
    case Rule::Descendant: return descendant({e.values, e.pairs});
    default: malformed("\"" + std::string(rule_name(e.rule)) + "\" is a constructor, not a named relation");
    }
  case K::Extensional:
    if (!e.over) malformed("extensional relation needs a space");
    return Relation::extensional(*e.over, e.pairs);
  case K::Compose: return catalog::compose(operand(0), operand(1));
  case K::Closure: return closure(operand(0));
  case K::Subrel: return subrel(operand(0), e.pairs);
  case K::Restrict:
    if (!e.to) malformed("restrict needs a target set");
    return restrict(operand(0), *e.to);
  case K::Induced: {
    if (!e.over) malformed("induced relation needs a domain space");
    auto base = operand(0);
    if (!e.function_map.empty()) return induced(*e.over, value_map(e.function_map), base);
    if (e.function == "depth") return induced(*e.over, depth_function(e.pairs), base);
    return induced(*e.over, named_function(e.function), base);
  }
  case K::Projection:
    if (!e.over) malformed("projection needs a product space");
    return projection(*e.over, e.index, operand(0));
  case K::Inverse: return catalog::inverse(operand(0));
  }
  malformed("unknown expression kind");
}

} // namespace noet::catalog
