#pragma once

#include "noet/noether.hpp"
#include "noet/relation.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noet::catalog {

// Functions an induced relation may pull back through. Named ones come from
// a fixed set; user-supplied ones arrive as explicit value maps.
struct NamedFunction {
  std::string name;
  std::function<Value(const Value&)> apply;
};

// max, min, sum, abs_diff (pairs of ints), length (seq), interval_width,
// max_interval_length, cardinality (interval-set or tuple), proj0, proj1, ...
// Throws UnknownNamedFunction.
NamedFunction named_function(std::string_view name);
// Node depth in a forest given as [child, parent] pairs; roots have depth 0.
NamedFunction depth_function(const std::vector<ValuePair>& parent_of);
// Applying it outside the map throws NonTotalFunction.
NamedFunction value_map(std::vector<ValuePair> map, std::string name = "map");

struct Graph {
  ValueList nodes;  // edge endpoints are added implicitly
  std::vector<ValuePair> edges;
};

struct Forest {
  ValueList nodes;
  std::vector<ValuePair> parent_of;  // [child, parent]
};

// Integer families on lo..hi. SUCCESSOR and INTGREATER live on the naturals,
// so they need lo >= 0.
Relation successor(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation intgreater(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation predecessor(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation intlesser(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);

// Pair families on (lo..hi) x (lo..hi). INTSUM, MAXINT and MININT need lo >= 0.
Relation intdiff(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation intsum(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation maxint(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation minint(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);

// Interval families on intervals_of(lo, hi). Inclusion is inclusion of the
// integer sets denoted; length is the number of elements (0 when empty).
Relation supinterval(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation subinterval(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation interval(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation interval_prime(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);

// Interval-set families on interval_sets_of(lo, hi).
Relation intervalsupset(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation intervalsubset(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);
Relation intervalmax(std::int64_t lo, std::int64_t hi, std::size_t max_space = kDefaultMaxSpace);

// A family restricted to `sub`, built from its defining predicate without
// materializing the family's whole carrier. Equal to restrict_to(family, sub)
// for any carrier containing `sub`. Supports the integer, pair, interval and
// interval-set families.
Relation family_on(Rule family, const Space& sub);

// Strict superset / subset on the powerset of `base` (at most 10 elements).
// Each subset is a Tuple of its members in canonical order.
Space powerset(ValueList base);
Relation supset(ValueList base);
Relation subset(ValueList base);

// The graph must be acyclic (MalformedExpr with a cycle otherwise).
Relation acyclic(const Graph& g);
Relation acyclic_prime(const Graph& g);

// a is the parent / child / proper ancestor / proper descendant of a'.
Relation parent(const Forest& f);
Relation child(const Forest& f);
Relation ancestor(const Forest& f);
Relation descendant(const Forest& f);

// Constructors. Each result carries a certificate whose premises are the
// operands' certificates (an operand without one contributes EXHAUSTIVE
// when the finite checker confirms it).
Relation compose(const Relation& r, const Relation& s);
Relation closure(const Relation& r);
Relation subrel(const Relation& r, std::vector<ValuePair> pairs);
Relation subrel(const Relation& r, std::string filter_id, Relation::PairPredicate keep);
// C : r on the same space.
Relation restrict(const Relation& r, const Space& c);
// r on the subspace `sub` (both ends inside it).
Relation restrict_to(const Relation& r, const Space& sub);
// [a, a'] iff [f(a), f(a')] in base, for a, a' in `domain`.
Relation induced(const Space& domain, const NamedFunction& f, const Relation& base);
Relation projection(const Space& product, std::size_t index, const Relation& base);
Relation inverse(const Relation& r);

// Catalog entries whose defining relation is an order on every instance.
bool builds_order(const NoetherianCert& cert);

struct Certification {
  NoetherianVerdict verdict;
  // A claimed certificate that the finite checker refuted.
  bool discrepancy = false;
};

// Sound certificates are accepted as-is; claimed or missing ones go to the
// finite checker.
Certification certify(const Relation& r, std::size_t fuel = kDefaultFuel);

// Serializable description of a catalog relation.
struct CatalogExpr {
  enum class Kind { Named, Extensional, Compose, Closure, Subrel, Restrict, Induced, Projection, Inverse };

  Kind kind = Kind::Named;
  Rule rule = Rule::IntGreater;              // Named
  std::int64_t lo = 0;                       // Named integer/interval families
  std::int64_t hi = -1;
  ValueList values;                          // base set, graph or forest nodes
  std::vector<ValuePair> pairs;              // extensional/subrel pairs, edges, [child, parent]
  std::optional<Space> over;                 // Extensional space, Induced/Projection domain
  std::optional<Space> to;                   // Restrict set
  std::string function;                      // Induced
  std::vector<ValuePair> function_map;       // Induced through an explicit map
  std::size_t index = 0;                     // Projection
  std::vector<CatalogExpr> operands;

  friend bool operator==(const CatalogExpr&, const CatalogExpr&) = default;
};

// Throws MalformedExpr, SpaceTooLarge, UnknownNamedFunction.
Relation build(const CatalogExpr& expr, std::size_t max_space = kDefaultMaxSpace);

} // namespace noet::catalog
