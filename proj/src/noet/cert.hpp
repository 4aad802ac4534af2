#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noet {

// Catalog rules a Noetherian certificate can cite. Exhaustive marks a
// relation whose Noetherian-ness was established by the finite checker.
enum class Rule {
  Compose, Closure, Subrel, Restrict, Induced, Projection, Inverse,
  Acyclic, AcyclicPrime, Parent, Ancestor, Child, Descendant,
  Supset, Subset, Successor, IntGreater, Predecessor, IntLesser,
  IntDiff, IntSum, MaxInt, MinInt,
  SupInterval, SubInterval, IntervalRule, IntervalPrime,
  IntervalSupset, IntervalSubset, IntervalMax,
  Exhaustive,
};

enum class Trust { Sound, Claimed };

// Catalog name as printed and serialized: "COMPOSE", "ACYCLIC'", ...
std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

// Rules whose Noetherian claim is not guaranteed on the inputs this library
// admits: composition fails outright, and the tree rules lean on
// finiteness assumptions the catalog text leaves ambiguous.
bool rule_is_claimed(Rule rule);

struct NoetherianCert {
  Rule rule = Rule::Exhaustive;
  Trust trust = Trust::Sound;
  std::vector<NoetherianCert> premises;

  // A certificate is trusted only if its rule is sound and every premise is.
  static NoetherianCert make(Rule rule, std::vector<NoetherianCert> premises = {});

  // "MAXINT", "SUBREL(MAXINT)", "INDUCED(INTGREATER)".
  std::string describe() const;
};

} // namespace noet
