#include "noet/cert.hpp"

#include <array>
#include <utility>

namespace noet {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 31> kRuleNames{{
    {Rule::Compose, "COMPOSE"},
    {Rule::Closure, "CLOSURE"},
    {Rule::Subrel, "SUBREL"},
    {Rule::Restrict, "RESTRICT"},
    {Rule::Induced, "INDUCED"},
    {Rule::Projection, "PROJECTION"},
    {Rule::Inverse, "INVERSE"},
    {Rule::Acyclic, "ACYCLIC"},
    {Rule::AcyclicPrime, "ACYCLIC'"},
    {Rule::Parent, "PARENT"},
    {Rule::Ancestor, "ANCESTOR"},
    {Rule::Child, "CHILD"},
    {Rule::Descendant, "DESCENDANT"},
    {Rule::Supset, "SUPSET"},
    {Rule::Subset, "SUBSET"},
    {Rule::Successor, "SUCCESSOR"},
    {Rule::IntGreater, "INTGREATER"},
    {Rule::Predecessor, "PREDECESSOR"},
    {Rule::IntLesser, "INTLESSER"},
    {Rule::IntDiff, "INTDIFF"},
    {Rule::IntSum, "INTSUM"},
    {Rule::MaxInt, "MAXINT"},
    {Rule::MinInt, "MININT"},
    {Rule::SupInterval, "SUPINTERVAL"},
    {Rule::SubInterval, "SUBINTERVAL"},
    {Rule::IntervalRule, "INTERVAL"},
    {Rule::IntervalPrime, "INTERVAL'"},
    {Rule::IntervalSupset, "INTERVALSUPSET"},
    {Rule::IntervalSubset, "INTERVALSUBSET"},
    {Rule::IntervalMax, "INTERVALMAX"},
    {Rule::Exhaustive, "EXHAUSTIVE"},
}};

} // namespace

std::string_view rule_name(Rule rule) {
  for (const auto& [r, name] : kRuleNames)
    if (r == rule) return name;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (n == name) return r;
  return std::nullopt;
}

bool rule_is_claimed(Rule rule) {
  return rule == Rule::Compose || rule == Rule::Parent || rule == Rule::Ancestor;
}

NoetherianCert NoetherianCert::make(Rule rule, std::vector<NoetherianCert> premises) {
  NoetherianCert cert;
  cert.rule = rule;
  cert.trust = rule_is_claimed(rule) ? Trust::Claimed : Trust::Sound;
  for (const auto& p : premises)
    if (p.trust == Trust::Claimed) cert.trust = Trust::Claimed;
  cert.premises = std::move(premises);
  return cert;
}

std::string NoetherianCert::describe() const {
  std::string out(rule_name(rule));
  if (!premises.empty()) {
    out += '(';
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (i) out += ", ";
      out += premises[i].describe();
    }
    out += ')';
  }
  return out;
}

} // namespace noet
