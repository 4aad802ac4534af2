#pragma once

#include "noet/relation.hpp"

#include <optional>
#include <vector>

namespace noet {

inline constexpr std::size_t kDefaultFuel = 10000;

// A non-empty sequence with each consecutive pair in the relation under
// analysis. Its length is the number of steps.
struct Chain {
  ValueList elements;

  std::size_t length() const { return elements.empty() ? 0 : elements.size() - 1; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

std::string to_string(const Chain& c);  // "1 → 2 → 1"

enum class NoetherianStatus { Noetherian, NotNoetherian, Unknown };
enum class VerdictMethod { Exhaustive, Certificate, Bounded };

const char* to_string(NoetherianStatus s);
const char* to_string(VerdictMethod m);

struct NoetherianVerdict {
  NoetherianStatus status = NoetherianStatus::Unknown;
  // NotNoetherian: a shortest cycle (first element repeated at the end).
  // Unknown: the chain that ran out of fuel, when one was found.
  std::optional<Chain> witness;
  VerdictMethod method = VerdictMethod::Exhaustive;

  bool noetherian() const { return status == NoetherianStatus::Noetherian; }
};

// On an enumerable space with no roots: exhaustive, Noetherian iff acyclic.
// Otherwise the region reachable from `roots` is explored with chains capped
// at `fuel` steps; a closed, cycle-free region gives a Bounded verdict.
NoetherianVerdict is_noetherian(const Relation& r, std::size_t fuel = kDefaultFuel,
                                const ValueList& roots = {});

enum class ChainEnd {
  Maximal,    // ends at a minimum
  Truncated,  // reached max_len with successors remaining
  Prefix,     // a proper prefix of a longer chain
};

struct ChainEntry {
  Chain chain;
  ChainEnd end;
};

// Every chain starting at `a` with at most `max_len` steps, in depth-first
// canonical order.
std::vector<ChainEntry> chains_from(const Relation& r, const Value& a, std::size_t max_len);

struct Height {
  std::size_t value = 0;
  friend bool operator==(const Height&, const Height&) = default;
};

// Longest chain length from `a`. Throws NotNoetherian when a cycle is
// reachable from `a`.
Height height(const Relation& r, const Value& a);

// Elements of the space outside the domain.
ValueList minima(const Relation& r);

enum class LimitMode {
  MaxDepth,         // r^M(a)(a): elements at the end of the longest chains
  ReachableMinima,  // every minimum reachable from a
};

const char* to_string(LimitMode m);

// Both throw NotNoetherian when a cycle is reachable from the argument.
ValueList limit_image(const Relation& r, const Value& a, LimitMode mode);
Relation limit(const Relation& r, LimitMode mode);

struct SeedCheck {
  bool seed = true;
  std::optional<ValuePair> stray_pair;    // in r but not in s
  std::optional<Value> domain_witness;    // in exactly one of the domains
};

// r ⊆ s and domain(r) = domain(s), with the first violation found.
SeedCheck check_seed(const Relation& r, const Relation& s);
bool is_seed(const Relation& r, const Relation& s);

struct FinitaryResult {
  enum class Status { Finitary, Unknown } status = Status::Unknown;
  // When the powers from `a` die out: the last non-empty power (the
  // height). Otherwise the step at which the union stopped growing.
  std::optional<std::size_t> bound;

  bool finitary() const { return status == Status::Finitary; }
};

FinitaryResult is_finitary(const Relation& r, const Value& a, std::size_t fuel = kDefaultFuel);

} // namespace noet
