#pragma once

#include "noet/catalog.hpp"
#include "noet/error.hpp"
#include "noet/noether.hpp"
#include "noet/relation.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace noet {

// Named check over (run input, terminal state).
struct Postcondition {
  std::string id;
  std::function<bool(const Value& input, const Value& terminal)> holds;
};

// Picks the successor a single-resolution run takes. Returning nullopt, or a
// value that is not a successor, falls back to the canonically least one.
using ChoicePolicy = std::function<std::optional<Value>(const Value& state, const ValueList& successors)>;

struct LoopParts {
  Space space;     // X
  Relation order;  // ">" on X (or on a superset of X, restricted on construction)
  Relation init;   // from the input space into X
  Relation body;   // on X
  std::optional<Postcondition> postcondition;
  ChoicePolicy policy;
};

// A loop given by its four ingredients. Build with make_loop to have every
// structural obligation checked, or with LoopDef::candidate to hand an
// unchecked definition to verify().
class LoopDef {
public:
  static LoopDef candidate(LoopParts parts);

  const Space& inputs() const { return parts_.init.source(); }
  const Space& space() const { return parts_.space; }
  const Relation& order() const { return parts_.order; }
  const Relation& init() const { return parts_.init; }
  const Relation& body() const { return parts_.body; }
  const std::optional<Postcondition>& postcondition() const { return parts_.postcondition; }
  const ChoicePolicy& policy() const { return parts_.policy; }

private:
  explicit LoopDef(LoopParts parts) : parts_(std::move(parts)) {}
  LoopParts parts_;
};

// Throws EmptySpace, InitEscapesSpace, BodyNotSubsetOfOrder, DomainMismatch
// or OrderNotNoetherian, each with a witness.
LoopDef make_loop(LoopParts parts);
LoopDef make_loop(Space space, Relation order, Relation init, Relation body,
                  std::optional<Postcondition> postcondition = {});

// C = X minus domain(body).
ValueList exit_condition(const LoopDef& loop);
bool in_exit_condition(const LoopDef& loop, const Value& state);

struct ExecTrace {
  Value input;
  ValueList states;  // initial state, then one per body application

  const Value& terminal() const { return states.back(); }
  std::size_t steps() const { return states.size() - 1; }
};

// Deterministic run: the policy (or the least successor) at each choice.
// Throws InputOutsideSpace, or FuelExhausted with the partial trace.
ExecTrace run(const LoopDef& loop, const Value& input, std::size_t fuel = kDefaultFuel);

struct RunAllResult {
  Value input;
  ValueList terminals;          // over every resolution of every choice
  std::size_t max_steps = 0;    // longest path to a terminal
  std::size_t states_visited = 0;
};

RunAllResult run_all(const LoopDef& loop, const Value& input, std::size_t fuel = kDefaultFuel);

struct Denotation {
  Relation full;      // i ; (C' : b)*
  Relation terminal;  // full with range restricted to C
};

// Both relations go from the input space to X and need an enumerable
// input space. The per-input forms only touch states reachable from it.
Denotation denotation_closure(const LoopDef& loop);
ValueList closure_image(const LoopDef& loop, const Value& input);
ValueList closure_terminals(const LoopDef& loop, const Value& input);

// i ; b^· with the reachable-minima reading of the limit.
Relation denotation_limit(const LoopDef& loop);
ValueList limit_terminals(const LoopDef& loop, const Value& input);

enum class Obligation {
  SpaceNonempty,
  InitRange,
  OrderNoetherian,
  BodyIsSeed,
  ExitNonempty,
  PostconditionAtMinima,
  DenotationAgreement,
};

const char* to_string(Obligation o);

struct ObligationResult {
  Obligation id;
  bool pass = true;
  std::string witness;
  std::string detail;
};

struct InputSample {
  enum class Mode { All, Listed, Random } mode = Mode::All;
  ValueList listed;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static InputSample all() { return {}; }
  static InputSample of(ValueList inputs) { return {Mode::Listed, std::move(inputs), 0, 0}; }
  static InputSample random(std::size_t count, std::uint64_t seed) { return {Mode::Random, {}, count, seed}; }
};

struct VerificationReport {
  std::vector<ObligationResult> results;
  std::size_t inputs_sampled = 0;
  std::size_t max_steps = 0;

  bool pass() const;
  const ObligationResult& result(Obligation o) const;
};

VerificationReport verify(const LoopDef& loop, const InputSample& sample = InputSample::all(),
                          std::size_t fuel = kDefaultFuel);

// The classical variant lifted to a relation: [a, a'] iff f(a) > f(a').
// Throws NegativeVariantValue, or NonTotalFunction for a map missing an element.
Relation variant_to_relation(const catalog::NamedFunction& f, const Space& space);

} // namespace noet
