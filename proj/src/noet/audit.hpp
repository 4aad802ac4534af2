#pragma once

#include "noet/format.hpp"
#include "noet/noether.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace noet::audit {

enum class Claim { ComposeNoetherian, LimitSubsetTheorem, MaxdepthStarIdentity };
enum class Status { ValidatedOnSample, CounterexampleFound };

const char* to_string(Claim c);
const char* to_string(Status s);

struct Counterexample {
  Space space;
  std::vector<ValuePair> r;
  std::vector<ValuePair> s;
  // compose_noetherian: a cycle of r ; s.
  std::optional<Chain> cycle;
  // limit claims: the point and mode where the two limit images differ.
  std::optional<Value> at;
  std::optional<LimitMode> mode;
  ValueList image_r;
  ValueList image_s;
};

struct Finding {
  Claim claim;
  std::string label;  // "fixture", "sampled", "s_is_plus_r"
  Status status = Status::ValidatedOnSample;
  std::optional<Counterexample> counterexample;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultSamples = 1000;
inline constexpr std::size_t kMaxAuditSpace = 6;

// The two fixtures first, then the sampled findings, in a fixed order.
std::vector<Finding> run(std::uint64_t seed = 0, std::size_t samples = kDefaultSamples);

// Recomputes the verdict from the counterexample's data alone.
bool recheck(const Finding& f);

format::Json to_json(const Finding& f);
Finding finding_from_json(const format::Json& j);

// Relation files a counterexample is made of, for `noet check` / `noet seed`:
// (file name, canonical document).
std::vector<std::pair<std::string, std::string>> artifacts(const Finding& f);

// Random Noetherian relation on a space of n <= 6 nodes a, b, c, ...: the
// edges of a random DAG.
struct Sampler {
  explicit Sampler(std::uint64_t seed);
  Space space(std::size_t n);
  Relation noetherian(const Space& space);
  // A seed of s: a non-empty part of each non-empty image of s.
  Relation seed_of(const Relation& s);
  std::size_t below(std::size_t n);

private:
  std::mt19937_64 rng_;
};

} // namespace noet::audit
