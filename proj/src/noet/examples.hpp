#pragma once

#include "noet/loop.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noet::examples {

// Parameters for every example; each one reads the fields it needs.
//   gcd:        a and b (one input), or a_max and b_max (all inputs); bound
//   searches:   t, x; policy "midpoint" for binary search
//   partition:  t, pivot
//   lamsort:    t
struct Params {
  std::optional<std::int64_t> a, b, a_max, b_max, bound;
  std::vector<std::int64_t> t;
  std::optional<std::int64_t> x, pivot;
  std::string policy;  // "", "least", "midpoint", "leftmost_longest"
};

struct ExampleInstance {
  std::string name;
  Params params;
  LoopDef loop;
  std::string oracle;
  // Classical variant the order subsumes.
  catalog::NamedFunction variant;
};

inline constexpr std::int64_t kMaxArrayLength = 8;
inline constexpr std::int64_t kMaxGcdBound = 200;

const std::vector<std::string>& names();
std::string_view summary(std::string_view name);

// Throws ParameterOutOfRange, MalformedInput for a missing parameter, or any
// make_loop error (which would be a defect here).
ExampleInstance instantiate(std::string_view name, const Params& params,
                            std::size_t max_space = kDefaultMaxSpace);

// gcd, membership_prefix, membership_interval, membership_cover,
// partition_split, sorted_permutation, minimum. Throws UnknownOracle.
Postcondition oracle(std::string_view id);
const std::vector<std::string>& oracle_ids();
bool oracle_check(const ExampleInstance& inst, const Value& input, const Value& terminal);

// Inputs of the searches and partition: (t, x) and (t, pivot).
Value array_with(const std::vector<std::int64_t>& t, std::int64_t k);
// Distinct permutations of t in canonical order.
std::vector<std::vector<std::int64_t>> permutations(std::vector<std::int64_t> t);
// Every array of length 0..max_len over 0..vmax, shortest first.
std::vector<std::vector<std::int64_t>> arrays(std::int64_t max_len, std::int64_t vmax);
// Every multiset (as a sorted array) of length 0..max_len over 0..vmax.
std::vector<std::vector<std::int64_t>> multisets(std::int64_t max_len, std::int64_t vmax);

// Exhaustive sweeps. Each instance goes through make_loop, every input is
// run under all resolutions, and every terminal is checked by the oracle;
// the three denotations and the variant subsumption are checked alongside.
struct SweepResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t inputs = 0;
  std::size_t terminals = 0;
  std::size_t oracle_failures = 0;
  std::size_t agreement_failures = 0;
  std::size_t variant_failures = 0;
  std::size_t model_disagreements = 0;  // searches only
  std::vector<std::string> failures;    // first few, rendered

  bool pass() const {
    return oracle_failures == 0 && agreement_failures == 0 && variant_failures == 0 &&
           model_disagreements == 0;
  }
};

SweepResult sweep_gcd(std::int64_t a_max, std::int64_t b_max);
// seq_search, general_search_interval and general_search_intervalset on
// every (t, x); the three found/not-found answers must coincide.
SweepResult sweep_search(std::int64_t max_len, std::int64_t vmax, std::int64_t xmax);
SweepResult sweep_partition(std::int64_t max_len, std::int64_t vmax, std::int64_t pmax);
SweepResult sweep_lamsort(std::int64_t max_len, std::int64_t vmax);

} // namespace noet::examples
