#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace noet {

// Finite integer interval lo..hi. lo == hi + 1 is the empty interval; each
// empty interval keeps its bounds, so 3..2 and 4..3 are distinct values that
// denote the same (empty) set of integers.
struct Interval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
  std::int64_t length() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(std::int64_t i) const { return lo <= i && i <= hi; }
  // Set inclusion on the integers denoted, so every empty interval is a
  // subset of every interval.
  bool subset_of(const Interval& other) const {
    return empty() || (other.lo <= lo && hi <= other.hi);
  }
  bool strict_subset_of(const Interval& other) const {
    return subset_of(other) && length() < other.length();
  }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// A structural state element. Every variant has structural equality and a
// total canonical ordering (kind first, then contents); the ordering only
// drives deterministic output and tie-breaking.
class Value {
public:
  enum class Kind : std::uint8_t { Int, Pair, Interval, IntervalSet, Seq, Node, Tuple };

  Value() : Value(integer(0)) {}

  static Value integer(std::int64_t i);
  static Value pair(Value a, Value b);
  static Value interval(std::int64_t lo, std::int64_t hi);
  static Value interval_set(std::vector<Interval> members);
  static Value seq(std::vector<std::int64_t> items);
  static Value node(std::string id);
  static Value tuple(std::vector<Value> items);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  std::int64_t as_int() const;
  const Value& first() const;
  const Value& second() const;
  const Interval& as_interval() const;
  std::span<const Interval> as_interval_set() const;
  std::span<const std::int64_t> as_seq() const;
  const std::string& as_node() const;
  // Components of a Pair (two items) or a Tuple.
  std::span<const Value> items() const;

  std::size_t hash() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

private:
  using Rep = std::variant<std::int64_t, Interval, std::vector<Interval>,
                           std::vector<std::int64_t>, std::string, std::vector<Value>>;

  Value(Kind kind, Rep rep) : kind_(kind), rep_(std::move(rep)) {}

  Kind kind_;
  Rep rep_;
};

const char* to_string(Value::Kind kind);

// Compact human-readable rendering: 3, (1, 2), 1..4, {1..2, 3..3}, [4, 2],
// a, <x, y, z>.
std::string to_string(const Value& v);
std::string to_string(std::span<const Value> values);  // {v1, v2, ...}

using ValueList = std::vector<Value>;
using ValuePair = std::pair<Value, Value>;

// Sorts canonically and removes duplicates.
void normalize(ValueList& values);
bool sorted_contains(const ValueList& sorted, const Value& v);

} // namespace noet

template <>
struct std::hash<noet::Value> {
  std::size_t operator()(const noet::Value& v) const noexcept { return v.hash(); }
};
