#pragma once

#include "noet/value.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace noet {

inline constexpr std::size_t kDefaultMaxSpace = 100000;

// A finite (or, for `integers`, unbounded and non-enumerable) set of Values.
// Enumeration is computed once at construction, sorted canonically and
// duplicate-free; membership agrees with it exactly.
class Space {
public:
  enum class Kind { IntRange, Explicit, Product, IntervalsOf, IntervalSetsOf, Filtered, Integers };

  using Predicate = std::function<bool(const Value&)>;

  static Space int_range(std::int64_t lo, std::int64_t hi, std::size_t max_size = kDefaultMaxSpace);
  static Space explicit_values(ValueList values, std::size_t max_size = kDefaultMaxSpace);
  // Two factors yield Pair values, any other count yields Tuple values.
  static Space product(std::vector<Space> factors, std::size_t max_size = kDefaultMaxSpace);
  // All intervals a..b inside lo..hi, including every empty a..a-1 with
  // lo <= a <= hi + 1.
  static Space intervals_of(std::int64_t lo, std::int64_t hi,
                            std::size_t max_size = kDefaultMaxSpace);
  // All finite sets of non-empty subintervals of lo..hi.
  static Space interval_sets_of(std::int64_t lo, std::int64_t hi,
                                std::size_t max_size = kDefaultMaxSpace);
  static Space filtered(const Space& base, std::string predicate_id, Predicate keep);
  static Space integers();

  Kind kind() const;
  bool enumerable() const;
  bool empty() const { return size() == 0; }
  std::size_t size() const;
  const ValueList& values() const;
  bool contains(const Value& v) const;
  std::optional<std::size_t> index_of(const Value& v) const;

  std::int64_t lo() const;
  std::int64_t hi() const;
  const std::vector<Space>& factors() const;
  const Space& base() const;
  const std::string& predicate_id() const;

  // Canonical one-line description, e.g. "int_range(0,5)".
  const std::string& descriptor() const;

  friend bool operator==(const Space& a, const Space& b);

private:
  struct Impl;
  explicit Space(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

} // namespace noet
