#include "noet/space.hpp"

#include "noet/error.hpp"

#include <algorithm>

namespace noet {

struct Space::Impl {
  Kind kind = Kind::Explicit;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<Space> factors;
  std::vector<Space> base;  // holds the single base of a filtered space
  std::string predicate_id;
  Predicate keep;
  std::string descriptor;
  bool enumerable = true;
  ValueList values;
};

namespace {

[[noreturn]] void too_large(const std::string& what, std::size_t cap) {
  throw Error(ErrorCode::SpaceTooLarge,
              what + " exceeds the maximum enumeration size " + std::to_string(cap));
}

// Saturating count of lo..hi elements.
std::size_t range_count(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return 0;
  auto span = static_cast<unsigned long long>(hi) - static_cast<unsigned long long>(lo);
  if (span >= static_cast<unsigned long long>(SIZE_MAX) - 1) return SIZE_MAX;
  return static_cast<std::size_t>(span) + 1;
}

} // namespace

Space Space::int_range(std::int64_t lo, std::int64_t hi, std::size_t max_size) {
  auto n = range_count(lo, hi);
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IntRange;
  impl->lo = lo;
  impl->hi = hi;
  impl->descriptor = "int_range(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
  if (n > max_size) too_large(impl->descriptor, max_size);
  impl->values.reserve(n);
  for (std::int64_t i = lo; i <= hi; ++i) impl->values.push_back(Value::integer(i));
  return Space(std::move(impl));
}

Space Space::explicit_values(ValueList values, std::size_t max_size) {
  normalize(values);
  if (values.size() > max_size) too_large("explicit space", max_size);
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Explicit;
  impl->descriptor = to_string(values);
  impl->values = std::move(values);
  return Space(std::move(impl));
}

Space Space::product(std::vector<Space> factors, std::size_t max_size) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Product;
  impl->descriptor = "product(";
  std::size_t total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (!f.enumerable()) throw Error(ErrorCode::NotEnumerable, "product of a non-enumerable space");
    impl->descriptor += (i ? "," : "") + f.descriptor();
    if (f.size() != 0 && total > max_size / f.size() + 1) total = max_size + 1;
    else total *= f.size();
  }
  impl->descriptor += ")";
  if (total > max_size) too_large(impl->descriptor, max_size);

  const bool as_pair = factors.size() == 2;
  std::vector<std::size_t> odometer(factors.size(), 0);
  impl->values.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Value> items;
    items.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) items.push_back(factors[i].values()[odometer[i]]);
    impl->values.push_back(as_pair ? Value::pair(items[0], items[1]) : Value::tuple(std::move(items)));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++odometer[k] < factors[k].size()) break;
      odometer[k] = 0;
    }
  }
  impl->factors = std::move(factors);
  return Space(std::move(impl));
}

Space Space::intervals_of(std::int64_t lo, std::int64_t hi, std::size_t max_size) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IntervalsOf;
  impl->lo = lo;
  impl->hi = hi;
  impl->descriptor = "intervals_of(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
  if (hi < lo - 1) throw Error(ErrorCode::MalformedInput, impl->descriptor + ": hi < lo - 1");
  auto k = range_count(lo, hi);
  if (k > 2 * max_size || k * (k + 1) / 2 + k + 1 > max_size) too_large(impl->descriptor, max_size);
  for (std::int64_t a = lo; a <= hi + 1; ++a)
    for (std::int64_t b = a - 1; b <= hi; ++b) impl->values.push_back(Value::interval(a, b));
  normalize(impl->values);
  return Space(std::move(impl));
}

Space Space::interval_sets_of(std::int64_t lo, std::int64_t hi, std::size_t max_size) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IntervalSetsOf;
  impl->lo = lo;
  impl->hi = hi;
  impl->descriptor = "interval_sets_of(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
  if (hi < lo - 1) throw Error(ErrorCode::MalformedInput, impl->descriptor + ": hi < lo - 1");
  std::vector<Interval> members;
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t b = a; b <= hi; ++b) members.push_back({a, b});
  if (members.size() >= 63 || (std::size_t{1} << members.size()) > max_size)
    too_large(impl->descriptor, max_size);
  const std::size_t count = std::size_t{1} << members.size();
  impl->values.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Interval> chosen;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask & (std::size_t{1} << i)) chosen.push_back(members[i]);
    impl->values.push_back(Value::interval_set(std::move(chosen)));
  }
  normalize(impl->values);
  return Space(std::move(impl));
}

Space Space::filtered(const Space& base, std::string predicate_id, Predicate keep) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Filtered;
  impl->descriptor = "filtered(" + base.descriptor() + "," + predicate_id + ")";
  impl->enumerable = base.enumerable();
  if (impl->enumerable)
    for (const auto& v : base.values())
      if (keep(v)) impl->values.push_back(v);
  impl->base.push_back(base);
  impl->predicate_id = std::move(predicate_id);
  impl->keep = std::move(keep);
  return Space(std::move(impl));
}

Space Space::integers() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Integers;
  impl->descriptor = "integers";
  impl->enumerable = false;
  return Space(std::move(impl));
}

Space::Kind Space::kind() const { return impl_->kind; }
bool Space::enumerable() const { return impl_->enumerable; }

std::size_t Space::size() const { return values().size(); }

const ValueList& Space::values() const {
  if (!impl_->enumerable)
    throw Error(ErrorCode::NotEnumerable, "space " + impl_->descriptor + " is not enumerable");
  return impl_->values;
}

bool Space::contains(const Value& v) const {
  switch (impl_->kind) {
  case Kind::IntRange:
    return v.is(Value::Kind::Int) && impl_->lo <= v.as_int() && v.as_int() <= impl_->hi;
  case Kind::Integers:
    return v.is(Value::Kind::Int);
  case Kind::IntervalsOf: {
    if (!v.is(Value::Kind::Interval)) return false;
    const auto& iv = v.as_interval();
    return impl_->lo <= iv.lo && iv.hi <= impl_->hi;
  }
  case Kind::Filtered:
    if (!impl_->enumerable) return impl_->base[0].contains(v) && impl_->keep(v);
    return sorted_contains(impl_->values, v);
  default:
    return sorted_contains(impl_->values, v);
  }
}

std::optional<std::size_t> Space::index_of(const Value& v) const {
  const auto& vs = values();
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vs.begin());
}

std::int64_t Space::lo() const { return impl_->lo; }
std::int64_t Space::hi() const { return impl_->hi; }
const std::vector<Space>& Space::factors() const { return impl_->factors; }

const Space& Space::base() const {
  if (impl_->base.empty()) throw Error(ErrorCode::MalformedInput, "space has no base");
  return impl_->base[0];
}

const std::string& Space::predicate_id() const { return impl_->predicate_id; }
const std::string& Space::descriptor() const { return impl_->descriptor; }

bool operator==(const Space& a, const Space& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->enumerable != b.impl_->enumerable) return false;
  if (!a.impl_->enumerable) return a.impl_->descriptor == b.impl_->descriptor;
  return a.impl_->values == b.impl_->values;
}

} // namespace noet
