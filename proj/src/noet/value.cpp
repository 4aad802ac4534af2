#include "noet/value.hpp"

#include "noet/error.hpp"

#include <algorithm>
#include <sstream>

namespace noet {

const char* to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::ValueOutsideSpace: return "ValueOutsideSpace";
  case ErrorCode::RequiresExtensional: return "RequiresExtensional";
  case ErrorCode::SpaceMismatch: return "SpaceMismatch";
  case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
  case ErrorCode::NotEnumerable: return "NotEnumerable";
  case ErrorCode::NotNoetherian: return "NotNoetherian";
  case ErrorCode::MalformedExpr: return "MalformedExpr";
  case ErrorCode::UnknownNamedFunction: return "UnknownNamedFunction";
  case ErrorCode::EmptySpace: return "EmptySpace";
  case ErrorCode::InitEscapesSpace: return "InitEscapesSpace";
  case ErrorCode::BodyNotSubsetOfOrder: return "BodyNotSubsetOfOrder";
  case ErrorCode::DomainMismatch: return "DomainMismatch";
  case ErrorCode::OrderNotNoetherian: return "OrderNotNoetherian";
  case ErrorCode::FuelExhausted: return "FuelExhausted";
  case ErrorCode::InputOutsideSpace: return "InputOutsideSpace";
  case ErrorCode::NonTotalFunction: return "NonTotalFunction";
  case ErrorCode::NegativeVariantValue: return "NegativeVariantValue";
  case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
  case ErrorCode::UnknownOracle: return "UnknownOracle";
  case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Value Value::integer(std::int64_t i) { return Value(Kind::Int, i); }

Value Value::pair(Value a, Value b) {
  std::vector<Value> items;
  items.reserve(2);
  items.push_back(std::move(a));
  items.push_back(std::move(b));
  return Value(Kind::Pair, std::move(items));
}

Value Value::interval(std::int64_t lo, std::int64_t hi) {
  if (lo > hi + 1)
    throw Error(ErrorCode::MalformedInput,
                "interval " + std::to_string(lo) + ".." + std::to_string(hi) +
                    " violates lo <= hi + 1");
  return Value(Kind::Interval, Interval{lo, hi});
}

Value Value::interval_set(std::vector<Interval> members) {
  for (const auto& m : members)
    if (m.lo > m.hi + 1)
      throw Error(ErrorCode::MalformedInput, "interval-set member violates lo <= hi + 1");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Value(Kind::IntervalSet, std::move(members));
}

Value Value::seq(std::vector<std::int64_t> items) { return Value(Kind::Seq, std::move(items)); }

Value Value::node(std::string id) { return Value(Kind::Node, std::move(id)); }

Value Value::tuple(std::vector<Value> items) { return Value(Kind::Tuple, std::move(items)); }

namespace {

[[noreturn]] void wrong_kind(const char* wanted, Value::Kind got) {
  throw Error(ErrorCode::MalformedInput,
              std::string("expected ") + wanted + " value, got " + to_string(got));
}

} // namespace

std::int64_t Value::as_int() const {
  if (kind_ != Kind::Int) wrong_kind("int", kind_);
  return std::get<std::int64_t>(rep_);
}

const Value& Value::first() const {
  if (kind_ != Kind::Pair) wrong_kind("pair", kind_);
  return std::get<std::vector<Value>>(rep_)[0];
}

const Value& Value::second() const {
  if (kind_ != Kind::Pair) wrong_kind("pair", kind_);
  return std::get<std::vector<Value>>(rep_)[1];
}

const Interval& Value::as_interval() const {
  if (kind_ != Kind::Interval) wrong_kind("interval", kind_);
  return std::get<Interval>(rep_);
}

std::span<const Interval> Value::as_interval_set() const {
  if (kind_ != Kind::IntervalSet) wrong_kind("interval-set", kind_);
  return std::get<std::vector<Interval>>(rep_);
}

std::span<const std::int64_t> Value::as_seq() const {
  if (kind_ != Kind::Seq) wrong_kind("seq", kind_);
  return std::get<std::vector<std::int64_t>>(rep_);
}

const std::string& Value::as_node() const {
  if (kind_ != Kind::Node) wrong_kind("node", kind_);
  return std::get<std::string>(rep_);
}

std::span<const Value> Value::items() const {
  if (kind_ != Kind::Pair && kind_ != Kind::Tuple) wrong_kind("pair or tuple", kind_);
  return std::get<std::vector<Value>>(rep_);
}

namespace {

inline std::size_t mix(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

std::size_t Value::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x100000001b3ULL;
  switch (kind_) {
  case Kind::Int:
    return mix(h, std::hash<std::int64_t>{}(std::get<std::int64_t>(rep_)));
  case Kind::Interval: {
    const auto& iv = std::get<Interval>(rep_);
    return mix(mix(h, std::hash<std::int64_t>{}(iv.lo)), std::hash<std::int64_t>{}(iv.hi));
  }
  case Kind::IntervalSet:
    for (const auto& iv : std::get<std::vector<Interval>>(rep_))
      h = mix(mix(h, std::hash<std::int64_t>{}(iv.lo)), std::hash<std::int64_t>{}(iv.hi));
    return h;
  case Kind::Seq:
    for (auto i : std::get<std::vector<std::int64_t>>(rep_))
      h = mix(h, std::hash<std::int64_t>{}(i));
    return h;
  case Kind::Node:
    return mix(h, std::hash<std::string>{}(std::get<std::string>(rep_)));
  case Kind::Pair:
  case Kind::Tuple:
    for (const auto& v : std::get<std::vector<Value>>(rep_)) h = mix(h, v.hash());
    return h;
  }
  return h;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
  case Value::Kind::Int:
    return std::get<std::int64_t>(a.rep_) <=> std::get<std::int64_t>(b.rep_);
  case Value::Kind::Interval:
    return std::get<Interval>(a.rep_) <=> std::get<Interval>(b.rep_);
  case Value::Kind::IntervalSet:
    return std::get<std::vector<Interval>>(a.rep_) <=> std::get<std::vector<Interval>>(b.rep_);
  case Value::Kind::Seq:
    return std::get<std::vector<std::int64_t>>(a.rep_) <=>
           std::get<std::vector<std::int64_t>>(b.rep_);
  case Value::Kind::Node: {
    int c = std::get<std::string>(a.rep_).compare(std::get<std::string>(b.rep_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  case Value::Kind::Pair:
  case Value::Kind::Tuple: {
    const auto& x = std::get<std::vector<Value>>(a.rep_);
    const auto& y = std::get<std::vector<Value>>(b.rep_);
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }
  }
  return std::strong_ordering::equal;
}

const char* to_string(Value::Kind kind) {
  switch (kind) {
  case Value::Kind::Int: return "int";
  case Value::Kind::Pair: return "pair";
  case Value::Kind::Interval: return "interval";
  case Value::Kind::IntervalSet: return "iset";
  case Value::Kind::Seq: return "seq";
  case Value::Kind::Node: return "node";
  case Value::Kind::Tuple: return "tuple";
  }
  return "?";
}

namespace {

void render(std::ostream& os, const Value& v) {
  switch (v.kind()) {
  case Value::Kind::Int: os << v.as_int(); break;
  case Value::Kind::Pair:
    os << '(';
    render(os, v.first());
    os << ", ";
    render(os, v.second());
    os << ')';
    break;
  case Value::Kind::Interval: os << v.as_interval().lo << ".." << v.as_interval().hi; break;
  case Value::Kind::IntervalSet: {
    os << '{';
    bool first = true;
    for (const auto& iv : v.as_interval_set()) {
      if (!first) os << ", ";
      first = false;
      os << iv.lo << ".." << iv.hi;
    }
    os << '}';
    break;
  }
  case Value::Kind::Seq: {
    os << '[';
    bool first = true;
    for (auto i : v.as_seq()) {
      if (!first) os << ", ";
      first = false;
      os << i;
    }
    os << ']';
    break;
  }
  case Value::Kind::Node: os << v.as_node(); break;
  case Value::Kind::Tuple: {
    os << '<';
    bool first = true;
    for (const auto& item : v.items()) {
      if (!first) os << ", ";
      first = false;
      render(os, item);
    }
    os << '>';
    break;
  }
  }
}

} // namespace

std::string to_string(const Value& v) {
  std::ostringstream os;
  render(os, v);
  return os.str();
}

std::string to_string(std::span<const Value> values) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ", ";
    first = false;
    render(os, v);
  }
  os << '}';
  return os.str();
}

void normalize(ValueList& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

bool sorted_contains(const ValueList& sorted, const Value& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

} // namespace noet
