#include "noet/examples.hpp"

#include "noet/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace noet::examples {

namespace {

using Array = std::vector<std::int64_t>;

[[noreturn]] void out_of_range(const std::string& msg) { throw Error(ErrorCode::ParameterOutOfRange, msg); }

std::int64_t need(const std::optional<std::int64_t>& v, const char* what, std::string_view example) {
  if (!v) throw Error(ErrorCode::MalformedInput, std::string(example) + " needs parameter " + what);
  return *v;
}

Array to_array(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

std::int64_t size_of(const Array& t) { return static_cast<std::int64_t>(t.size()); }

bool contains_value(std::span<const std::int64_t> t, std::int64_t x) {
  return std::find(t.begin(), t.end(), x) != t.end();
}

// x occurs in t[I] (1-based, inclusive).
bool occurs_in(const Array& t, std::int64_t x, const Interval& I) {
  for (auto i = I.lo; i <= I.hi; ++i)
    if (t[i - 1] == x) return true;
  return false;
}

bool same_multiset(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return std::is_permutation(a.begin(), a.end(), b.begin(), b.end());
}

void check_length(const Array& t) {
  if (size_of(t) > kMaxArrayLength)
    out_of_range("arrays are limited to " + std::to_string(kMaxArrayLength) + " elements");
}

Relation single_image(const Space& from, const Space& to, std::function<Value(const Value&)> f) {
  return Relation::from_image(from, to, [f](const Value& v) { return ValueList{f(v)}; });
}

ExampleInstance finish(std::string name, const Params& p, LoopParts parts, std::string oracle_id,
                       catalog::NamedFunction variant) {
  parts.postcondition = oracle(oracle_id);
  return {std::move(name), p, make_loop(std::move(parts)), std::move(oracle_id), std::move(variant)};
}

// gcd -----------------------------------------------------------------------

Relation gcd_body(const Space& X) {
  return Relation::from_image(
      X, X,
      [](const Value& s) {
        auto m = s.first().as_int(), n = s.second().as_int();
        if (m > n) return ValueList{Value::pair(Value::integer(m - n), Value::integer(n))};
        if (m < n) return ValueList{Value::pair(Value::integer(m), Value::integer(n - m))};
        return ValueList{};
      },
      [](const Value& s) { return s.first() != s.second(); });
}

ExampleInstance make_gcd(const Params& p, std::size_t max_space) {
  auto same_gcd = [](std::int64_t g) {
    return [g](const Value& v) { return std::gcd(v.first().as_int(), v.second().as_int()) == g; };
  };
  if (p.a || p.b) {
    auto a = need(p.a, "a", "gcd"), b = need(p.b, "b", "gcd");
    if (a < 1 || b < 1) out_of_range("gcd needs positive a and b");
    auto bound = p.bound.value_or(std::max(a, b));
    if (bound < std::max(a, b) || bound > kMaxGcdBound)
      out_of_range("bound must lie in max(a, b).." + std::to_string(kMaxGcdBound));
    auto side = Space::int_range(1, bound, max_space);
    auto X = Space::filtered(Space::product({side, side}, max_space), "gcd_equals_" + std::to_string(std::gcd(a, b)),
                             same_gcd(std::gcd(a, b)));
    auto input = Value::pair(Value::integer(a), Value::integer(b));
    auto inputs = Space::explicit_values({input});
    LoopParts parts{X, catalog::family_on(Rule::MaxInt, X), Relation::extensional(inputs, X, {{input, input}}),
                    gcd_body(X), {}, {}};
    return finish("gcd", p, std::move(parts), "gcd", catalog::named_function("max"));
  }
  auto a_max = p.a_max.value_or(30), b_max = p.b_max.value_or(30);
  if (a_max < 1 || b_max < 1) out_of_range("gcd needs positive a_max and b_max");
  auto bound = p.bound.value_or(std::max(a_max, b_max));
  if (bound < std::max(a_max, b_max) || bound > kMaxGcdBound)
    out_of_range("bound must lie in max(a_max, b_max).." + std::to_string(kMaxGcdBound));
  // One space for every input, so the gcd invariant moves into the order.
  auto side = Space::int_range(1, bound, max_space);
  auto X = Space::product({side, side}, max_space);
  auto inputs = Space::product({Space::int_range(1, a_max), Space::int_range(1, b_max)}, max_space);
  auto order = catalog::subrel(catalog::family_on(Rule::MaxInt, X), "same_gcd", [](const Value& s, const Value& t) {
    return std::gcd(s.first().as_int(), s.second().as_int()) == std::gcd(t.first().as_int(), t.second().as_int());
  });
  LoopParts parts{X, order, single_image(inputs, X, [](const Value& v) { return v; }), gcd_body(X), {}, {}};
  return finish("gcd", p, std::move(parts), "gcd", catalog::named_function("max"));
}

// searches ------------------------------------------------------------------

struct SearchInput {
  Array t;
  std::int64_t x;
  Value input;
  Space inputs;
};

SearchInput search_input(const Params& p, std::string_view name) {
  check_length(p.t);
  auto x = need(p.x, "x", name);
  auto input = array_with(p.t, x);
  return {p.t, x, input, Space::explicit_values({input})};
}

ExampleInstance make_seq_search(const Params& p, std::size_t max_space) {
  auto [t, x, input, inputs] = search_input(p, "seq_search");
  const auto n = size_of(t);
  auto X = Space::filtered(Space::intervals_of(1, n, max_space), "prefix_without_x", [t, x](const Value& v) {
    const auto& I = v.as_interval();
    return I.lo == 1 && !occurs_in(t, x, I);
  });
  // The domain is i < n and then t[i + 1] /= x, so t[n + 1] is never read.
  auto body = Relation::from_image(X, X, [t, x, n](const Value& v) {
    auto i = v.as_interval().hi;
    if (i < n && t[i] != x) return ValueList{Value::interval(1, i + 1)};
    return ValueList{};
  });
  catalog::NamedFunction remaining{"remaining", [n](const Value& v) { return Value::integer(n - v.as_interval().hi); }};
  // The prefixes grow, so the order is certified through the shrinking
  // remainder n - i and keeps exactly the SUBINTERVAL pairs.
  auto order = catalog::subrel(catalog::induced(X, remaining, catalog::intgreater(0, n)), "subinterval",
                               [](const Value& a, const Value& b) {
                                 return a.as_interval().strict_subset_of(b.as_interval());
                               });
  LoopParts parts{X, order, Relation::extensional(inputs, X, {{input, Value::interval(1, 0)}}), body, {}, {}};
  return finish("seq_search", p, std::move(parts), "membership_prefix", remaining);
}

ExampleInstance make_general_search_interval(const Params& p, std::size_t max_space) {
  auto [t, x, input, inputs] = search_input(p, "general_search_interval");
  const auto n = size_of(t);
  const bool present = contains_value(t, x);
  auto X = Space::filtered(Space::intervals_of(1, n, max_space), "keeps_answer", [t, x, present](const Value& v) {
    return occurs_in(t, x, v.as_interval()) == present;
  });
  auto body = Relation::from_image(X, X, [X](const Value& v) {
    ValueList out;
    for (const auto& J : X.values())
      if (J.as_interval().strict_subset_of(v.as_interval())) out.push_back(J);
    return out;
  });
  ChoicePolicy policy;
  if (p.policy == "midpoint") {
    policy = [t, x](const Value& state, const ValueList&) -> std::optional<Value> {
      if (!state.is(Value::Kind::Interval)) return std::nullopt;
      auto [lo, hi] = state.as_interval();
      auto mid = lo + (hi - lo) / 2;
      if (t[mid - 1] == x) return Value::interval(mid, mid);
      if (t[mid - 1] < x) return Value::interval(mid + 1, hi);
      return Value::interval(lo, mid - 1);
    };
  } else if (!p.policy.empty() && p.policy != "least") {
    throw Error(ErrorCode::MalformedInput, "unknown policy " + p.policy);
  }
  LoopParts parts{X, catalog::family_on(Rule::SupInterval, X),
                  Relation::extensional(inputs, X, {{input, Value::interval(1, n)}}), body, {}, policy};
  return finish("general_search_interval", p, std::move(parts), "membership_interval",
                catalog::named_function("interval_width"));
}

bool disjoint(std::span<const Interval> members, const Interval& J) {
  return std::none_of(members.begin(), members.end(),
                      [&](const Interval& I) { return I.lo <= J.hi && J.lo <= I.hi; });
}

ExampleInstance make_general_search_intervalset(const Params& p, std::size_t max_space) {
  auto [t, x, input, inputs] = search_input(p, "general_search_intervalset");
  const auto n = size_of(t);
  // Members are non-empty, pairwise disjoint and free of x.
  std::vector<Interval> candidates;
  for (std::int64_t lo = 1; lo <= n; ++lo)
    for (std::int64_t hi = lo; hi <= n && t[hi - 1] != x; ++hi) candidates.push_back({lo, hi});
  ValueList states;
  std::vector<Interval> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (states.size() >= max_space)
      throw Error(ErrorCode::SpaceTooLarge, "interval-set space exceeds " + std::to_string(max_space));
    states.push_back(Value::interval_set(chosen));
    for (auto k = from; k < candidates.size(); ++k)
      if (disjoint(chosen, candidates[k])) {
        chosen.push_back(candidates[k]);
        grow(k + 1);
        chosen.pop_back();
      }
  };
  grow(0);
  auto X = Space::explicit_values(std::move(states), max_space);
  auto body = Relation::from_image(X, X, [candidates](const Value& v) {
    ValueList out;
    auto members = v.as_interval_set();
    for (const auto& J : candidates)
      if (disjoint(members, J)) {
        std::vector<Interval> next(members.begin(), members.end());
        next.push_back(J);
        out.push_back(Value::interval_set(std::move(next)));
      }
    normalize(out);
    return out;
  });
  catalog::NamedFunction uncovered{"uncovered", [n](const Value& v) {
                                     std::int64_t covered = 0;
                                     for (const auto& I : v.as_interval_set()) covered += I.length();
                                     return Value::integer(n - covered);
                                   }};
  LoopParts parts{X, catalog::family_on(Rule::IntervalSubset, X),
                  Relation::extensional(inputs, X, {{input, Value::interval_set({})}}), body, {}, {}};
  return finish("general_search_intervalset", p, std::move(parts), "membership_cover", uncovered);
}

// partition -----------------------------------------------------------------

struct PartitionState {
  Array t;
  std::int64_t a, b;
};

// One step of the three-way conditional; requires a <= b.
void partition_step(PartitionState& s, std::int64_t pivot) {
  if (s.t[s.a - 1] <= pivot) {
    ++s.a;
  } else if (s.t[s.b - 1] >= pivot) {
    --s.b;
  } else {
    std::swap(s.t[s.a - 1], s.t[s.b - 1]);
    ++s.a;
    --s.b;
  }
}

bool split_holds(const Array& t, std::int64_t a, std::int64_t b, std::int64_t pivot) {
  for (std::int64_t i = 1; i < a; ++i)
    if (t[i - 1] > pivot) return false;
  for (auto i = b + 1; i <= size_of(t); ++i)
    if (t[i - 1] < pivot) return false;
  return true;
}

ExampleInstance make_partition(const Params& p, std::size_t max_space) {
  check_length(p.t);
  const auto pivot = need(p.pivot, "pivot", "partition");
  const auto n = size_of(p.t);
  const auto perms = permutations(p.t);
  ValueList states, starts;
  for (const auto& perm : perms) {
    starts.push_back(array_with(perm, pivot));
    for (std::int64_t a = 1; a <= n + 1; ++a)
      for (auto b = a - 1; b <= n; ++b)
        if (split_holds(perm, a, b, pivot)) {
          states.push_back(Value::pair(Value::seq(perm), Value::interval(a, b)));
          if (states.size() > max_space)
            throw Error(ErrorCode::SpaceTooLarge, "partition space exceeds " + std::to_string(max_space));
        }
  }
  auto X = Space::explicit_values(std::move(states), max_space);
  auto inputs = Space::explicit_values(std::move(starts), max_space);
  auto init = single_image(inputs, X, [n](const Value& in) { return Value::pair(in.first(), Value::interval(1, n)); });
  auto body = Relation::from_image(X, X, [pivot](const Value& v) {
    auto [a, b] = v.second().as_interval();
    if (a > b) return ValueList{};
    PartitionState s{to_array(v.first().as_seq()), a, b};
    partition_step(s, pivot);
    return ValueList{Value::pair(Value::seq(s.t), Value::interval(s.a, s.b))};
  });
  auto order = catalog::projection(X, 1, catalog::supinterval(1, n, max_space));
  catalog::NamedFunction width{"range_width", [](const Value& v) { return Value::integer(v.second().as_interval().length()); }};
  return finish("partition", p, LoopParts{X, order, init, body, {}, {}}, "partition_split", width);
}

// lamsort -------------------------------------------------------------------

std::vector<std::vector<Interval>> compositions(std::int64_t n) {
  if (n == 0) return {{}};
  std::vector<std::vector<Interval>> out;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<Interval> parts;
    std::int64_t lo = 1;
    for (std::int64_t i = 1; i < n; ++i)
      if (cuts >> (i - 1) & 1) {
        parts.push_back({lo, i});
        lo = i + 1;
      }
    parts.push_back({lo, n});
    out.push_back(std::move(parts));
  }
  return out;
}

bool adjacent_sorted(const Array& t, std::span<const Interval> parts) {
  for (std::size_t k = 1; k < parts.size(); ++k) {
    auto left = std::max_element(t.begin() + parts[k - 1].lo - 1, t.begin() + parts[k - 1].hi);
    auto right = std::min_element(t.begin() + parts[k].lo - 1, t.begin() + parts[k].hi);
    if (*left > *right) return false;
  }
  return true;
}

// Partitions t[I] around t[I.lo] with the partition step, then moves the
// pivot between the two sides.
Value split(const Value& state, std::size_t which) {
  auto parts = state.first().as_interval_set();
  Array t = to_array(state.second().as_seq());
  const Interval I = parts[which];
  const auto pivot = t[I.lo - 1];
  PartitionState s{t, I.lo + 1, I.hi};
  while (s.a <= s.b) partition_step(s, pivot);
  std::swap(s.t[I.lo - 1], s.t[s.a - 2]);
  std::vector<Interval> next;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k != which) {
      next.push_back(parts[k]);
      continue;
    }
    for (Interval piece : {Interval{I.lo, s.a - 2}, Interval{s.a - 1, s.a - 1}, Interval{s.a, I.hi}})
      if (!piece.empty()) next.push_back(piece);
  }
  return Value::pair(Value::interval_set(std::move(next)), Value::seq(s.t));
}

ExampleInstance make_lamsort(const Params& p, std::size_t max_space) {
  check_length(p.t);
  const auto n = size_of(p.t);
  const auto perms = permutations(p.t);
  const auto comps = compositions(n);
  ValueList states, starts;
  for (const auto& perm : perms) {
    starts.push_back(Value::seq(perm));
    for (const auto& parts : comps)
      if (adjacent_sorted(perm, parts)) {
        states.push_back(Value::pair(Value::interval_set(parts), Value::seq(perm)));
        if (states.size() > max_space)
          throw Error(ErrorCode::SpaceTooLarge, "lamsort space exceeds " + std::to_string(max_space));
      }
  }
  auto X = Space::explicit_values(std::move(states), max_space);
  auto inputs = Space::explicit_values(std::move(starts), max_space);
  std::vector<Interval> whole;
  if (n > 0) whole.push_back({1, n});
  auto init = single_image(inputs, X, [whole](const Value& t) { return Value::pair(Value::interval_set(whole), t); });
  auto body = Relation::from_image(X, X, [](const Value& v) {
    ValueList out;
    auto parts = v.first().as_interval_set();
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k].length() >= 2) out.push_back(split(v, k));
    normalize(out);
    return out;
  });
  catalog::NamedFunction count{"interval_count", [](const Value& v) {
                                 return Value::integer(static_cast<std::int64_t>(v.first().as_interval_set().size()));
                               }};
  auto order = catalog::induced(X, count, catalog::intlesser(0, n));
  ChoicePolicy policy = [](const Value& v, const ValueList&) -> std::optional<Value> {
    auto parts = v.first().as_interval_set();
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k].length() >= 2 && (!best || parts[k].length() > parts[*best].length())) best = k;
    if (!best) return std::nullopt;
    return split(v, *best);
  };
  catalog::NamedFunction unsplit{"unsplit", [n](const Value& v) {
                                   return Value::integer(n - static_cast<std::int64_t>(v.first().as_interval_set().size()));
                                 }};
  return finish("lamsort", p, LoopParts{X, order, init, body, {}, policy}, "sorted_permutation", unsplit);
}

// oracles -------------------------------------------------------------------

bool found_prefix(const Value& input, const Value& terminal) {
  return terminal.as_interval().hi != static_cast<std::int64_t>(input.first().as_seq().size());
}

bool found_interval(const Value&, const Value& terminal) { return !terminal.as_interval().empty(); }

bool found_cover(const Value& input, const Value& terminal) {
  const auto n = static_cast<std::int64_t>(input.first().as_seq().size());
  std::set<std::int64_t> covered;
  for (const auto& I : terminal.as_interval_set())
    for (auto i = I.lo; i <= I.hi; ++i) covered.insert(i);
  bool whole = static_cast<std::int64_t>(covered.size()) == n &&
               (n == 0 || (*covered.begin() == 1 && *covered.rbegin() == n));
  return !whole;
}

bool membership(const Value& input) { return contains_value(input.first().as_seq(), input.second().as_int()); }

// sweeps --------------------------------------------------------------------

void note(SweepResult& r, std::string what) {
  if (r.failures.size() < 10) r.failures.push_back(std::move(what));
}

// Runs every input of the instance; returns the terminals per input.
std::map<Value, ValueList> check_instance(const ExampleInstance& inst, SweepResult& r) {
  ++r.instances;
  std::map<Value, ValueList> out;
  const auto& loop = inst.loop;
  const auto post = oracle(inst.oracle);
  for (const auto& input : loop.inputs().values()) {
    ++r.inputs;
    auto ran = run_all(loop, input).terminals;
    r.terminals += ran.size();
    for (const auto& t : ran)
      if (!post.holds(input, t) || loop.order().in_domain(t)) {
        ++r.oracle_failures;
        note(r, inst.name + ": " + to_string(input) + " ends at " + to_string(t));
      }
    auto closed = closure_terminals(loop, input);
    auto lim = limit_terminals(loop, input);
    if (ran != closed || closed != lim) {
      ++r.agreement_failures;
      note(r, inst.name + ": denotations differ at " + to_string(input));
    }
    out.emplace(input, std::move(ran));
  }
  auto variant = variant_to_relation(inst.variant, loop.space());
  for (const auto& a : loop.space().values())
    for (const auto& b : loop.body().image(a))
      if (!variant.contains(a, b)) {
        ++r.variant_failures;
        note(r, inst.name + ": variant " + inst.variant.name + " does not decrease on " + to_string(a) + " -> " +
                    to_string(b));
      }
  return out;
}

} // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"gcd", "seq_search", "general_search_interval",
                                            "general_search_intervalset", "partition", "lamsort"};
  return all;
}

std::string_view summary(std::string_view name) {
  if (name == "gcd") return "subtractive Euclid on pairs; --a --b, or --a-max --b-max for every input";
  if (name == "seq_search") return "left-to-right search over growing prefixes 1..i; --t --x";
  if (name == "general_search_interval") return "search by shrinking subintervals; --t --x [--policy midpoint]";
  if (name == "general_search_intervalset") return "search by a growing set of x-free intervals; --t --x";
  if (name == "partition") return "Quicksort partition of a..b around a pivot; --t --pivot";
  if (name == "lamsort") return "Quicksort as repeated partition of a set of intervals; --t";
  throw Error(ErrorCode::MalformedInput, "unknown example " + std::string(name));
}

ExampleInstance instantiate(std::string_view name, const Params& params, std::size_t max_space) {
  if (name == "gcd") return make_gcd(params, max_space);
  if (name == "seq_search") return make_seq_search(params, max_space);
  if (name == "general_search_interval") return make_general_search_interval(params, max_space);
  if (name == "general_search_intervalset") return make_general_search_intervalset(params, max_space);
  if (name == "partition") return make_partition(params, max_space);
  if (name == "lamsort") return make_lamsort(params, max_space);
  throw Error(ErrorCode::MalformedInput, "unknown example " + std::string(name));
}

const std::vector<std::string>& oracle_ids() {
  static const std::vector<std::string> all{"gcd",           "membership_prefix",  "membership_interval",
                                            "membership_cover", "partition_split", "sorted_permutation",
                                            "minimum"};
  return all;
}

Postcondition oracle(std::string_view id) {
  if (id == "gcd")
    return {"gcd", [](const Value& in, const Value& t) {
              auto g = std::gcd(in.first().as_int(), in.second().as_int());
              return t.first().as_int() == g && t.second().as_int() == g;
            }};
  if (id == "membership_prefix")
    return {"membership_prefix", [](const Value& in, const Value& t) { return membership(in) == found_prefix(in, t); }};
  if (id == "membership_interval")
    return {"membership_interval",
            [](const Value& in, const Value& t) { return membership(in) == found_interval(in, t); }};
  if (id == "membership_cover")
    return {"membership_cover", [](const Value& in, const Value& t) { return membership(in) == found_cover(in, t); }};
  if (id == "partition_split")
    return {"partition_split", [](const Value& in, const Value& t) {
              auto before = in.first().as_seq();
              auto after = t.first().as_seq();
              if (!same_multiset(before, after)) return false;
              auto a = t.second().as_interval().lo;
              auto cut = after.begin() + std::clamp<std::int64_t>(a - 1, 0, static_cast<std::int64_t>(after.size()));
              if (cut == after.begin() || cut == after.end()) return true;
              return *std::max_element(after.begin(), cut) <= *std::min_element(cut, after.end());
            }};
  if (id == "sorted_permutation")
    return {"sorted_permutation", [](const Value& in, const Value& t) {
              const Value& arr = t.is(Value::Kind::Seq) ? t : t.second();
              auto after = arr.as_seq();
              return same_multiset(in.as_seq(), after) && std::is_sorted(after.begin(), after.end());
            }};
  if (id == "minimum") return {"minimum", [](const Value&, const Value&) { return true; }};
  throw Error(ErrorCode::UnknownOracle, "unknown oracle " + std::string(id), std::string(id));
}

bool oracle_check(const ExampleInstance& inst, const Value& input, const Value& terminal) {
  return oracle(inst.oracle).holds(input, terminal);
}

Value array_with(const std::vector<std::int64_t>& t, std::int64_t k) {
  return Value::pair(Value::seq(t), Value::integer(k));
}

std::vector<std::vector<std::int64_t>> permutations(std::vector<std::int64_t> t) {
  std::sort(t.begin(), t.end());
  std::vector<std::vector<std::int64_t>> out;
  do out.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));
  return out;
}

std::vector<std::vector<std::int64_t>> arrays(std::int64_t max_len, std::int64_t vmax) {
  std::vector<Array> out{{}};
  std::size_t from = 0;
  for (std::int64_t len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (auto k = from; k < to; ++k)
      for (std::int64_t v = 0; v <= vmax; ++v) {
        auto next = out[k];
        next.push_back(v);
        out.push_back(std::move(next));
      }
    from = to;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> multisets(std::int64_t max_len, std::int64_t vmax) {
  std::vector<Array> out;
  for (auto& a : arrays(max_len, vmax))
    if (std::is_sorted(a.begin(), a.end())) out.push_back(std::move(a));
  return out;
}

SweepResult sweep_gcd(std::int64_t a_max, std::int64_t b_max) {
  SweepResult r;
  r.name = "gcd";
  Params p;
  p.a_max = a_max;
  p.b_max = b_max;
  check_instance(instantiate("gcd", p), r);
  return r;
}

SweepResult sweep_search(std::int64_t max_len, std::int64_t vmax, std::int64_t xmax) {
  SweepResult r;
  r.name = "search";
  for (const auto& t : arrays(max_len, vmax))
    for (std::int64_t x = 0; x <= xmax; ++x) {
      Params p;
      p.t = t;
      p.x = x;
      const auto input = array_with(t, x);
      const bool truth = contains_value(t, x);
      std::set<bool> answers;
      for (const auto& [name, found] :
           {std::pair{"seq_search", &found_prefix}, std::pair{"general_search_interval", &found_interval},
            std::pair{"general_search_intervalset", &found_cover}}) {
        auto terms = check_instance(instantiate(name, p), r);
        for (const auto& term : terms.at(input)) answers.insert(found(input, term));
      }
      if (answers != std::set<bool>{truth}) {
        ++r.model_disagreements;
        note(r, "search models disagree on " + to_string(input));
      }
    }
  return r;
}

SweepResult sweep_partition(std::int64_t max_len, std::int64_t vmax, std::int64_t pmax) {
  SweepResult r;
  r.name = "partition";
  for (const auto& t : multisets(max_len, vmax))
    for (std::int64_t pivot = 0; pivot <= pmax; ++pivot) {
      Params p;
      p.t = t;
      p.pivot = pivot;
      check_instance(instantiate("partition", p), r);
    }
  return r;
}

SweepResult sweep_lamsort(std::int64_t max_len, std::int64_t vmax) {
  SweepResult r;
  r.name = "lamsort";
  for (const auto& t : multisets(max_len, vmax)) {
    Params p;
    p.t = t;
    check_instance(instantiate("lamsort", p), r);
  }
  return r;
}

} // namespace noet::examples
