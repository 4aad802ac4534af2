#include "support.hpp"

#include "noet/catalog.hpp"
#include "noet/error.hpp"
#include "noet/examples.hpp"
#include "noet/loop.hpp"

#include <doctest.h>

#include <numeric>

using namespace testing;
using namespace noet;
namespace cat = noet::catalog;
namespace ex = noet::examples;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::MalformedInput;
}

Value P(std::int64_t a, std::int64_t b) { return Value::pair(I(a), I(b)); }

// Subtractive Euclid on pairs in 1..bound, written out extensionally. MAXINT
// alone is not seeded by it: (2, 4) can only fall to pairs of gcd 2.
LoopDef gcd_loop(std::int64_t bound) {
  auto X = Space::product({ints(1, bound), ints(1, bound)});
  std::vector<ValuePair> body;
  for (const auto& v : X.values()) {
    auto m = v.items()[0].as_int(), n = v.items()[1].as_int();
    if (m > n) body.emplace_back(v, P(m - n, n));
    if (n > m) body.emplace_back(v, P(m, n - m));
  }
  auto g = [](const Value& v) { return std::gcd(v.items()[0].as_int(), v.items()[1].as_int()); };
  auto order = cat::subrel(cat::family_on(Rule::MaxInt, X), "same_gcd",
                           [&](const Value& a, const Value& b) { return g(a) == g(b); });
  return make_loop(X, order, Relation::identity(X), Relation::extensional(X, body));
}

} // namespace

TEST_CASE("make_loop accepts an order that is its own body") {
  auto X = ints(0, 3);
  auto gt = cat::intgreater(0, 3);
  auto loop = make_loop(X, gt, Relation::identity(X), gt.without_cert());
  CHECK(exit_condition(loop) == int_list({0}));
}

TEST_CASE("make_loop reports the first failed obligation") {
  auto X = ints(0, 3);
  auto gt = cat::intgreater(0, 3);
  try {
    make_loop(X, gt, Relation::identity(X), Relation::extensional(X, int_pairs({{2, 1}})));
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainMismatch);
    CHECK(e.witness() == "3");
  }
  CHECK(code_of([&] { make_loop(X, gt, Relation::identity(X), Relation::extensional(X, int_pairs({{1, 2}}))); }) ==
        ErrorCode::BodyNotSubsetOfOrder);
  auto cyc = Relation::extensional(X, int_pairs({{1, 2}, {2, 1}}));
  CHECK(code_of([&] { make_loop(X, cyc, Relation::identity(X), cyc); }) == ErrorCode::OrderNotNoetherian);
  auto empty = Space::explicit_values({});
  CHECK(code_of([&] { make_loop(empty, Relation::empty(empty), Relation::identity(empty), Relation::empty(empty)); }) ==
        ErrorCode::EmptySpace);
  auto wide = ints(0, 5);
  auto init = Relation::extensional(ints(0, 1), wide, int_pairs({{0, 5}}));
  CHECK(code_of([&] { make_loop(X, gt, init, gt); }) == ErrorCode::InitEscapesSpace);
}

TEST_CASE("exit conditions") {
  auto loop = gcd_loop(6);
  ValueList diagonal;
  for (int g = 1; g <= 6; ++g) diagonal.push_back(P(g, g));
  CHECK(exit_condition(loop) == diagonal);

  auto X = ints(0, 3);
  auto body = Relation::extensional(X, int_pairs({{1, 0}, {2, 0}, {3, 0}}));
  auto l2 = make_loop(X, cat::intgreater(0, 3), Relation::identity(X), body);
  CHECK(exit_condition(l2) == int_list({0}));

  auto search = ex::instantiate("seq_search", {.t = {5, 7, 9}, .x = 7});
  auto c = exit_condition(search.loop);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Value::interval(1, 1));
}

TEST_CASE("runs") {
  auto loop = gcd_loop(12);
  auto tr = run(loop, P(12, 8));
  CHECK(tr.states == ValueList{P(12, 8), P(4, 8), P(4, 4)});
  CHECK(tr.terminal() == P(4, 4));
  CHECK(run(loop, P(5, 5)).steps() == 0);
  CHECK(code_of([&] { run(loop, P(13, 1)); }) == ErrorCode::InputOutsideSpace);
  CHECK(code_of([&] { run(loop, P(12, 1), 3); }) == ErrorCode::FuelExhausted);

  auto part = ex::instantiate("partition", {.t = {6, 2, 8, 4}, .pivot = 5});
  auto in = ex::array_with({6, 2, 8, 4}, 5);
  auto pt = run(part.loop, in);
  CHECK(pt.terminal() == Value::pair(Value::seq({4, 2, 8, 6}), Value::interval(3, 2)));
  CHECK(ex::oracle_check(part, in, pt.terminal()));
}

TEST_CASE("run_all explores every resolution") {
  auto X = nodes({"a", "b", "c", "d"});
  auto body = Relation::extensional(X, node_pairs({{"a", "b"}, {"a", "c"}, {"c", "d"}}));
  auto order = cat::closure(body);
  auto loop = make_loop(X, order, Relation::identity(X), body);
  auto res = run_all(loop, N("a"));
  CHECK(res.terminals == ValueList{N("b"), N("d")});
  CHECK(res.max_steps == 2);
  CHECK(closure_terminals(loop, N("a")) == res.terminals);
  CHECK(limit_terminals(loop, N("a")) == res.terminals);
}

TEST_CASE("denotations agree on the gcd loop") {
  auto loop = gcd_loop(6);
  auto closure = denotation_closure(loop);
  auto lim = denotation_limit(loop);
  CHECK(closure.terminal == lim);
  CHECK(subset_of(closure.terminal, closure.full));
  for (const auto& a : loop.inputs().values()) {
    auto img = lim.image(a);
    REQUIRE(img.size() == 1);
    auto g = std::gcd(a.items()[0].as_int(), a.items()[1].as_int());
    CHECK(img[0] == P(g, g));
  }
}

TEST_CASE("init landing in the exit set gives the init image") {
  auto X = ints(0, 3);
  auto body = Relation::extensional(X, int_pairs({{3, 2}}));
  auto order = cat::intgreater(0, 3);
  auto init = Relation::extensional(ints(0, 0), X, int_pairs({{0, 1}}));
  auto loop = LoopDef::candidate({X, order, init, body, {}, {}});
  CHECK(closure_terminals(loop, I(0)) == int_list({1}));
}

TEST_CASE("sequential search terminal") {
  auto inst = ex::instantiate("seq_search", {.t = {5, 7, 9}, .x = 7});
  auto in = ex::array_with({5, 7, 9}, 7);
  CHECK(closure_terminals(inst.loop, in) == ValueList{Value::interval(1, 1)});
}

TEST_CASE("general search terminals are minima and exits") {
  auto inst = ex::instantiate("general_search_interval", {.t = {1, 3, 5, 7}, .x = 5});
  auto in = ex::array_with({1, 3, 5, 7}, 5);
  auto exits = exit_condition(inst.loop);
  auto mins = minima(inst.loop.order());
  for (const auto& t : limit_terminals(inst.loop, in)) {
    CHECK(std::binary_search(exits.begin(), exits.end(), t));
    CHECK(std::binary_search(mins.begin(), mins.end(), t));
  }
}

TEST_CASE("verify") {
  auto v = verify(gcd_loop(8));
  CHECK(v.pass());
  CHECK(v.inputs_sampled == 64);

  auto X = ints(0, 3);
  auto gt = cat::intgreater(0, 3);
  auto broken = LoopDef::candidate({X, gt, Relation::identity(X), Relation::extensional(X, int_pairs({{2, 1}})), {}, {}});
  auto bv = verify(broken);
  CHECK_FALSE(bv.pass());
  CHECK_FALSE(bv.result(Obligation::BodyIsSeed).pass);
  CHECK(bv.result(Obligation::BodyIsSeed).witness == "3");
  CHECK(bv.result(Obligation::OrderNoetherian).pass);

  auto wrong = LoopDef::candidate({X, gt, Relation::identity(X), gt, ex::oracle("gcd"), {}});
  CHECK_FALSE(verify(wrong, InputSample::of(int_list({2}))).result(Obligation::PostconditionAtMinima).pass);

  auto sampled = verify(gcd_loop(8), InputSample::random(10, 1));
  CHECK(sampled.inputs_sampled == 10);
  CHECK(verify(gcd_loop(8), InputSample::random(10, 1)).max_steps == sampled.max_steps);
}

TEST_CASE("variant relations") {
  auto loop = gcd_loop(10);
  auto v = variant_to_relation(cat::named_function("max"), loop.space());
  CHECK(subset_of(loop.body(), v));

  auto constant = cat::NamedFunction{"zero", [](const Value&) { return I(0); }};
  auto cv = variant_to_relation(constant, ints(0, 4));
  CHECK(cv.pairs().empty());
  CHECK(is_noetherian(cv).noetherian());

  auto gs = ex::instantiate("general_search_interval", {.t = {1, 2, 3, 4}, .x = 9});
  CHECK(subset_of(gs.loop.body(), variant_to_relation(cat::named_function("interval_width"), gs.loop.space())));

  auto negative = cat::NamedFunction{"neg", [](const Value& v) { return I(-v.as_int()); }};
  CHECK(code_of([&] { variant_to_relation(negative, ints(0, 2)); }) == ErrorCode::NegativeVariantValue);
  CHECK(code_of([&] { variant_to_relation(cat::value_map({{I(0), I(1)}}), ints(0, 2)); }) ==
        ErrorCode::NonTotalFunction);
}
