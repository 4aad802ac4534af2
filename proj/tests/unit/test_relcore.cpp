#include "support.hpp"

#include "noet/catalog.hpp"
#include "noet/error.hpp"

#include <doctest.h>

using namespace testing;
using namespace noet;

namespace {

Relation chain210() { return Relation::extensional(ints(0, 2), int_pairs({{2, 1}, {1, 0}})); }

} // namespace

TEST_CASE("image is a direct lookup") {
  auto r = chain210();
  CHECK(image(r, I(2)) == int_list({1}));
  CHECK(image(r, I(0)).empty());
  CHECK(image(catalog::intgreater(0, 3), I(3)) == int_list({0, 1, 2}));
  CHECK_THROWS_AS(image(r, I(5)), Error);
}

TEST_CASE("domain and range") {
  auto dr = domain_range(chain210());
  CHECK(dr.domain == int_list({1, 2}));
  CHECK(dr.range == int_list({0, 1}));

  auto empty = domain_range(Relation::empty(ints(0, 3)));
  CHECK(empty.domain.empty());
  CHECK(empty.range.empty());

  auto gt = domain_range(catalog::intgreater(0, 4));
  CHECK(gt.domain == int_list({1, 2, 3, 4}));
  CHECK(gt.range == int_list({0, 1, 2, 3}));
}

TEST_CASE("inverse swaps pairs and needs an extensional relation") {
  CHECK(inverse(chain210()).pairs() == int_pairs({{0, 1}, {1, 2}}));
  auto lazy = Relation::from_image(ints(0, 3), ints(0, 3), [](const Value& v) {
    return v.as_int() > 0 ? ValueList{I(v.as_int() - 1)} : ValueList{};
  });
  try {
    (void)inverse(lazy);
    FAIL("expected RequiresExtensional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RequiresExtensional);
  }
}

TEST_CASE("compose") {
  auto X = nodes({"a", "b", "c"});
  auto r = Relation::extensional(X, node_pairs({{"a", "b"}}));
  auto s = Relation::extensional(X, node_pairs({{"b", "c"}}));
  CHECK(compose(r, s).pairs() == node_pairs({{"a", "c"}}));

  auto back = Relation::extensional(X, node_pairs({{"b", "a"}}));
  CHECK(compose(r, back).pairs() == node_pairs({{"a", "a"}}));

  auto other = Relation::empty(ints(0, 1));
  CHECK_THROWS_AS(compose(r, other), Error);
}

TEST_CASE("restrict keeps pairs leaving C") {
  auto r = chain210();
  CHECK(restrict(int_list({1}), r).pairs() == int_pairs({{1, 0}}));
  CHECK(restrict(ValueList{}, r).pairs().empty());
}

TEST_CASE("powers follow the recurrence") {
  auto r = chain210();
  CHECK(power(r, 0) == Relation::identity(ints(0, 2)));
  CHECK(power(r, 2).pairs() == int_pairs({{2, 0}}));

  auto gt = catalog::intgreater(0, 5);
  auto p2 = power(gt, 2);
  std::vector<ValuePair> expected;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      if (a >= b + 2) expected.emplace_back(I(a), I(b));
  std::sort(expected.begin(), expected.end());
  CHECK(p2.pairs() == expected);
}

TEST_CASE("closures") {
  auto succ = catalog::successor(0, 5);
  CHECK(closures(succ).plus == catalog::intgreater(0, 5));

  auto empty = Relation::empty(ints(0, 3));
  auto c = closures(empty);
  CHECK(c.plus.pairs().empty());
  CHECK(c.star == Relation::identity(ints(0, 3)));

  auto X = nodes({"a", "b", "c"});
  auto r = Relation::extensional(X, node_pairs({{"a", "b"}, {"b", "c"}}));
  CHECK(closures(r).plus.pairs() == node_pairs({{"a", "b"}, {"a", "c"}, {"b", "c"}}));
}

TEST_CASE("closures agree with Warshall on random relations") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto m = random_matrix(rng, n, 0.3);
    auto X = ints(0, static_cast<std::int64_t>(n) - 1);
    auto c = closures(relation_of(X, m));
    CHECK(matrix_of(c.plus) == transitive_closure(m));
    auto star = transitive_closure(m);
    for (std::size_t k = 0; k < n; ++k) star.set(k, k);
    CHECK(matrix_of(c.star) == star);
  }
}

TEST_CASE("classify") {
  auto gt = classify(catalog::intgreater(0, 3));
  CHECK(gt.acyclic);
  CHECK(gt.irreflexive);
  CHECK(gt.transitive);
  CHECK(gt.asymmetric);
  CHECK(gt.order);
  CHECK_FALSE(gt.function);

  CHECK_FALSE(classify(Relation::extensional(ints(1, 2), int_pairs({{1, 2}, {2, 1}}))).acyclic);

  auto succ = classify(catalog::successor(0, 5));
  CHECK_FALSE(succ.order);
  CHECK_FALSE(succ.transitive);
  CHECK(succ.function);
}

TEST_CASE("intensional relations answer membership lazily") {
  auto down = Relation::from_image(Space::integers(), Space::integers(),
                                   [](const Value& v) { return ValueList{I(v.as_int() - 1)}; });
  CHECK(down.contains(I(-40), I(-41)));
  CHECK_FALSE(down.contains(I(3), I(1)));
  CHECK(down.in_domain(I(1000000)));
}

TEST_CASE("to_string renders pairs canonically") {
  CHECK(to_string(chain210()) == "{[1, 0], [2, 1]}");
}
