#include "support.hpp"

#include "noet/catalog.hpp"
#include "noet/error.hpp"
#include "noet/noether.hpp"

#include <doctest.h>

using namespace testing;
using namespace noet;

namespace {

Relation abcd() {
  return Relation::extensional(nodes({"a", "b", "c", "d"}), node_pairs({{"a", "b"}, {"a", "c"}, {"c", "d"}}));
}

Relation down_on_integers() {
  return Relation::from_image(Space::integers(), Space::integers(),
                              [](const Value& v) { return ValueList{I(v.as_int() - 1)}; });
}

} // namespace

TEST_CASE("is_noetherian on small relations") {
  CHECK(is_noetherian(catalog::intgreater(0, 5)).noetherian());

  auto v = is_noetherian(Relation::extensional(ints(1, 2), int_pairs({{1, 2}, {2, 1}})));
  CHECK(v.status == NoetherianStatus::NotNoetherian);
  REQUIRE(v.witness);
  CHECK(v.witness->elements == int_list({1, 2, 1}));
  CHECK(to_string(*v.witness) == "1 → 2 → 1");
}

TEST_CASE("cycle witnesses are shortest") {
  // 1 -> 2 -> 3 -> 4 -> 1 plus a self-loop at 3.
  auto r = Relation::extensional(ints(1, 4), int_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 3}}));
  auto v = is_noetherian(r);
  REQUIRE(v.witness);
  CHECK(v.witness->length() == 1);
}

TEST_CASE("descending forever on the integers exhausts the fuel") {
  auto v = is_noetherian(down_on_integers(), 1000, int_list({0}));
  CHECK(v.status == NoetherianStatus::Unknown);
  REQUIRE(v.witness);
  CHECK(v.witness->length() == 1000);
}

TEST_CASE("is_noetherian matches Kahn on every relation over three elements") {
  auto X = ints(0, 2);
  for (unsigned bits = 0; bits < 512; ++bits) {
    Matrix m(3);
    for (unsigned k = 0; k < 9; ++k)
      if (bits & (1u << k)) m.set(k / 3, k % 3);
    CHECK(is_noetherian(relation_of(X, m)).noetherian() == acyclic(m));
  }
}

TEST_CASE("chains_from unfolds every chain") {
  auto chains = chains_from(abcd(), N("a"), 10);
  std::vector<ValueList> seen;
  for (const auto& c : chains) seen.push_back(c.chain.elements);
  std::vector<ValueList> expected{{N("a")}, {N("a"), N("b")}, {N("a"), N("c")}, {N("a"), N("c"), N("d")}};
  std::sort(seen.begin(), seen.end());
  std::sort(expected.begin(), expected.end());
  CHECK(seen == expected);

  auto at_min = chains_from(abcd(), N("d"), 10);
  REQUIRE(at_min.size() == 1);
  CHECK(at_min[0].chain.length() == 0);
  CHECK(at_min[0].end == ChainEnd::Maximal);

  auto gt = chains_from(catalog::intgreater(0, 3), I(3), 10);
  CHECK(gt.size() == 8);
  bool full = false;
  for (const auto& c : gt) full = full || c.chain.elements == int_list({3, 2, 1, 0});
  CHECK(full);
}

TEST_CASE("height") {
  CHECK(height(catalog::intgreater(0, 9), I(7)).value == 7);
  CHECK(height(abcd(), N("d")).value == 0);
  CHECK(height(abcd(), N("a")).value == 2);
  auto cyc = Relation::extensional(ints(1, 2), int_pairs({{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(height(cyc, I(1)), Error);
}

TEST_CASE("minima") {
  CHECK(minima(catalog::intgreater(0, 5)) == int_list({0}));
  CHECK(minima(Relation::empty(ints(0, 3))) == int_list({0, 1, 2, 3}));
  CHECK(minima(abcd()) == ValueList{N("b"), N("d")});
}

TEST_CASE("limits of small relations") {
  auto succ = Relation::extensional(ints(0, 2), int_pairs({{1, 0}, {2, 1}}));
  for (auto mode : {LimitMode::MaxDepth, LimitMode::ReachableMinima})
    CHECK(limit(succ, mode).pairs() == int_pairs({{0, 0}, {1, 0}, {2, 0}}));

  auto empty = Relation::empty(ints(0, 3));
  for (auto mode : {LimitMode::MaxDepth, LimitMode::ReachableMinima})
    CHECK(limit(empty, mode) == Relation::identity(ints(0, 3)));

  // The modes part ways when chains of different lengths end at different minima.
  CHECK(limit_image(abcd(), N("a"), LimitMode::MaxDepth) == ValueList{N("d")});
  CHECK(limit_image(abcd(), N("a"), LimitMode::ReachableMinima) == ValueList{N("b"), N("d")});
}

TEST_CASE("limits agree with the power oracle on random DAGs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto m = random_dag(rng, n, 0.4);
    auto X = ints(0, static_cast<std::int64_t>(n) - 1);
    auto r = relation_of(X, m);
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(height(r, X.values()[a]).value == testing::height(m, a));
      CHECK(limit_image(r, X.values()[a], LimitMode::MaxDepth) == values_at(X, limit_maxdepth(m, a)));
      CHECK(limit_image(r, X.values()[a], LimitMode::ReachableMinima) == values_at(X, limit_minima(m, a)));
    }
  }
}

TEST_CASE("limit properties on random DAGs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto X = ints(0, static_cast<std::int64_t>(n) - 1);
    auto r = relation_of(X, random_dag(rng, n, 0.5));
    auto c = closures(r);
    auto mins = minima(r);
    for (auto mode : {LimitMode::MaxDepth, LimitMode::ReachableMinima}) {
      auto l = limit(r, mode);
      CHECK(subset_of(l, c.star));
      for (const auto& [a, b] : l.pairs()) CHECK(std::binary_search(mins.begin(), mins.end(), b));
    }
    CHECK(limit(c.plus, LimitMode::ReachableMinima) == limit(r, LimitMode::ReachableMinima));
    if (classify(r).function) CHECK(limit(r, LimitMode::MaxDepth) == limit(r, LimitMode::ReachableMinima));
  }
}

TEST_CASE("seeds") {
  CHECK(is_seed(catalog::successor(0, 5), catalog::intgreater(0, 5).without_cert()));
  auto r = abcd();
  CHECK(is_seed(r, r));

  auto X = nodes({"a", "b", "e"});
  auto small = Relation::extensional(X, node_pairs({{"a", "b"}}));
  auto big = Relation::extensional(X, node_pairs({{"a", "b"}, {"a", "e"}}));
  CHECK(is_seed(small, big));
  CHECK(limit(small, LimitMode::ReachableMinima) != limit(big, LimitMode::ReachableMinima));
  CHECK(minima(small) == minima(big));

  auto gt = catalog::intgreater(0, 3);
  auto c = check_seed(Relation::extensional(ints(0, 3), int_pairs({{2, 1}})), gt);
  CHECK_FALSE(c.seed);
  REQUIRE(c.domain_witness);
  CHECK(*c.domain_witness == I(3));

  auto stray = check_seed(Relation::extensional(ints(0, 3), int_pairs({{1, 2}})), gt);
  REQUIRE(stray.stray_pair);
  CHECK(stray.stray_pair->first == I(1));
}

TEST_CASE("finitary") {
  auto f = is_finitary(catalog::intgreater(0, 8), I(5));
  CHECK(f.finitary());
  CHECK(f.bound == std::optional<std::size_t>(5));

  auto at_min = is_finitary(catalog::intgreater(0, 8), I(0));
  CHECK(at_min.finitary());
  CHECK(at_min.bound == std::optional<std::size_t>(0));

  CHECK_FALSE(is_finitary(down_on_integers(), I(0), 100).finitary());
}
