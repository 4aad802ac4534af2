#pragma once

// Helpers shared by the test binaries, including small independent oracles
// over boolean adjacency matrices. None of them call into the library's
// analysis code.

#include "noet/relation.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

using noet::Relation;
using noet::Space;
using noet::Value;
using noet::ValueList;
using noet::ValuePair;

inline Value I(std::int64_t i) { return Value::integer(i); }
inline Value N(const std::string& s) { return Value::node(s); }

inline Space ints(std::int64_t lo, std::int64_t hi) { return Space::int_range(lo, hi); }

inline Space nodes(std::initializer_list<const char*> names) {
  ValueList v;
  for (const char* n : names) v.push_back(N(n));
  return Space::explicit_values(v);
}

inline std::vector<ValuePair> int_pairs(std::initializer_list<std::pair<int, int>> ps) {
  std::vector<ValuePair> out;
  for (auto [a, b] : ps) out.emplace_back(I(a), I(b));
  return out;
}

inline std::vector<ValuePair> node_pairs(std::initializer_list<std::pair<const char*, const char*>> ps) {
  std::vector<ValuePair> out;
  for (auto [a, b] : ps) out.emplace_back(N(a), N(b));
  return out;
}

inline ValueList int_list(std::initializer_list<int> xs) {
  ValueList out;
  for (int x : xs) out.push_back(I(x));
  return out;
}

// Adjacency matrix over elements 0..n-1.
struct Matrix {
  std::size_t n = 0;
  std::vector<char> m;

  explicit Matrix(std::size_t size) : n(size), m(size * size, 0) {}
  bool at(std::size_t i, std::size_t j) const { return m[i * n + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { m[i * n + j] = v; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Matrix identity(std::size_t n) {
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i);
  return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k)
      if (a.at(i, k))
        for (std::size_t j = 0; j < a.n; ++j)
          if (b.at(k, j)) out.set(i, j);
  return out;
}

// Kahn: repeatedly peel off elements with no remaining successors.
inline bool acyclic(const Matrix& a) {
  std::vector<std::size_t> out_degree(a.n, 0);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) out_degree[i] += a.at(i, j);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < a.n; ++i)
    if (out_degree[i] == 0) ready.push_back(i);
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto j = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t i = 0; i < a.n; ++i)
      if (a.at(i, j) && --out_degree[i] == 0) ready.push_back(i);
  }
  return removed == a.n;
}

// Warshall.
inline Matrix transitive_closure(Matrix a) {
  for (std::size_t k = 0; k < a.n; ++k)
    for (std::size_t i = 0; i < a.n; ++i)
      if (a.at(i, k))
        for (std::size_t j = 0; j < a.n; ++j)
          if (a.at(k, j)) a.set(i, j);
  return a;
}

inline Matrix power(const Matrix& a, std::size_t k) {
  Matrix out = identity(a.n);
  for (std::size_t i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

inline bool has_successor(const Matrix& a, std::size_t i) {
  for (std::size_t j = 0; j < a.n; ++j)
    if (a.at(i, j)) return true;
  return false;
}

// Longest path length from i, for acyclic a, by taking powers until empty.
inline std::size_t height(const Matrix& a, std::size_t i) {
  std::size_t h = 0;
  Matrix p = a;
  for (std::size_t k = 1; k <= a.n; ++k) {
    bool any = false;
    for (std::size_t j = 0; j < a.n; ++j) any = any || p.at(i, j);
    if (!any) break;
    h = k;
    p = multiply(p, a);
  }
  return h;
}

// r^M(i)(i), the literal power reading of the limit.
inline std::vector<std::size_t> limit_maxdepth(const Matrix& a, std::size_t i) {
  Matrix p = power(a, height(a, i));
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.n; ++j)
    if (p.at(i, j)) out.push_back(j);
  return out;
}

// Every minimum reachable from i in zero or more steps.
inline std::vector<std::size_t> limit_minima(const Matrix& a, std::size_t i) {
  Matrix reach = transitive_closure(a);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.n; ++j)
    if ((j == i || reach.at(i, j)) && !has_successor(a, j)) out.push_back(j);
  return out;
}

// Matrix of a relation on an enumerable space, in the space's order.
inline Matrix matrix_of(const Relation& r) {
  const auto& vs = r.space().values();
  Matrix out(vs.size());
  for (const auto& [a, b] : r.pairs()) out.set(*r.space().index_of(a), *r.space().index_of(b));
  return out;
}

inline Relation relation_of(const Space& space, const Matrix& a) {
  const auto& vs = space.values();
  std::vector<ValuePair> pairs;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (a.at(i, j)) pairs.emplace_back(vs[i], vs[j]);
  return Relation::extensional(space, pairs);
}

inline ValueList values_at(const Space& space, const std::vector<std::size_t>& idx) {
  ValueList out;
  for (auto i : idx) out.push_back(space.values()[i]);
  return out;
}

// Uniform random relation on n elements, each pair kept with probability p.
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution keep(p);
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) out.set(i, j);
  return out;
}

// Random DAG: forward edges of a random permutation.
inline Matrix random_dag(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(p);
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (keep(rng)) out.set(order[i], order[j]);
  return out;
}

} // namespace testing
