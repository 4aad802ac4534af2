#include "noet/noether.hpp"

#include "noet/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace noet {

std::string to_string(const Chain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (i) out += " → ";
    out += to_string(c.elements[i]);
  }
  return out;
}

const char* to_string(NoetherianStatus s) {
  switch (s) {
  case NoetherianStatus::Noetherian: return "noetherian";
  case NoetherianStatus::NotNoetherian: return "not_noetherian";
  case NoetherianStatus::Unknown: return "unknown_fuel_exhausted";
  }
  return "?";
}

const char* to_string(VerdictMethod m) {
  switch (m) {
  case VerdictMethod::Exhaustive: return "exhaustive";
  case VerdictMethod::Certificate: return "certificate";
  case VerdictMethod::Bounded: return "bounded";
  }
  return "?";
}

const char* to_string(LimitMode m) {
  return m == LimitMode::MaxDepth ? "maxdepth" : "minima";
}

namespace {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

Adjacency adjacency_of(const Relation& r) {
  const auto& vs = r.space().values();
  Adjacency adj(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (const auto& b : r.image(vs[i])) {
      auto j = r.space().index_of(b);
      if (!j) throw Error(ErrorCode::SpaceMismatch, "image leaves the relation's space", to_string(b));
      adj[i].push_back(static_cast<std::uint32_t>(*j));
    }
  return adj;
}

bool has_cycle(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint8_t> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    stack.emplace_back(static_cast<std::uint32_t>(root), 0);
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        auto w = adj[v][next++];
        if (color[w] == 1) return true;
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

// Shortest cycle overall; ties go to the canonically least start element.
std::vector<std::uint32_t> shortest_cycle(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> best;
  std::vector<std::int64_t> parent(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(v)};
    parent[v] = static_cast<std::int64_t>(v);
    std::int64_t closing = -1;
    while (!queue.empty() && closing < 0) {
      auto u = queue.front();
      queue.pop_front();
      for (auto w : adj[u]) {
        if (w == v) {
          closing = u;
          break;
        }
        if (parent[w] < 0) {
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing < 0) continue;
    std::vector<std::uint32_t> path;
    for (auto u = static_cast<std::uint32_t>(closing); u != v; u = static_cast<std::uint32_t>(parent[u]))
      path.push_back(u);
    path.push_back(static_cast<std::uint32_t>(v));
    std::reverse(path.begin(), path.end());
    path.push_back(static_cast<std::uint32_t>(v));
    if (best.empty() || path.size() < best.size()) best = std::move(path);
    if (best.size() == 2) break;
  }
  return best;
}

// Shortest path from `start` back to itself through `allowed` elements.
Chain shortest_cycle_through(const Relation& r, const Value& start,
                             const std::unordered_set<Value>& allowed) {
  std::unordered_map<Value, Value> parent;
  std::deque<Value> queue{start};
  parent.emplace(start, start);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (const auto& w : r.image(u)) {
      if (w == start) {
        Chain c;
        for (Value x = u; x != start; x = parent.at(x)) c.elements.push_back(x);
        c.elements.push_back(start);
        std::reverse(c.elements.begin(), c.elements.end());
        c.elements.push_back(start);
        return c;
      }
      if (allowed.count(w) && !parent.count(w)) {
        parent.emplace(w, u);
        queue.push_back(w);
      }
    }
  }
  return Chain{{start, start}};
}

NoetherianVerdict bounded_verdict(const Relation& r, std::size_t fuel, const ValueList& roots) {
  enum : std::uint8_t { OnStack = 1, Done = 2 };
  std::unordered_map<Value, std::uint8_t> state;
  struct Frame {
    Value v;
    ValueList succ;
    std::size_t next = 0;
  };

  NoetherianVerdict verdict;
  verdict.method = VerdictMethod::Bounded;
  for (const auto& root : roots) {
    if (state.count(root)) continue;
    std::vector<Frame> stack;
    stack.push_back({root, r.image(root)});
    state[root] = OnStack;
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next == top.succ.size()) {
        state[top.v] = Done;
        stack.pop_back();
        continue;
      }
      Value w = top.succ[top.next++];
      auto it = state.find(w);
      if (it != state.end() && it->second == OnStack) {
        std::unordered_set<Value> explored;
        for (const auto& [v, s] : state) explored.insert(v);
        verdict.status = NoetherianStatus::NotNoetherian;
        verdict.witness = shortest_cycle_through(r, w, explored);
        return verdict;
      }
      if (it != state.end()) continue;
      if (stack.size() - 1 >= fuel) {
        Chain c;
        for (const auto& f : stack) c.elements.push_back(f.v);
        verdict.status = NoetherianStatus::Unknown;
        verdict.witness = std::move(c);
        return verdict;
      }
      state[w] = OnStack;
      auto succ = r.image(w);
      stack.push_back({std::move(w), std::move(succ)});
    }
  }
  verdict.status = roots.empty() ? NoetherianStatus::Unknown : NoetherianStatus::Noetherian;
  return verdict;
}

// The region reachable from `a`, in post-order (successors before their
// predecessors). Throws NotNoetherian with a cycle witness if the region
// has a cycle.
struct Region {
  ValueList postorder;
  std::unordered_map<Value, ValueList> succ;
};

Region explore_acyclic(const Relation& r, const Value& a) {
  Region region;
  std::unordered_map<Value, std::uint8_t> state;
  struct Frame {
    Value v;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  region.succ.emplace(a, r.image(a));
  state[a] = 1;
  stack.push_back({a});
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto& succ = region.succ.at(top.v);
    if (top.next == succ.size()) {
      state[top.v] = 2;
      region.postorder.push_back(top.v);
      stack.pop_back();
      continue;
    }
    const Value& w = succ[top.next++];
    auto it = state.find(w);
    if (it != state.end()) {
      if (it->second == 1) {
        std::unordered_set<Value> explored;
        for (const auto& [v, s] : state) explored.insert(v);
        auto cycle = shortest_cycle_through(r, w, explored);
        throw Error(ErrorCode::NotNoetherian, "relation has a cycle reachable from " + to_string(a),
                    to_string(cycle));
      }
      continue;
    }
    state[w] = 1;
    region.succ.emplace(w, r.image(w));
    stack.push_back({w});
  }
  return region;
}

void collect_chains(const Relation& r, Chain& path, std::size_t max_len, std::vector<ChainEntry>& out) {
  auto succ = r.image(path.elements.back());
  ChainEnd end = succ.empty() ? ChainEnd::Maximal
                              : (path.length() >= max_len ? ChainEnd::Truncated : ChainEnd::Prefix);
  out.push_back({path, end});
  if (end != ChainEnd::Prefix) return;
  for (auto& w : succ) {
    path.elements.push_back(std::move(w));
    collect_chains(r, path, max_len, out);
    path.elements.pop_back();
  }
}

} // namespace

NoetherianVerdict is_noetherian(const Relation& r, std::size_t fuel, const ValueList& roots) {
  if (!r.homogeneous()) throw Error(ErrorCode::SpaceMismatch, "Noetherian check needs a relation on one space");
  if (!roots.empty() || !r.space().enumerable()) return bounded_verdict(r, fuel, roots);

  NoetherianVerdict verdict;
  verdict.method = VerdictMethod::Exhaustive;
  const auto adj = adjacency_of(r);
  if (!has_cycle(adj)) {
    verdict.status = NoetherianStatus::Noetherian;
    return verdict;
  }
  verdict.status = NoetherianStatus::NotNoetherian;
  Chain c;
  for (auto i : shortest_cycle(adj)) c.elements.push_back(r.space().values()[i]);
  verdict.witness = std::move(c);
  return verdict;
}

std::vector<ChainEntry> chains_from(const Relation& r, const Value& a, std::size_t max_len) {
  if (!r.space().contains(a))
    throw Error(ErrorCode::ValueOutsideSpace, to_string(a) + " is outside the relation's space", to_string(a));
  std::vector<ChainEntry> out;
  Chain path{{a}};
  collect_chains(r, path, max_len, out);
  return out;
}

Height height(const Relation& r, const Value& a) {
  auto region = explore_acyclic(r, a);
  std::unordered_map<Value, std::size_t> h;
  for (const auto& v : region.postorder) {
    std::size_t best = 0;
    for (const auto& w : region.succ.at(v)) best = std::max(best, h.at(w) + 1);
    h[v] = best;
  }
  return Height{h.at(a)};
}

ValueList minima(const Relation& r) {
  ValueList out;
  for (const auto& a : r.space().values())
    if (!r.in_domain(a)) out.push_back(a);
  return out;
}

ValueList limit_image(const Relation& r, const Value& a, LimitMode mode) {
  auto region = explore_acyclic(r, a);
  if (mode == LimitMode::ReachableMinima) {
    ValueList out;
    for (const auto& v : region.postorder)
      if (region.succ.at(v).empty()) out.push_back(v);
    normalize(out);
    return out;
  }
  ValueList level{a};
  while (true) {
    ValueList next;
    for (const auto& v : level) {
      const auto& s = region.succ.at(v);
      next.insert(next.end(), s.begin(), s.end());
    }
    if (next.empty()) return level;
    normalize(next);
    level = std::move(next);
  }
}

Relation limit(const Relation& r, LimitMode mode) {
  std::vector<ValuePair> pairs;
  for (const auto& a : r.space().values())
    for (auto& m : limit_image(r, a, mode)) pairs.emplace_back(a, std::move(m));
  return Relation::extensional(r.space(), std::move(pairs));
}

SeedCheck check_seed(const Relation& r, const Relation& s) {
  if (!(r.space() == s.space()) || !r.homogeneous() || !s.homogeneous())
    throw Error(ErrorCode::SpaceMismatch, "seed check needs two relations on the same space");
  SeedCheck out;
  const auto& values = r.space().values();
  for (const auto& a : values)
    for (const auto& b : r.image(a))
      if (!s.contains(a, b)) {
        out.seed = false;
        out.stray_pair = ValuePair{a, b};
        return out;
      }
  // Domain witnesses are reported from the top of the space down.
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    if (r.in_domain(*it) != s.in_domain(*it)) {
      out.seed = false;
      out.domain_witness = *it;
      return out;
    }
  return out;
}

bool is_seed(const Relation& r, const Relation& s) { return check_seed(r, s).seed; }

FinitaryResult is_finitary(const Relation& r, const Value& a, std::size_t fuel) {
  FinitaryResult out;
  std::set<Value> reached{a};
  ValueList level{a};
  std::set<ValueList> seen_after_stable;
  for (std::size_t step = 0; step < fuel; ++step) {
    ValueList next;
    for (const auto& v : level) {
      auto img = r.image(v);
      next.insert(next.end(), img.begin(), img.end());
    }
    normalize(next);
    if (next.empty()) {
      out.status = FinitaryResult::Status::Finitary;
      out.bound = step;
      return out;
    }
    bool grew = false;
    for (const auto& v : next) grew |= reached.insert(v).second;
    if (!grew && !out.bound) out.bound = step;
    if (out.bound && !seen_after_stable.insert(next).second) break;
    level = std::move(next);
  }
  if (out.bound) out.status = FinitaryResult::Status::Finitary;
  return out;
}

} // namespace noet
