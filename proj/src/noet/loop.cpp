#include "noet/loop.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace noet {

namespace {

Relation adapt_order(const Relation& order, const Space& space) {
  if (order.space() == space) return order;
  if (!space.enumerable()) return order;
  for (const auto& v : space.values())
    if (!order.space().contains(v)) return order;
  return catalog::restrict_to(order, space);
}

std::string mapsto(const Value& a, const Value& b) { return to_string(a) + " ↦ " + to_string(b); }

const Value& choose(const ChoicePolicy& policy, const Value& state, const ValueList& succ) {
  if (policy) {
    if (auto pick = policy(state, succ)) {
      auto it = std::lower_bound(succ.begin(), succ.end(), *pick);
      if (it != succ.end() && *it == *pick) return *it;
    }
  }
  return succ.front();
}

// C' : b, kept lazy so it costs nothing until a state is visited.
Relation continuation_body(const LoopDef& loop) {
  const Relation body = loop.body();
  return Relation::from_image(
      body.source(), body.target(),
      [body](const Value& v) { return body.in_domain(v) ? body.image(v) : ValueList{}; },
      [body](const Value& v) { return body.in_domain(v); });
}

ValueList star_image(const Relation& r, const Value& a) {
  std::set<Value> reached{a};
  ValueList level{a};
  while (!level.empty()) {
    ValueList next;
    for (const auto& v : level) {
      auto img = r.image(v);
      next.insert(next.end(), img.begin(), img.end());
    }
    normalize(next);
    bool grew = false;
    for (const auto& v : next) grew |= reached.insert(v).second;
    if (!grew) break;
    level = std::move(next);
  }
  return {reached.begin(), reached.end()};
}

ValueList init_image(const LoopDef& loop, const Value& input) {
  if (!loop.inputs().contains(input))
    throw Error(ErrorCode::InputOutsideSpace, "input is not in the input space", to_string(input));
  return loop.init().image(input);
}

ValueList sample_inputs(const Space& inputs, const InputSample& sample) {
  switch (sample.mode) {
    case InputSample::Mode::All:
      return inputs.values();
    case InputSample::Mode::Listed:
      return sample.listed;
    case InputSample::Mode::Random: {
      const auto& all = inputs.values();
      if (sample.count >= all.size()) return all;
      std::mt19937_64 rng(sample.seed);
      std::set<std::size_t> picked;
      while (picked.size() < sample.count) picked.insert(rng() % all.size());
      ValueList out;
      for (auto i : picked) out.push_back(all[i]);
      return out;
    }
  }
  return {};
}

} // namespace

LoopDef LoopDef::candidate(LoopParts parts) {
  parts.order = adapt_order(parts.order, parts.space);
  return LoopDef(std::move(parts));
}

LoopDef make_loop(LoopParts parts) {
  if (parts.space.empty()) throw Error(ErrorCode::EmptySpace, "the state space is empty");
  parts.order = adapt_order(parts.order, parts.space);
  if (!(parts.order.space() == parts.space) || !parts.order.homogeneous())
    throw Error(ErrorCode::SpaceMismatch, "the order is not a relation on the state space");
  if (!(parts.body.space() == parts.space) || !parts.body.homogeneous())
    throw Error(ErrorCode::SpaceMismatch, "the body is not a relation on the state space");

  const Space& inputs = parts.init.source();
  if (inputs.enumerable()) {
    for (const auto& i : inputs.values())
      for (const auto& x : parts.init.image(i))
        if (!parts.space.contains(x))
          throw Error(ErrorCode::InitEscapesSpace, "init leaves the state space", mapsto(i, x));
  } else if (!(parts.init.target() == parts.space)) {
    throw Error(ErrorCode::SpaceMismatch, "init must target the state space");
  }
  if (!(parts.init.target() == parts.space)) {
    const Relation init = parts.init;
    parts.init = Relation::from_image(inputs, parts.space,
                                      [init](const Value& i) { return init.image(i); });
  }

  auto cert = catalog::certify(parts.order);
  if (!cert.verdict.noetherian())
    throw Error(ErrorCode::OrderNotNoetherian, "the order is not Noetherian",
                cert.verdict.witness ? to_string(*cert.verdict.witness) : std::string{});

  auto seed = check_seed(parts.body, parts.order);
  if (seed.stray_pair)
    throw Error(ErrorCode::BodyNotSubsetOfOrder, "the body has a step outside the order",
                mapsto(seed.stray_pair->first, seed.stray_pair->second));
  if (seed.domain_witness)
    throw Error(ErrorCode::DomainMismatch, "body and order have different domains",
                to_string(*seed.domain_witness));
  return LoopDef::candidate(std::move(parts));
}

LoopDef make_loop(Space space, Relation order, Relation init, Relation body,
                  std::optional<Postcondition> postcondition) {
  return make_loop(LoopParts{std::move(space), std::move(order), std::move(init), std::move(body),
                             std::move(postcondition), {}});
}

bool in_exit_condition(const LoopDef& loop, const Value& state) {
  return loop.space().contains(state) && !loop.body().in_domain(state);
}

ValueList exit_condition(const LoopDef& loop) {
  ValueList out;
  for (const auto& x : loop.space().values())
    if (!loop.body().in_domain(x)) out.push_back(x);
  return out;
}

ExecTrace run(const LoopDef& loop, const Value& input, std::size_t fuel) {
  auto starts = init_image(loop, input);
  if (starts.empty())
    throw Error(ErrorCode::InputOutsideSpace, "init has no state for this input", to_string(input));
  ExecTrace trace{input, {choose(loop.policy(), input, starts)}};
  for (;;) {
    auto succ = loop.body().image(trace.states.back());
    if (succ.empty()) return trace;
    if (trace.steps() >= fuel)
      throw Error(ErrorCode::FuelExhausted, "run did not terminate within the fuel",
                  to_string(Chain{trace.states}));
    trace.states.push_back(choose(loop.policy(), trace.states.back(), succ));
  }
}

RunAllResult run_all(const LoopDef& loop, const Value& input, std::size_t fuel) {
  struct Info {
    bool done = false;
    ValueList terminals;
    std::size_t depth = 0;
  };
  struct Frame {
    Value state;
    ValueList succ;
    std::size_t next = 0;
  };

  RunAllResult out{input, {}, 0, 0};
  std::unordered_map<Value, Info> info;
  const Relation& body = loop.body();

  for (const auto& start : init_image(loop, input)) {
    if (info.count(start)) continue;
    std::vector<Frame> stack;
    auto push = [&](const Value& v) {
      info[v];
      stack.push_back({v, body.image(v)});
      if (stack.size() > fuel + 1) {
        ValueList path;
        for (const auto& f : stack) path.push_back(f.state);
        throw Error(ErrorCode::FuelExhausted, "a run exceeds the fuel", to_string(Chain{path}));
      }
    };
    push(start);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < top.succ.size()) {
        const Value child = top.succ[top.next++];
        auto it = info.find(child);
        if (it == info.end()) {
          push(child);
        } else if (!it->second.done) {
          ValueList cycle;
          auto from = std::find_if(stack.begin(), stack.end(),
                                   [&](const Frame& f) { return f.state == child; });
          for (; from != stack.end(); ++from) cycle.push_back(from->state);
          cycle.push_back(child);
          throw Error(ErrorCode::FuelExhausted, "the body cycles, so no fuel suffices",
                      to_string(Chain{cycle}));
        }
        continue;
      }
      Info& me = info[top.state];
      if (top.succ.empty()) {
        me.terminals = {top.state};
      } else {
        for (const auto& c : top.succ) {
          const Info& ci = info[c];
          me.terminals.insert(me.terminals.end(), ci.terminals.begin(), ci.terminals.end());
          me.depth = std::max(me.depth, ci.depth + 1);
        }
        normalize(me.terminals);
        if (me.depth > fuel)
          throw Error(ErrorCode::FuelExhausted, "a run exceeds the fuel", to_string(top.state));
      }
      me.done = true;
      stack.pop_back();
    }
    const Info& si = info[start];
    out.terminals.insert(out.terminals.end(), si.terminals.begin(), si.terminals.end());
    out.max_steps = std::max(out.max_steps, si.depth);
  }
  normalize(out.terminals);
  out.states_visited = info.size();
  return out;
}

ValueList closure_image(const LoopDef& loop, const Value& input) {
  const Relation cont = continuation_body(loop);
  ValueList out;
  for (const auto& s : init_image(loop, input)) {
    auto img = star_image(cont, s);
    out.insert(out.end(), img.begin(), img.end());
  }
  normalize(out);
  return out;
}

ValueList closure_terminals(const LoopDef& loop, const Value& input) {
  ValueList out;
  for (const auto& x : closure_image(loop, input))
    if (in_exit_condition(loop, x)) out.push_back(x);
  return out;
}

Denotation denotation_closure(const LoopDef& loop) {
  std::vector<ValuePair> full, terminal;
  for (const auto& i : loop.inputs().values())
    for (const auto& x : closure_image(loop, i)) {
      full.emplace_back(i, x);
      if (in_exit_condition(loop, x)) terminal.emplace_back(i, x);
    }
  return {Relation::extensional(loop.inputs(), loop.space(), std::move(full)),
          Relation::extensional(loop.inputs(), loop.space(), std::move(terminal))};
}

ValueList limit_terminals(const LoopDef& loop, const Value& input) {
  ValueList out;
  for (const auto& s : init_image(loop, input)) {
    auto img = limit_image(loop.body(), s, LimitMode::ReachableMinima);
    out.insert(out.end(), img.begin(), img.end());
  }
  normalize(out);
  return out;
}

Relation denotation_limit(const LoopDef& loop) {
  std::vector<ValuePair> pairs;
  for (const auto& i : loop.inputs().values())
    for (const auto& x : limit_terminals(loop, i)) pairs.emplace_back(i, x);
  return Relation::extensional(loop.inputs(), loop.space(), std::move(pairs));
}

const char* to_string(Obligation o) {
  switch (o) {
    case Obligation::SpaceNonempty: return "space_nonempty";
    case Obligation::InitRange: return "init_range";
    case Obligation::OrderNoetherian: return "order_noetherian";
    case Obligation::BodyIsSeed: return "body_is_seed";
    case Obligation::ExitNonempty: return "exit_nonempty";
    case Obligation::PostconditionAtMinima: return "postcondition_at_minima";
    case Obligation::DenotationAgreement: return "denotation_agreement";
  }
  return "?";
}

bool VerificationReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

const ObligationResult& VerificationReport::result(Obligation o) const {
  for (const auto& r : results)
    if (r.id == o) return r;
  throw Error(ErrorCode::MalformedInput, std::string("no result for ") + to_string(o));
}

VerificationReport verify(const LoopDef& loop, const InputSample& sample, std::size_t fuel) {
  VerificationReport rep;
  auto check = [&](Obligation id, auto&& body) {
    ObligationResult res;
    res.id = id;
    try {
      body(res);
    } catch (const Error& e) {
      res.pass = false;
      res.detail = e.what();
      if (res.witness.empty()) res.witness = e.witness();
    }
    rep.results.push_back(std::move(res));
  };
  const Space& X = loop.space();

  check(Obligation::SpaceNonempty, [&](ObligationResult& r) {
    r.pass = !X.empty();
    r.detail = std::to_string(X.size()) + " states";
  });

  const ValueList inputs = sample_inputs(loop.inputs(), sample);
  rep.inputs_sampled = inputs.size();

  check(Obligation::InitRange, [&](ObligationResult& r) {
    for (const auto& i : inputs)
      for (const auto& x : loop.init().image(i))
        if (!X.contains(x)) {
          r.pass = false;
          r.witness = mapsto(i, x);
          return;
        }
  });

  check(Obligation::OrderNoetherian, [&](ObligationResult& r) {
    if (!(loop.order().space() == X) || !loop.order().homogeneous()) {
      r.pass = false;
      r.detail = "the order is not a relation on the state space";
      return;
    }
    auto c = catalog::certify(loop.order(), fuel);
    r.pass = c.verdict.noetherian();
    r.detail = loop.order().cert() ? loop.order().cert()->describe() : to_string(c.verdict.method);
    if (c.verdict.witness) r.witness = to_string(*c.verdict.witness);
  });

  check(Obligation::BodyIsSeed, [&](ObligationResult& r) {
    auto s = check_seed(loop.body(), loop.order());
    r.pass = s.seed;
    if (s.stray_pair) {
      r.witness = mapsto(s.stray_pair->first, s.stray_pair->second);
      r.detail = "step outside the order";
    } else if (s.domain_witness) {
      r.witness = to_string(*s.domain_witness);
      r.detail = "in the domain of exactly one of body and order";
    }
  });

  check(Obligation::ExitNonempty, [&](ObligationResult& r) {
    auto c = exit_condition(loop);
    r.pass = !c.empty();
    r.detail = std::to_string(c.size()) + (c.size() == 1 ? " exit state" : " exit states");
  });

  std::map<Value, ValueList> terminals;
  check(Obligation::PostconditionAtMinima, [&](ObligationResult& r) {
    const auto& post = loop.postcondition();
    r.detail = post ? post->id : "no postcondition; minimality only";
    for (const auto& i : inputs) {
      auto res = run_all(loop, i, fuel);
      rep.max_steps = std::max(rep.max_steps, res.max_steps);
      for (const auto& t : res.terminals) {
        bool minimal = !loop.order().in_domain(t);
        if (!minimal || (post && !post->holds(i, t))) {
          r.pass = false;
          r.witness = mapsto(i, t);
          if (!minimal) r.detail = "terminal is not a minimum of the order";
          return;
        }
      }
      terminals.emplace(i, std::move(res.terminals));
    }
  });

  check(Obligation::DenotationAgreement, [&](ObligationResult& r) {
    for (const auto& i : inputs) {
      auto it = terminals.find(i);
      ValueList ran = it != terminals.end() ? it->second : run_all(loop, i, fuel).terminals;
      auto closed = closure_terminals(loop, i);
      auto lim = limit_terminals(loop, i);
      if (ran != closed || closed != lim) {
        r.pass = false;
        r.witness = to_string(i);
        r.detail = "run " + to_string(ran) + ", closure " + to_string(closed) + ", limit " +
                   to_string(lim);
        return;
      }
    }
  });
  return rep;
}

Relation variant_to_relation(const catalog::NamedFunction& f, const Space& space) {
  std::int64_t top = 0;
  for (const auto& v : space.values()) {
    Value y = f.apply(v);
    if (y.kind() != Value::Kind::Int)
      throw Error(ErrorCode::MalformedExpr, "a variant must map to integers", mapsto(v, y));
    if (y.as_int() < 0)
      throw Error(ErrorCode::NegativeVariantValue, "variant is negative", mapsto(v, y));
    top = std::max(top, y.as_int());
  }
  return catalog::induced(space, f, catalog::intgreater(0, top));
}

} // namespace noet
