#include "noet/audit.hpp"

#include "noet/catalog.hpp"
#include "noet/error.hpp"

#include <algorithm>

namespace noet::audit {

namespace {

using format::Json;

Space nodes(std::initializer_list<const char*> names) {
  ValueList v;
  for (const char* n : names) v.push_back(Value::node(n));
  return Space::explicit_values(v);
}

ValuePair edge(const char* a, const char* b) { return {Value::node(a), Value::node(b)}; }

Relation from_pairs(const Space& space, const std::vector<ValuePair>& pairs) {
  return Relation::extensional(space, pairs);
}

// r ; s is Noetherian. Fills the counterexample on failure.
bool compose_holds(const Relation& r, const Relation& s, Finding& f) {
  auto verdict = is_noetherian(compose(r, s));
  if (verdict.noetherian()) return true;
  if (!f.counterexample) f.counterexample = Counterexample{r.space(), r.pairs(), s.pairs(), verdict.witness, {}, {}, {}, {}};
  return false;
}

// Pointwise limit equality in the given modes.
bool limits_agree(const Relation& r, const Relation& s, std::initializer_list<LimitMode> modes, Finding& f) {
  for (auto mode : modes)
    for (const auto& a : r.space().values()) {
      auto lr = limit_image(r, a, mode);
      auto ls = limit_image(s, a, mode);
      if (lr != ls) {
        if (!f.counterexample)
          f.counterexample = Counterexample{r.space(), r.pairs(), s.pairs(), {}, a, mode, std::move(lr), std::move(ls)};
        return false;
      }
    }
  return true;
}

void settle(Finding& f) {
  f.status = f.counterexample ? Status::CounterexampleFound : Status::ValidatedOnSample;
}

Json chain_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& v : c.elements) out.push_back(format::to_json(v));
  return out;
}

Json list_json(const ValueList& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(format::to_json(v));
  return out;
}

ValueList list_from(const Json& j) {
  ValueList out;
  for (const auto& v : j) out.push_back(format::value_from_json(v));
  return out;
}

} // namespace

const char* to_string(Claim c) {
  switch (c) {
    case Claim::ComposeNoetherian: return "compose_noetherian";
    case Claim::LimitSubsetTheorem: return "limit_subset_theorem";
    case Claim::MaxdepthStarIdentity: return "maxdepth_star_identity";
  }
  return "?";
}

const char* to_string(Status s) {
  return s == Status::ValidatedOnSample ? "validated_on_sample" : "counterexample_found";
}

Sampler::Sampler(std::uint64_t seed) : rng_(seed) {}

std::size_t Sampler::below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

Space Sampler::space(std::size_t n) {
  ValueList v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Value::node(std::string(1, static_cast<char>('a' + i))));
  return Space::explicit_values(v);
}

Relation Sampler::noetherian(const Space& space) {
  // Shuffle the elements into a topological order, then keep forward edges.
  ValueList order = space.values();
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(i)]);
  const std::size_t density = 1 + below(4);  // edge probability density/5
  std::vector<ValuePair> pairs;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (below(5) < density) pairs.emplace_back(order[i], order[j]);
  return from_pairs(space, pairs);
}

Relation Sampler::seed_of(const Relation& s) {
  std::vector<ValuePair> pairs;
  for (const auto& a : s.space().values()) {
    auto img = s.image(a);
    if (img.empty()) continue;
    const std::size_t keep = img.size() == 1 ? 0 : below(img.size());  // guaranteed member
    for (std::size_t k = 0; k < img.size(); ++k)
      if (k == keep || below(2) == 0) pairs.emplace_back(a, img[k]);
  }
  return from_pairs(s.space(), pairs);
}

std::vector<Finding> run(std::uint64_t seed, std::size_t samples) {
  std::vector<Finding> out;
  {
    Finding f{Claim::ComposeNoetherian, "fixture", {}, {}, 1, seed};
    auto space = nodes({"a", "b"});
    compose_holds(from_pairs(space, {edge("a", "b")}), from_pairs(space, {edge("b", "a")}), f);
    settle(f);
    out.push_back(std::move(f));
  }
  {
    Finding f{Claim::LimitSubsetTheorem, "fixture", {}, {}, 1, seed};
    auto space = nodes({"a", "b", "e"});
    limits_agree(from_pairs(space, {edge("a", "b")}), from_pairs(space, {edge("a", "b"), edge("a", "e")}),
                 {LimitMode::ReachableMinima, LimitMode::MaxDepth}, f);
    settle(f);
    out.push_back(std::move(f));
  }

  Sampler rng(seed);
  auto sized = [&] { return rng.space(1 + rng.below(kMaxAuditSpace)); };

  Finding compose_f{Claim::ComposeNoetherian, "sampled", {}, {}, samples, seed};
  for (std::size_t i = 0; i < samples; ++i) {
    auto space = sized();
    auto r = rng.noetherian(space);
    auto s = rng.noetherian(space);
    compose_holds(r, s, compose_f);
  }
  settle(compose_f);

  Finding seed_f{Claim::LimitSubsetTheorem, "sampled", {}, {}, samples, seed};
  for (std::size_t i = 0; i < samples; ++i) {
    auto s = rng.noetherian(sized());
    auto r = rng.seed_of(s);
    limits_agree(r, s, {LimitMode::ReachableMinima, LimitMode::MaxDepth}, seed_f);
  }
  settle(seed_f);

  Finding plus_f{Claim::LimitSubsetTheorem, "s_is_plus_r", {}, {}, samples, seed};
  for (std::size_t i = 0; i < samples; ++i) {
    auto r = rng.noetherian(sized());
    limits_agree(r, closures(r).plus, {LimitMode::ReachableMinima}, plus_f);
  }
  settle(plus_f);

  // r* is reflexive, so its limit is read through the strict part r+.
  Finding star_f{Claim::MaxdepthStarIdentity, "sampled", {}, {}, samples, seed};
  for (std::size_t i = 0; i < samples; ++i) {
    auto r = rng.noetherian(sized());
    limits_agree(r, closures(r).plus, {LimitMode::MaxDepth}, star_f);
  }
  settle(star_f);

  for (auto* f : {&compose_f, &seed_f, &plus_f, &star_f}) out.push_back(std::move(*f));
  return out;
}

bool recheck(const Finding& f) {
  if (!f.counterexample) return f.status == Status::ValidatedOnSample;
  const auto& c = *f.counterexample;
  auto r = from_pairs(c.space, c.r);
  auto s = from_pairs(c.space, c.s);
  switch (f.claim) {
    case Claim::ComposeNoetherian: {
      auto composite = compose(r, s);
      if (is_noetherian(composite).noetherian() || !c.cycle) return false;
      const auto& e = c.cycle->elements;
      for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (!composite.contains(e[i], e[i + 1])) return false;
      return e.size() >= 2 && e.front() == e.back();
    }
    case Claim::LimitSubsetTheorem:
    case Claim::MaxdepthStarIdentity: {
      if (!c.at || !c.mode) return false;
      if (f.claim == Claim::LimitSubsetTheorem && !is_seed(r, s)) return false;
      if (f.claim == Claim::MaxdepthStarIdentity && !(s == closures(r).plus)) return false;
      auto lr = limit_image(r, *c.at, *c.mode);
      auto ls = limit_image(s, *c.at, *c.mode);
      return lr == c.image_r && ls == c.image_s && lr != ls;
    }
  }
  return false;
}

Json to_json(const Finding& f) {
  Json j{{"claim", to_string(f.claim)},
         {"label", f.label},
         {"status", to_string(f.status)},
         {"sample_size", f.sample_size},
         {"seed", f.seed}};
  if (f.counterexample) {
    const auto& c = *f.counterexample;
    Json cj{{"space", format::to_json(c.space)}, {"r", format::to_json(c.r)}, {"s", format::to_json(c.s)}};
    if (c.cycle) cj["cycle"] = chain_json(*c.cycle);
    if (c.at) {
      cj["at"] = format::to_json(*c.at);
      cj["mode"] = noet::to_string(*c.mode);
      cj["image_r"] = list_json(c.image_r);
      cj["image_s"] = list_json(c.image_s);
    }
    j["counterexample"] = cj;
  }
  return j;
}

Finding finding_from_json(const Json& j) {
  try {
    Finding f;
    const auto claim = j.at("claim").get<std::string>();
    bool known = false;
    for (auto c : {Claim::ComposeNoetherian, Claim::LimitSubsetTheorem, Claim::MaxdepthStarIdentity})
      if (claim == to_string(c)) {
        f.claim = c;
        known = true;
      }
    if (!known) throw Error(ErrorCode::MalformedInput, "unknown claim " + claim);
    f.label = j.at("label").get<std::string>();
    f.status = j.at("status").get<std::string>() == "counterexample_found" ? Status::CounterexampleFound
                                                                           : Status::ValidatedOnSample;
    f.sample_size = j.at("sample_size").get<std::size_t>();
    f.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("counterexample")) {
      const auto& cj = j.at("counterexample");
      Counterexample c{format::space_from_json(cj.at("space")), format::pairs_from_json(cj.at("r")),
                       format::pairs_from_json(cj.at("s")), {}, {}, {}, {}, {}};
      if (cj.contains("cycle")) c.cycle = Chain{list_from(cj.at("cycle"))};
      if (cj.contains("at")) {
        c.at = format::value_from_json(cj.at("at"));
        c.mode = cj.at("mode").get<std::string>() == "maxdepth" ? LimitMode::MaxDepth : LimitMode::ReachableMinima;
        c.image_r = list_from(cj.at("image_r"));
        c.image_s = list_from(cj.at("image_s"));
      }
      f.counterexample = std::move(c);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("malformed finding: ") + e.what());
  }
}

std::vector<std::pair<std::string, std::string>> artifacts(const Finding& f) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!f.counterexample) return out;
  const auto& c = *f.counterexample;
  const std::string stem = std::string(to_string(f.claim)) + "-" + f.label;
  auto doc = [&](const Relation& r) { return format::dump(format::to_json(format::extensional_doc(r))); };
  auto r = from_pairs(c.space, c.r);
  auto s = from_pairs(c.space, c.s);
  out.emplace_back(stem + "-r.json", doc(r));
  out.emplace_back(stem + "-s.json", doc(s));
  if (f.claim == Claim::ComposeNoetherian) out.emplace_back(stem + "-composite.json", doc(compose(r, s)));
  out.emplace_back(stem + "-finding.json", format::dump(to_json(f)));
  return out;
}

} // namespace noet::audit
