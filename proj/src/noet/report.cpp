#include "noet/report.hpp"

#include "noet/catalog.hpp"
#include "noet/examples.hpp"

#include <regex>
#include <sstream>

namespace noet::report {

namespace {

using format::Json;

Json list_json(const ValueList& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(format::to_json(v));
  return out;
}

Json pair_json(const Value& a, const Value& b) { return Json::array({format::to_json(a), format::to_json(b)}); }

std::string chain_text(const ValueList& states) { return to_string(Chain{states}); }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

} // namespace

Report check(const Relation& r, std::size_t fuel) {
  auto c = catalog::certify(r, fuel);
  const auto& v = c.verdict;
  Report rep;
  rep.passed = v.noetherian();
  rep.json = {{"command", "check"}, {"status", to_string(v.status)}, {"method", to_string(v.method)},
              {"discrepancy", c.discrepancy}};
  if (r.cert()) {
    rep.json["certificate"] = r.cert()->describe();
    rep.json["trust"] = r.cert()->trust == Trust::Sound ? "sound" : "claimed";
  }
  if (r.space().enumerable()) rep.json["space_size"] = r.space().size();
  if (v.witness) rep.json["witness"] = list_json(v.witness->elements);

  std::ostringstream out;
  switch (v.status) {
    case NoetherianStatus::Noetherian:
      out << "Noetherian";
      if (v.method == VerdictMethod::Certificate) out << " (certificate " << r.cert()->describe() << ")";
      else if (v.method == VerdictMethod::Exhaustive) out << " (exhaustive check over " << r.space().size() << " elements)";
      else out << " (bounded exploration)";
      break;
    case NoetherianStatus::NotNoetherian:
      out << "not Noetherian, cycle: " << to_string(*v.witness);
      break;
    case NoetherianStatus::Unknown:
      out << "unknown: fuel of " << fuel << " steps exhausted";
      if (v.witness) out << ", chain: " << to_string(*v.witness);
      break;
  }
  out << "\n";
  if (c.discrepancy) out << "claimed certificate " << r.cert()->describe() << " is refuted by the finite check\n";
  rep.text = out.str();
  return rep;
}

Report limit(const Relation& r, const Value& from, LimitMode mode) {
  auto image = limit_image(r, from, mode);
  Report rep;
  rep.json = {{"command", "limit"}, {"from", format::to_json(from)}, {"mode", to_string(mode)}, {"image", list_json(image)}};
  rep.text = to_string(image) + "\n";
  return rep;
}

Report height(const Relation& r, const Value& from) {
  auto h = noet::height(r, from);
  Report rep;
  rep.json = {{"command", "height"}, {"from", format::to_json(from)}, {"height", h.value}};
  rep.text = std::to_string(h.value) + "\n";
  return rep;
}

Report seed(const Relation& r, const Relation& s) {
  auto c = check_seed(r, s);
  Report rep;
  rep.passed = c.seed;
  rep.json = {{"command", "seed"}, {"seed", c.seed}};
  if (c.stray_pair) {
    rep.json["stray_pair"] = pair_json(c.stray_pair->first, c.stray_pair->second);
    rep.text = "not a seed: [" + to_string(c.stray_pair->first) + ", " + to_string(c.stray_pair->second) +
               "] is in r but not in s\n";
  } else if (c.domain_witness) {
    rep.json["domain_witness"] = format::to_json(*c.domain_witness);
    rep.text = "not a seed: " + to_string(*c.domain_witness) + " is in the domain of only one of r and s\n";
  } else {
    rep.text = "seed: r is contained in s and has the same domain\n";
  }
  return rep;
}

Report run(const LoopDef& loop, const Value& input, std::size_t fuel, bool all, bool trace) {
  Report rep;
  const auto& post = loop.postcondition();
  std::ostringstream out;
  ValueList terminals;
  if (all) {
    auto res = run_all(loop, input, fuel);
    terminals = res.terminals;
    rep.json = {{"command", "run"}, {"mode", "all"}, {"input", format::to_json(input)},
                {"terminals", list_json(res.terminals)}, {"max_steps", res.max_steps},
                {"states_visited", res.states_visited}};
    out << "terminals " << to_string(res.terminals) << " (longest run " << res.max_steps << " steps, "
        << res.states_visited << " states)\n";
  } else {
    auto tr = noet::run(loop, input, fuel);
    terminals = {tr.terminal()};
    rep.json = {{"command", "run"}, {"mode", "single"}, {"input", format::to_json(input)},
                {"terminal", format::to_json(tr.terminal())}, {"steps", tr.steps()}};
    if (trace) {
      rep.json["trace"] = list_json(tr.states);
      out << chain_text(tr.states) << "\n";
    }
    out << "terminal " << to_string(tr.terminal()) << " after " << tr.steps() << " steps\n";
  }
  if (post) {
    bool holds = true;
    for (const auto& t : terminals) holds = holds && post->holds(input, t);
    rep.passed = holds;
    rep.json["postcondition"] = {{"oracle", post->id}, {"holds", holds}};
    out << "postcondition " << post->id << (holds ? " holds\n" : " FAILS\n");
  }
  rep.text = out.str();
  return rep;
}

Report verify(const LoopDef& loop, const std::string& subject, const InputSample& sample, std::size_t fuel) {
  auto v = noet::verify(loop, sample, fuel);
  Report rep;
  rep.passed = v.pass();
  Json obligations = Json::array();
  std::ostringstream out;
  out << "verify " << subject << ": " << v.inputs_sampled << " inputs, longest run " << v.max_steps << " steps\n";
  std::size_t failed = 0;
  for (const auto& o : v.results) {
    Json oj{{"id", to_string(o.id)}, {"pass", o.pass}};
    if (!o.witness.empty()) oj["witness"] = o.witness;
    if (!o.detail.empty()) oj["detail"] = o.detail;
    obligations.push_back(oj);
    failed += !o.pass;
    std::string line = std::string("  ") + (o.pass ? "PASS " : "FAIL ") + pad(to_string(o.id), 24);
    if (!o.pass && !o.witness.empty()) line += "witness " + o.witness + "; ";
    line += o.detail;
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  out << (failed ? std::to_string(failed) + " of " + std::to_string(v.results.size()) + " obligations fail\n"
                 : "all obligations pass\n");
  rep.json = {{"command", "verify"}, {"subject", subject}, {"inputs_sampled", v.inputs_sampled},
              {"max_steps", v.max_steps}, {"pass", v.pass()}, {"obligations", obligations}};
  rep.text = out.str();
  return rep;
}

Report examples_list() {
  Report rep;
  Json list = Json::array();
  std::ostringstream out;
  for (const auto& name : examples::names()) {
    auto summary = std::string(examples::summary(name));
    list.push_back({{"name", name}, {"summary", summary}});
    out << pad(name, 28) << summary << "\n";
  }
  rep.json = {{"command", "examples"}, {"examples", list}};
  rep.text = out.str();
  return rep;
}

Report audit(const std::vector<audit::Finding>& findings, std::uint64_t seed, std::size_t samples) {
  Report rep;
  Json list = Json::array();
  std::ostringstream out;
  out << "audit seed " << seed << ", " << samples << " samples per claim\n";
  bool fixtures_fail = true, plus_holds = true;
  for (const auto& f : findings) {
    list.push_back(audit::to_json(f));
    out << "  " << pad(audit::to_string(f.status), 21) << pad(std::string(audit::to_string(f.claim)) + " (" + f.label + ")", 38);
    if (f.counterexample) {
      const auto& c = *f.counterexample;
      auto r = Relation::extensional(c.space, c.r);
      auto s = Relation::extensional(c.space, c.s);
      out << "r = " << to_string(r) << ", s = " << to_string(s);
      if (c.cycle) out << ", r ; s has cycle " << to_string(*c.cycle);
      if (c.at)
        out << ", " << to_string(*c.mode) << " limits at " << to_string(*c.at) << ": " << to_string(c.image_r)
            << " vs " << to_string(c.image_s);
    }
    out << "\n";
    if (f.label == "fixture") fixtures_fail = fixtures_fail && f.status == audit::Status::CounterexampleFound;
    if (f.label == "s_is_plus_r") plus_holds = plus_holds && f.status == audit::Status::ValidatedOnSample;
    for (auto& a : audit::artifacts(f)) rep.artifacts.push_back(std::move(a));
  }
  rep.passed = fixtures_fail && plus_holds;
  rep.json = {{"command", "audit"}, {"seed", seed}, {"samples", samples}, {"findings", list}};
  rep.text = std::regex_replace(out.str(), std::regex(" +\n"), "\n");
  return rep;
}

} // namespace noet::report
