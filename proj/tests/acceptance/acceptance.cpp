// Acceptance suite: one PASS/FAIL line per criterion. Oracles are the
// matrix helpers in support.hpp, std::gcd and the examples' own checks.
//
//   noet_acceptance                  run every criterion
//   noet_acceptance --only 1,4       run a subset
//   noet_acceptance --update-golden  rewrite the CLI golden files

#include "support.hpp"

#include "noet/audit.hpp"
#include "noet/catalog.hpp"
#include "noet/examples.hpp"
#include "noet/format.hpp"
#include "noet/noether.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace testing;
using namespace noet;
namespace cat = noet::catalog;
namespace ex = noet::examples;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // printed under a failing line

  void fail(const std::string& what) {
    pass = false;
    if (notes.size() < 10) notes.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int digits = 1) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

Space space_of(std::size_t n) { return ints(0, static_cast<std::int64_t>(n) - 1); }

bool irreflexive(const Matrix& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    if (m.at(i, i)) return false;
  return true;
}

bool asymmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      if (m.at(i, j) && m.at(j, i)) return false;
  return true;
}

bool transitive(const Matrix& m) { return transitive_closure(m) == m; }

// 1. is_noetherian agrees with Kahn's algorithm.
Outcome finite_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checked = 0, discrepancies = 0;
  auto compare = [&](const Space& X, const Matrix& m) {
    ++checked;
    if (is_noetherian(relation_of(X, m)).noetherian() != acyclic(m)) {
      ++discrepancies;
      o.fail("disagreement on " + to_string(relation_of(X, m)));
    }
  };
  const auto three = space_of(3);
  for (unsigned bits = 0; bits < 512; ++bits) {
    Matrix m(3);
    for (unsigned k = 0; k < 9; ++k)
      if (bits & (1u << k)) m.set(k / 3, k % 3);
    compare(three, m);
  }
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> density(0.05, 0.5);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    compare(space_of(n), random_matrix(rng, n, density(rng)));
  }
  const double t = seconds_since(t0);
  if (t >= 30) o.fail("took " + fixed(t) + " s");
  o.detail = std::to_string(checked) + " relations, " + std::to_string(discrepancies) + " discrepancies";
  return o;
}

// Random Noetherian relation: a DAG, or a uniform relation that happens to
// be acyclic.
Matrix noetherian_sample(std::mt19937_64& rng, std::size_t n) {
  if (rng() % 2) return random_dag(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100);
  while (true) {
    auto m = random_matrix(rng, n, 0.15);
    if (acyclic(m)) return m;
  }
}

// 2. Consequences of being Noetherian.
Outcome consequences() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto m = noetherian_sample(rng, n);
    auto X = space_of(n);
    auto r = relation_of(X, m);
    auto note = [&](const std::string& what) {
      ++failures;
      o.fail(what + " for " + to_string(r));
    };
    if (!is_noetherian(r).noetherian()) note("not certified");
    auto cl = classify(r);
    if (!cl.irreflexive || !irreflexive(m)) note("reflexive pair");
    if (!cl.asymmetric || !asymmetric(m)) note("symmetric pair");
    auto plus = closures(r).plus;
    if (!is_noetherian(plus).noetherian() || !acyclic(transitive_closure(m))) note("plus not Noetherian");
    auto tc = transitive_closure(m);
    if (!classify(plus).order || !irreflexive(tc) || !transitive(tc) || !(matrix_of(plus) == tc))
      note("plus not an order");
    for (std::size_t k = 1; k <= 3; ++k) {
      auto p = noet::power(r, k);
      if (!(matrix_of(p) == testing::power(m, k))) note("power " + std::to_string(k) + " differs from oracle");
      if (!is_noetherian(p).noetherian() || !acyclic(testing::power(m, k)))
        note("power " + std::to_string(k) + " not Noetherian");
    }
  }
  o.detail = "1000 samples, " + std::to_string(failures) + " failures";
  return o;
}

// Random instances of every constructor whose certificate is sound.
struct Sampler3 {
  std::mt19937_64 rng{3};

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Relation dag(std::size_t max_n = 8) {
    const std::size_t n = 1 + below(max_n);
    return relation_of(space_of(n), random_dag(rng, n, 0.4));
  }

  ValueList some(const ValueList& vs) {
    ValueList out;
    for (const auto& v : vs)
      if (below(2)) out.push_back(v);
    return out;
  }

  cat::Graph graph() {
    const std::size_t n = 1 + below(8);
    auto m = random_dag(rng, n, 0.4);
    cat::Graph g;
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(N("v" + std::to_string(i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m.at(i, j)) g.edges.emplace_back(g.nodes[i], g.nodes[j]);
    return g;
  }

  cat::Forest forest() {
    const std::size_t n = 1 + below(12);
    cat::Forest f;
    for (std::size_t i = 0; i < n; ++i) f.nodes.push_back(N("t" + std::to_string(i)));
    for (std::size_t i = 1; i < n; ++i)
      if (below(5)) f.parent_of.emplace_back(f.nodes[i], f.nodes[below(i)]);
    return f;
  }
};

struct Constructor {
  std::string name;
  std::function<Relation(Sampler3&)> make;
};

std::vector<Constructor> constructors() {
  auto window = [](Sampler3& s, std::int64_t min_lo, std::int64_t width) {
    auto lo = s.between(min_lo, min_lo + 3);
    return std::pair{lo, lo + s.between(0, width)};
  };
  std::vector<Constructor> out{
      {"CLOSURE", [](Sampler3& s) { return cat::closure(s.dag()); }},
      {"SUBREL", [](Sampler3& s) {
         auto r = s.dag();
         std::vector<ValuePair> keep;
         for (const auto& p : r.pairs())
           if (s.below(2)) keep.push_back(p);
         return cat::subrel(r, keep);
       }},
      {"RESTRICT", [](Sampler3& s) {
         auto r = s.dag();
         return cat::restrict(r, Space::explicit_values(s.some(r.space().values())));
       }},
      {"RESTRICT(subspace)", [](Sampler3& s) {
         auto r = s.dag();
         return cat::restrict_to(r, Space::explicit_values(s.some(r.space().values())));
       }},
      {"INDUCED", [](Sampler3& s) {
         const std::int64_t k = s.between(0, 3);
         auto P = Space::product({ints(0, k), ints(0, k)});
         static const char* fns[] = {"max", "min", "sum", "abs_diff", "proj0", "proj1"};
         auto f = cat::named_function(fns[s.below(6)]);
         auto dom = Space::explicit_values(s.some(P.values()));
         return cat::induced(dom, f, cat::intgreater(0, 2 * k));
       }},
      {"INDUCED(map)", [](Sampler3& s) {
         auto base = s.dag(6);
         const auto& targets = base.space().values();
         std::vector<ValuePair> map;
         const std::size_t n = 1 + s.below(8);
         for (std::size_t i = 0; i < n; ++i) map.emplace_back(N("m" + std::to_string(i)), targets[s.below(targets.size())]);
         ValueList dom;
         for (const auto& [a, b] : map) dom.push_back(a);
         return cat::induced(Space::explicit_values(dom), cat::value_map(map), base);
       }},
      {"PROJECTION", [](Sampler3& s) {
         auto base = s.dag(4);
         auto P = s.below(2) ? Space::product({base.space(), ints(0, s.between(0, 1))})
                             : Space::product({ints(0, s.between(0, 1)), base.space()});
         const std::size_t index = P.factors()[0] == base.space() ? 0 : 1;
         return cat::projection(P, index, base);
       }},
      {"INVERSE", [](Sampler3& s) { return cat::inverse(s.dag()); }},
      {"ACYCLIC", [](Sampler3& s) { return cat::acyclic(s.graph()); }},
      {"ACYCLIC'", [](Sampler3& s) { return cat::acyclic_prime(s.graph()); }},
      {"CHILD", [](Sampler3& s) { return cat::child(s.forest()); }},
      {"DESCENDANT", [](Sampler3& s) { return cat::descendant(s.forest()); }},
      {"SUPSET", [](Sampler3& s) {
         ValueList base;
         for (std::size_t i = 0, n = s.below(5); i < n; ++i) base.push_back(I(static_cast<std::int64_t>(i)));
         return cat::supset(base);
       }},
      {"SUBSET", [](Sampler3& s) {
         ValueList base;
         for (std::size_t i = 0, n = s.below(5); i < n; ++i) base.push_back(N(std::string(1, 'p' + i)));
         return cat::subset(base);
       }},
      {"SUCCESSOR", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 7); return cat::successor(lo, hi); }},
      {"INTGREATER", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 7); return cat::intgreater(lo, hi); }},
      {"PREDECESSOR", [=](Sampler3& s) { auto [lo, hi] = window(s, -4, 7); return cat::predecessor(lo, hi); }},
      {"INTLESSER", [=](Sampler3& s) { auto [lo, hi] = window(s, -4, 7); return cat::intlesser(lo, hi); }},
      {"INTDIFF", [=](Sampler3& s) { auto [lo, hi] = window(s, -2, 3); return cat::intdiff(lo, hi); }},
      {"INTSUM", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 3); return cat::intsum(lo, hi); }},
      {"MAXINT", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 3); return cat::maxint(lo, hi); }},
      {"MININT", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 3); return cat::minint(lo, hi); }},
      {"SUPINTERVAL", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 6); return cat::supinterval(lo, hi); }},
      {"SUBINTERVAL", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 6); return cat::subinterval(lo, hi); }},
      {"INTERVAL", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 6); return cat::interval(lo, hi); }},
      {"INTERVAL'", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 6); return cat::interval_prime(lo, hi); }},
      {"INTERVALSUPSET", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 2); return cat::intervalsupset(lo, hi); }},
      {"INTERVALSUBSET", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 2); return cat::intervalsubset(lo, hi); }},
      {"INTERVALMAX", [=](Sampler3& s) { auto [lo, hi] = window(s, 0, 2); return cat::intervalmax(lo, hi); }},
  };
  return out;
}

// Chains of an induced relation map to chains of its base.
bool chain_images_hold(const Relation& induced, const cat::NamedFunction& f, const Relation& base) {
  for (const auto& a : induced.space().values())
    for (const auto& entry : chains_from(induced, a, 6)) {
      const auto& e = entry.chain.elements;
      for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (!base.contains(f.apply(e[i]), f.apply(e[i + 1]))) return false;
    }
  return true;
}

// 3. Sound catalog entries and constructors.
Outcome catalog_soundness() {
  Outcome o;
  Sampler3 s;
  std::size_t instances = 0, failures = 0;
  for (const auto& c : constructors()) {
    for (int i = 0; i < 500; ++i) {
      ++instances;
      std::optional<Relation> built;
      try {
        built = c.make(s);
      } catch (const std::exception& e) {
        ++failures;
        o.fail(c.name + ": " + e.what());
        break;
      }
      const auto& r = *built;
      if (!r.cert() || r.cert()->trust != Trust::Sound) {
        ++failures;
        o.fail(c.name + ": certificate is not sound");
        continue;
      }
      // The finite checker never looks at the certificate.
      auto v = is_noetherian(r.without_cert().materialize());
      if (!v.noetherian()) {
        ++failures;
        o.fail(c.name + ": exhaustive check refutes " + to_string(r));
      }
      if (cat::builds_order(*r.cert()) && !classify(r).order) {
        ++failures;
        o.fail(c.name + ": expected an order, got " + to_string(r));
      }
    }
  }

  // INDUCED chain images and PROJECTION as INDUCED.
  std::mt19937_64 rng(33);
  std::size_t induced_checks = 0;
  static const char* fns[] = {"max", "min", "sum", "abs_diff", "proj0", "proj1"};
  for (int i = 0; i < 500; ++i) {
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
    auto P = Space::product({ints(0, k), ints(0, k)});
    auto base = relation_of(space_of(static_cast<std::size_t>(2 * k + 1)),
                            random_dag(rng, static_cast<std::size_t>(2 * k + 1), 0.5));
    auto f = cat::named_function(fns[rng() % 6]);
    auto r = cat::induced(P, f, base);
    ++induced_checks;
    if (!chain_images_hold(r, f, base)) {
      ++failures;
      o.fail("INDUCED(" + f.name + ") maps a chain outside " + to_string(base));
    }
    const std::size_t index = rng() % 2;
    auto factor = relation_of(space_of(static_cast<std::size_t>(k + 1)),
                              random_dag(rng, static_cast<std::size_t>(k + 1), 0.5));
    auto proj = cat::projection(P, index, factor);
    auto via = cat::induced(P, cat::named_function(index == 0 ? "proj0" : "proj1"), factor);
    ++induced_checks;
    if (!(proj == via)) {
      ++failures;
      o.fail("PROJECTION differs from INDUCED on " + to_string(factor));
    }
  }
  o.detail = std::to_string(constructors().size()) + " constructors x 500 = " + std::to_string(instances) +
             " instances, " + std::to_string(induced_checks) + " induced/projection checks, " +
             std::to_string(failures) + " failures";
  return o;
}

struct Run {
  std::string output;
  int exit = -1;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// Runs the CLI from the corpus directory with stderr folded into stdout.
Run cli(const std::vector<std::string>& args) {
  static const std::regex env_token("[A-Z_]+=[^ ']*");
  std::string cmd = "cd " + quote(NOET_CORPUS_DIR) + " && env -u NOET_SEED";
  std::size_t i = 0;
  for (; i < args.size() && std::regex_match(args[i], env_token); ++i) cmd += " " + args[i];
  cmd += " " + quote(NOET_CLI_PATH);
  for (; i < args.size(); ++i) cmd += " " + quote(args[i]);
  cmd += " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// 4. Audit fixtures through the CLI, twice.
Outcome audit_fixtures() {
  Outcome o;
  auto text1 = cli({"audit"}), text2 = cli({"audit"});
  auto json1 = cli({"--json", "audit"}), json2 = cli({"--json", "audit"});
  if (text1.exit != 0) o.fail("audit exited with " + std::to_string(text1.exit) + ": " + first_line(text1.output));
  if (text1.output != text2.output || json1.output != json2.output) o.fail("reruns differ");

  format::Json doc;
  try {
    doc = format::parse(json1.output);
  } catch (const std::exception& e) {
    o.fail(std::string("unreadable JSON report: ") + e.what());
    return o;
  }
  auto status_of = [&](const std::string& claim, const std::string& label) -> std::string {
    for (const auto& f : doc.at("findings"))
      if (f.at("claim") == claim && f.at("label") == label) return f.at("status");
    return "missing";
  };
  const auto compose = status_of("compose_noetherian", "fixture");
  const auto limit = status_of("limit_subset_theorem", "fixture");
  const auto plus = status_of("limit_subset_theorem", "s_is_plus_r");
  if (compose != "counterexample_found") o.fail("compose fixture: " + compose);
  if (limit != "counterexample_found") o.fail("limit-subset fixture: " + limit);
  if (plus != "validated_on_sample") o.fail("s = plus(r): " + plus);
  if (doc.at("seed") != 0 || doc.at("samples") != 1000) o.fail("defaults are not seed 0, 1000 samples");

  // Each counterexample re-verifies from its serialized form.
  for (const auto& f : doc.at("findings"))
    if (!audit::recheck(audit::finding_from_json(f))) o.fail("finding does not recheck: " + f.dump());

  o.detail = "compose fixture " + compose + ", limit-subset fixture " + limit + ", s = plus(r) " + plus +
             ", reruns byte-identical " + (text1.output == text2.output && json1.output == json2.output ? "yes" : "no");
  return o;
}

// 5. A seed and its relation have the same minima.
Outcome seed_minima() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto ms = noetherian_sample(rng, n);
    Matrix mr(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::size_t> img;
      for (std::size_t b = 0; b < n; ++b)
        if (ms.at(a, b)) img.push_back(b);
      if (img.empty()) continue;
      mr.set(a, img[rng() % img.size()]);
      for (auto b : img)
        if (rng() % 2) mr.set(a, b);
    }
    auto X = space_of(n);
    auto r = relation_of(X, mr), s = relation_of(X, ms);
    std::vector<std::size_t> oracle;
    for (std::size_t a = 0; a < n; ++a)
      if (!has_successor(ms, a)) oracle.push_back(a);
    if (!is_seed(r, s)) {
      ++failures;
      o.fail("not recognised as a seed: " + to_string(r) + " of " + to_string(s));
    }
    if (minima(r) != minima(s) || minima(s) != values_at(X, oracle)) {
      ++failures;
      o.fail("minima differ: " + to_string(r) + " vs " + to_string(s));
    }
  }
  o.detail = "1000 seed pairs, " + std::to_string(failures) + " failures";
  return o;
}

struct Sweeps {
  std::vector<ex::SweepResult> results;
  double seconds = 0;
};

const Sweeps& sweeps() {
  static const Sweeps s = [] {
    Sweeps out;
    const auto t0 = Clock::now();
    out.results.push_back(ex::sweep_gcd(30, 30));
    out.results.push_back(ex::sweep_search(6, 3, 4));
    out.results.push_back(ex::sweep_partition(6, 7, 7));
    out.results.push_back(ex::sweep_lamsort(5, 3));
    out.seconds = seconds_since(t0);
    return out;
  }();
  return s;
}

// 6. Exhaustive example sweeps against their oracles.
Outcome example_sweeps() {
  Outcome o;
  const auto& s = sweeps();
  std::ostringstream d;
  for (const auto& r : s.results) {
    d << r.name << " " << r.inputs << " inputs/" << r.oracle_failures + r.model_disagreements << " failures, ";
    if (r.oracle_failures || r.model_disagreements)
      for (const auto& f : r.failures) o.fail(r.name + ": " + f);
    if (r.inputs == 0) o.fail(r.name + ": no inputs swept");
  }
  if (s.results[0].inputs != 900) o.fail("gcd swept " + std::to_string(s.results[0].inputs) + " inputs, not 900");
  if (s.seconds >= 300) o.fail("took " + fixed(s.seconds) + " s");
  d << fixed(s.seconds) << " s";
  o.detail = d.str();
  return o;
}

// 7. Operational, closure and limit readings coincide on every swept input.
Outcome denotation_agreement() {
  Outcome o;
  std::size_t inputs = 0, instances = 0, failures = 0;
  for (const auto& r : sweeps().results) {
    inputs += r.inputs;
    instances += r.instances;
    failures += r.agreement_failures;
    if (r.agreement_failures)
      for (const auto& f : r.failures) o.fail(r.name + ": " + f);
  }
  o.detail = std::to_string(instances) + " instances, " + std::to_string(inputs) + " inputs, " +
             std::to_string(failures) + " discrepancies";
  return o;
}

// 8. Each body lies inside its classical variant's relation.
Outcome variant_subsumption() {
  Outcome o;
  std::size_t instances = 0, failures = 0;
  for (const auto& r : sweeps().results) {
    instances += r.instances;
    failures += r.variant_failures;
    if (r.variant_failures)
      for (const auto& f : r.failures) o.fail(r.name + ": " + f);
  }
  o.detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " with missing pairs";
  return o;
}

struct Case {
  std::string name;
  int exit = 0;
  std::vector<std::string> args;
};

std::vector<Case> cli_cases() {
  std::vector<Case> out;
  std::ifstream in(std::string(NOET_CLI_CASES_DIR) + "/cases.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Case c;
    ls >> c.name >> c.exit;
    for (std::string tok; ls >> tok;) c.args.push_back(tok);
    out.push_back(std::move(c));
  }
  return out;
}

std::string golden_path(const Case& c) { return std::string(NOET_CLI_CASES_DIR) + "/golden/" + c.name + ".txt"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Canonical re-serialization of a corpus file, by document kind.
std::string reserialize(const std::string& text) {
  auto j = format::parse(text);
  if (j.contains("claim")) return format::dump(audit::to_json(audit::finding_from_json(j)));
  if (format::is_loop_document(j)) return format::dump(format::to_json(format::loop_doc_from_json(j)));
  return format::dump(format::to_json(format::relation_doc_from_json(j)));
}

// 9. CLI golden files, exit codes and serialization round-trips.
Outcome cli_contract() {
  Outcome o;
  const auto cases = cli_cases();
  std::size_t golden_ok = 0, exit_ok = 0;
  std::set<std::string> commands;
  for (const auto& c : cases) {
    auto r = cli(c.args);
    for (const auto& a : c.args)
      if (a == "check" || a == "limit" || a == "height" || a == "seed" || a == "run" || a == "verify" ||
          a == "examples" || a == "audit")
        commands.insert(a);
    if (r.exit == c.exit) ++exit_ok;
    else o.fail(c.name + ": exit " + std::to_string(r.exit) + ", expected " + std::to_string(c.exit));
    const auto path = golden_path(c);
    if (!fs::exists(path)) o.fail(c.name + ": no golden file");
    else if (slurp(path) != r.output) o.fail(c.name + ": output differs from " + path);
    else ++golden_ok;
  }
  if (commands.size() != 8) o.fail("not every subcommand has a golden case");

  std::size_t files = 0, identical = 0;
  for (const auto& entry : fs::directory_iterator(NOET_CORPUS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    try {
      const auto stored = slurp(entry.path());
      const auto once = reserialize(stored);
      const auto twice = reserialize(once);
      if (once == twice && once == stored) ++identical;
      else o.fail(entry.path().filename().string() + ": round-trip is not byte-identical");
    } catch (const std::exception& e) {
      o.fail(entry.path().filename().string() + ": " + e.what());
    }
  }
  if (files != 20) o.fail("corpus has " + std::to_string(files) + " files, expected 20");
  o.detail = std::to_string(golden_ok) + "/" + std::to_string(cases.size()) + " golden outputs, " +
             std::to_string(exit_ok) + "/" + std::to_string(cases.size()) + " exit codes, " +
             std::to_string(identical) + "/" + std::to_string(files) + " corpus files round-trip";
  return o;
}

// Rewrites the corpus in canonical form, then regenerates every golden file.
int update_golden() {
  for (const auto& entry : fs::directory_iterator(NOET_CORPUS_DIR))
    if (entry.path().extension() == ".json") {
      const auto text = reserialize(slurp(entry.path()));
      std::ofstream(entry.path(), std::ios::binary) << text;
    }
  fs::create_directories(std::string(NOET_CLI_CASES_DIR) + "/golden");
  for (const auto& c : cli_cases()) {
    auto r = cli(c.args);
    std::ofstream(golden_path(c), std::ios::binary) << r.output;
    std::cout << c.name << ": exit " << r.exit << (r.exit == c.exit ? "" : "  (expected " + std::to_string(c.exit) + ")")
              << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--update-golden") return update_golden();
    if (arg == "--only" && i + 1 < argc) {
      std::istringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) only.insert(std::stoi(tok));
    } else {
      std::cerr << "usage: noet_acceptance [--only 1,2,...] [--update-golden]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"finite equivalence", finite_equivalence},
      {"Noetherian consequences", consequences},
      {"catalog soundness", catalog_soundness},
      {"audit fixtures", audit_fixtures},
      {"seed minima", seed_minima},
      {"example sweeps", example_sweeps},
      {"denotation agreement", denotation_agreement},
      {"variant subsumption", variant_subsumption},
      {"CLI contract", cli_contract},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << " (" << fixed(seconds_since(t0), 2) << " s)\n";
    if (!o.pass)
      for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return all_pass ? 0 : 1;
}
