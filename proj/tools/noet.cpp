// Command-line front end. Talks to the library only through noet/noet.h.
#include "noet/noet.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kPass = 0, kPropertyFails = 1, kBadInput = 2 };

struct Global {
  bool json = false;
  std::size_t fuel = 10000;
  std::size_t max_space = 100000;

  noet_options options() const {
    noet_options o;
    noet_options_init(&o);
    o.fuel = fuel;
    o.max_space = max_space;
    return o;
  }
};

using RelationPtr = std::unique_ptr<noet_relation, decltype(&noet_relation_free)>;
using LoopPtr = std::unique_ptr<noet_loop, decltype(&noet_loop_free)>;
using ReportPtr = std::unique_ptr<noet_report, decltype(&noet_report_free)>;

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

// A failed call. Property failures go to stdout like any other verdict;
// malformed input and exceeded limits are diagnostics.
int failure(const Global& g, noet_status s) {
  const std::string msg = noet_last_error();
  const std::string witness = noet_last_error_witness();
  const bool property = noet_status_is_property_failure(s);
  if (g.json) {
    std::ostream& os = property ? std::cout : std::cerr;
    os << "{\n  \"error\": \"" << noet_status_name(s) << "\",\n  \"message\": \"" << json_escape(msg) << "\"";
    if (!witness.empty()) os << ",\n  \"witness\": \"" << json_escape(witness) << "\"";
    os << "\n}\n";
  } else if (property) {
    std::cout << noet_status_name(s) << ": " << msg << "\n";
    if (!witness.empty()) std::cout << "witness: " << witness << "\n";
  } else {
    std::cerr << "noet: " << noet_status_name(s) << ": " << msg << "\n";
    if (!witness.empty()) std::cerr << "witness: " << witness << "\n";
  }
  return property ? kPropertyFails : kBadInput;
}

int emit(const Global& g, noet_report* raw) {
  ReportPtr rep(raw, noet_report_free);
  std::cout << (g.json ? noet_report_json(rep.get()) : noet_report_text(rep.get()));
  return noet_report_passed(rep.get()) ? kPass : kPropertyFails;
}

std::optional<RelationPtr> load_relation(const Global& g, const std::string& path, int& code) {
  noet_relation* r = nullptr;
  const auto o = g.options();
  if (auto s = noet_relation_load(path.c_str(), &o, &r); s != NOET_OK) {
    code = failure(g, s);
    return std::nullopt;
  }
  return RelationPtr(r, noet_relation_free);
}

// Example parameters gathered from flags, forwarded as a JSON object.
struct ExampleFlags {
  std::optional<long long> a, b, a_max, b_max, bound, x, pivot;
  std::vector<long long> t;
  bool t_given = false;
  std::string policy;

  std::string to_json() const {
    std::ostringstream os;
    os << "{";
    const char* sep = "";
    auto field = [&](const char* k, const std::optional<long long>& v) {
      if (v) {
        os << sep << "\"" << k << "\":" << *v;
        sep = ",";
      }
    };
    field("a", a);
    field("b", b);
    field("a_max", a_max);
    field("b_max", b_max);
    field("bound", bound);
    field("x", x);
    field("pivot", pivot);
    if (t_given) {
      os << sep << "\"t\":[";
      for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
      os << "]";
      sep = ",";
    }
    if (!policy.empty()) os << sep << "\"policy\":\"" << json_escape(policy) << "\"";
    os << "}";
    return os.str();
  }
};

bool is_example(const std::string& name) {
  noet_report* raw = nullptr;
  if (noet_examples_list(&raw) != NOET_OK) return false;
  ReportPtr rep(raw, noet_report_free);
  const std::string json = noet_report_json(rep.get());
  return json.find("\"name\": \"" + name + "\"") != std::string::npos;
}

// An example name or a loop file.
std::optional<LoopPtr> load_loop(const Global& g, const std::string& subject, const ExampleFlags& flags, int& code) {
  noet_loop* l = nullptr;
  const auto o = g.options();
  noet_status s;
  if (!std::filesystem::exists(subject) && is_example(subject))
    s = noet_example_instantiate(subject.c_str(), flags.to_json().c_str(), &o, &l);
  else
    s = noet_loop_load(subject.c_str(), &o, &l);
  if (s != NOET_OK) {
    code = failure(g, s);
    return std::nullopt;
  }
  return LoopPtr(l, noet_loop_free);
}

void add_example_flags(CLI::App* cmd, ExampleFlags& f) {
  cmd->add_option("--a", f.a, "gcd: first argument");
  cmd->add_option("--b", f.b, "gcd: second argument");
  cmd->add_option("--a-max", f.a_max, "gcd: largest first argument");
  cmd->add_option("--b-max", f.b_max, "gcd: largest second argument");
  cmd->add_option("--bound", f.bound, "gcd: largest value of the state space");
  cmd->add_option("--t", f.t, "array, e.g. --t 3 1 2")->each([&f](const std::string&) { f.t_given = true; });
  cmd->add_option("--x", f.x, "searches: the sought value");
  cmd->add_option("--pivot", f.pivot, "partition: the pivot");
  cmd->add_option("--policy", f.policy, "choice policy: least, midpoint, leftmost_longest");
}

std::uint64_t audit_seed(std::uint64_t flag, bool given) {
  if (given) return flag;
  if (const char* env = std::getenv("NOET_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("NOET_SEED", std::string("not a natural number: ") + env);
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"noet: Noetherian relations and loops as minimization"};
  app.set_version_flag("--version", noet_version());
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_flag("--json", g.json, "print a JSON document instead of text");
  app.add_option("--fuel", g.fuel, "step bound for chains and runs")->capture_default_str();
  app.add_option("--max-space", g.max_space, "largest space that is enumerated")->capture_default_str();

  int code = kPass;

  std::string file, file2, from, mode = "minima", input;
  bool all = false, trace = false, list = false;
  ExampleFlags flags;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string emit_dir;

  auto* check = app.add_subcommand("check", "decide whether a relation is Noetherian");
  check->add_option("file", file, "relation file")->required();

  auto* limit = app.add_subcommand("limit", "limit image of an element");
  limit->add_option("file", file, "relation file")->required();
  limit->add_option("--from", from, "element, as a JSON value")->required();
  limit->add_option("--mode", mode, "minima or maxdepth")->check(CLI::IsMember({"minima", "maxdepth"}));

  auto* height = app.add_subcommand("height", "height of an element");
  height->add_option("file", file, "relation file")->required();
  height->add_option("--from", from, "element, as a JSON value")->required();

  auto* seedcmd = app.add_subcommand("seed", "is r a seed of s");
  seedcmd->add_option("r", file, "relation file r")->required();
  seedcmd->add_option("s", file2, "relation file s")->required();

  auto* run = app.add_subcommand("run", "execute a loop on one input");
  run->add_option("loop", file, "example name or loop file")->required();
  run->add_option("--input", input, "input, as a JSON value")->required();
  run->add_flag("--trace", trace, "print every state");
  run->add_flag("--all", all, "explore every resolution of the body");
  add_example_flags(run, flags);

  auto* verify = app.add_subcommand("verify", "check every obligation of a loop");
  verify->add_option("loop", file, "example name or loop file")->required();
  add_example_flags(verify, flags);

  auto* examples = app.add_subcommand("examples", "built-in example loops");
  examples->add_flag("--list", list, "list them");

  auto* audit = app.add_subcommand("audit", "sample claims about Noetherian relations");
  auto* seed_opt = audit->add_option("--seed", seed, "random seed (NOET_SEED overrides the default 0)");
  audit->add_option("--samples", samples, "samples per claim")->capture_default_str();
  audit->add_option("--emit", emit_dir, "write counterexample relation files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::RequiredError& e) {
    // A stray word where the subcommand belongs.
    if (!app.get_subcommands().size() && !app.remaining().empty()) {
      std::cerr << "unknown subcommand: " << app.remaining().front() << "\nRun with --help for more information.\n";
      return kBadInput;
    }
    app.exit(e);
    return kBadInput;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  const auto opts = g.options();
  noet_report* raw = nullptr;

  if (check->parsed()) {
    auto r = load_relation(g, file, code);
    if (!r) return code;
    if (auto s = noet_check(r->get(), &opts, &raw); s != NOET_OK) return failure(g, s);
    return emit(g, raw);
  }
  if (limit->parsed() || height->parsed()) {
    auto r = load_relation(g, file, code);
    if (!r) return code;
    auto s = limit->parsed() ? noet_limit(r->get(), from.c_str(), mode.c_str(), &raw)
                             : noet_height(r->get(), from.c_str(), &raw);
    if (s != NOET_OK) return failure(g, s);
    return emit(g, raw);
  }
  if (seedcmd->parsed()) {
    auto r = load_relation(g, file, code);
    if (!r) return code;
    auto s = load_relation(g, file2, code);
    if (!s) return code;
    if (auto st = noet_seed(r->get(), s->get(), &raw); st != NOET_OK) return failure(g, st);
    return emit(g, raw);
  }
  if (run->parsed() || verify->parsed()) {
    auto l = load_loop(g, file, flags, code);
    if (!l) return code;
    const auto o = g.options();
    auto s = run->parsed() ? noet_run(l->get(), input.c_str(), all, trace, &o, &raw)
                           : noet_verify(l->get(), nullptr, &o, &raw);
    if (s != NOET_OK) return failure(g, s);
    return emit(g, raw);
  }
  if (examples->parsed()) {
    if (auto s = noet_examples_list(&raw); s != NOET_OK) return failure(g, s);
    return emit(g, raw);
  }
  if (audit->parsed()) {
    std::uint64_t chosen = 0;
    try {
      chosen = audit_seed(seed, seed_opt->count() > 0);
    } catch (const CLI::ValidationError& e) {
      std::cerr << "noet: " << e.what() << "\n";
      return kBadInput;
    }
    if (auto s = noet_audit(chosen, samples, &raw); s != NOET_OK) return failure(g, s);
    if (!emit_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(emit_dir, ec);
      for (std::size_t i = 0; i < noet_report_artifact_count(raw); ++i) {
        std::ofstream out(std::filesystem::path(emit_dir) / noet_report_artifact_name(raw, i), std::ios::binary);
        out << noet_report_artifact_content(raw, i);
        if (!out) {
          std::cerr << "noet: cannot write to " << emit_dir << "\n";
          noet_report_free(raw);
          return kBadInput;
        }
      }
    }
    return emit(g, raw);
  }
  return kBadInput;
}
