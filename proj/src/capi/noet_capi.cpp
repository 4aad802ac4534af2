#include "noet/noet.h"

#include "noet/audit.hpp"
#include "noet/examples.hpp"
#include "noet/format.hpp"
#include "noet/report.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

struct noet_relation {
  noet::format::RelationDoc doc;
  noet::Relation relation;
};

struct noet_loop {
  std::string subject;
  std::optional<noet::format::LoopDoc> doc;
  noet::LoopDef loop;
};

struct noet_report {
  noet::report::Report report;
  std::string json;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_witness;

noet_status status_of(noet::ErrorCode c) {
  return static_cast<noet_status>(static_cast<int>(c) + 1);
}

noet_status fail(noet_status s, std::string message, std::string witness = {}) {
  last_error = std::move(message);
  last_witness = std::move(witness);
  return s;
}

// Runs f, turning exceptions into a status and the thread's last error.
template <typename F>
noet_status guarded(F&& f) {
  last_error.clear();
  last_witness.clear();
  try {
    f();
    return NOET_OK;
  } catch (const noet::Error& e) {
    return fail(status_of(e.code()), e.what(), e.witness());
  } catch (const nlohmann::json::exception& e) {
    return fail(NOET_E_MALFORMED_INPUT, std::string("malformed document: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(NOET_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NOET_E_INTERNAL, e.what());
  }
}

noet_options opts(const noet_options* o) {
  noet_options d;
  noet_options_init(&d);
  return o ? *o : d;
}

noet_report* wrap(noet::report::Report r) {
  auto* out = new noet_report{std::move(r), {}};
  out->json = noet::format::dump(out->report.json);
  return out;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

noet::LoopDef checked(const noet_loop& l) {
  const auto& d = l.loop;
  return noet::make_loop(noet::LoopParts{d.space(), d.order(), d.init(), d.body(), d.postcondition(), d.policy()});
}

noet::LimitMode mode_of(const char* mode) {
  if (!mode || std::strcmp(mode, "minima") == 0) return noet::LimitMode::ReachableMinima;
  if (std::strcmp(mode, "maxdepth") == 0) return noet::LimitMode::MaxDepth;
  throw noet::Error(noet::ErrorCode::MalformedInput, std::string("unknown limit mode ") + mode);
}

noet::examples::Params params_from(const noet::format::Json& j) {
  using noet::format::Json;
  if (!j.is_object()) throw noet::Error(noet::ErrorCode::MalformedInput, "parameters must be a JSON object");
  noet::examples::Params p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    const Json& v = it.value();
    if (k == "a") p.a = v.get<std::int64_t>();
    else if (k == "b") p.b = v.get<std::int64_t>();
    else if (k == "a_max") p.a_max = v.get<std::int64_t>();
    else if (k == "b_max") p.b_max = v.get<std::int64_t>();
    else if (k == "bound") p.bound = v.get<std::int64_t>();
    else if (k == "x") p.x = v.get<std::int64_t>();
    else if (k == "pivot") p.pivot = v.get<std::int64_t>();
    else if (k == "t") p.t = v.get<std::vector<std::int64_t>>();
    else if (k == "policy") p.policy = v.get<std::string>();
    else throw noet::Error(noet::ErrorCode::MalformedInput, "unknown parameter " + k);
  }
  return p;
}

noet_status null_arg(const char* what) { return fail(NOET_E_INVALID_ARGUMENT, std::string(what) + " is null"); }

} // namespace

extern "C" {

const char* noet_version(void) { return "0.1.0"; }

const char* noet_status_name(noet_status status) {
  switch (status) {
    case NOET_OK: return "Ok";
    case NOET_E_INVALID_ARGUMENT: return "InvalidArgument";
    case NOET_E_INTERNAL: return "Internal";
    default: break;
  }
  const int i = static_cast<int>(status) - 1;
  if (i >= 0 && i <= static_cast<int>(noet::ErrorCode::MalformedInput))
    return noet::to_string(static_cast<noet::ErrorCode>(i));
  return "Unknown";
}

int noet_status_is_property_failure(noet_status status) {
  switch (status) {
    case NOET_E_NOT_NOETHERIAN:
    case NOET_E_ORDER_NOT_NOETHERIAN:
    case NOET_E_BODY_NOT_SUBSET_OF_ORDER:
    case NOET_E_DOMAIN_MISMATCH:
    case NOET_E_INIT_ESCAPES_SPACE:
    case NOET_E_EMPTY_SPACE:
      return 1;
    default:
      return 0;
  }
}

const char* noet_last_error(void) { return last_error.c_str(); }
const char* noet_last_error_witness(void) { return last_witness.c_str(); }

void noet_options_init(noet_options* options) {
  if (!options) return;
  options->fuel = noet::kDefaultFuel;
  options->max_space = noet::kDefaultMaxSpace;
}

noet_status noet_relation_parse(const char* json, const noet_options* options, noet_relation** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  *out = nullptr;
  const auto o = opts(options);
  return guarded([&] {
    auto doc = noet::format::relation_doc_from_json(noet::format::parse(json), o.max_space);
    auto rel = noet::format::build(doc, o.max_space);
    *out = new noet_relation{std::move(doc), std::move(rel)};
  });
}

noet_status noet_relation_load(const char* path, const noet_options* options, noet_relation** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  const auto o = opts(options);
  return guarded([&] {
    auto doc = noet::format::relation_doc_from_json(noet::format::read_file(path), o.max_space);
    auto rel = noet::format::build(doc, o.max_space);
    *out = new noet_relation{std::move(doc), std::move(rel)};
  });
}

void noet_relation_free(noet_relation* relation) { delete relation; }

noet_status noet_relation_serialize(const noet_relation* relation, char** out) {
  if (!relation) return null_arg("relation");
  if (!out) return null_arg("out");
  return guarded([&] { *out = dup(noet::format::dump(noet::format::to_json(relation->doc))); });
}

noet_status noet_check(const noet_relation* r, const noet_options* options, noet_report** out) {
  if (!r) return null_arg("relation");
  if (!out) return null_arg("out");
  const auto o = opts(options);
  return guarded([&] { *out = wrap(noet::report::check(r->relation, o.fuel)); });
}

noet_status noet_limit(const noet_relation* r, const char* from, const char* mode, noet_report** out) {
  if (!r) return null_arg("relation");
  if (!from) return null_arg("from");
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap(noet::report::limit(r->relation, noet::format::parse_value(from), mode_of(mode))); });
}

noet_status noet_height(const noet_relation* r, const char* from, noet_report** out) {
  if (!r) return null_arg("relation");
  if (!from) return null_arg("from");
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap(noet::report::height(r->relation, noet::format::parse_value(from))); });
}

noet_status noet_seed(const noet_relation* r, const noet_relation* s, noet_report** out) {
  if (!r || !s) return null_arg("relation");
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap(noet::report::seed(r->relation, s->relation)); });
}

noet_status noet_loop_parse(const char* json, const noet_options* options, noet_loop** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  *out = nullptr;
  const auto o = opts(options);
  return guarded([&] {
    auto doc = noet::format::loop_doc_from_json(noet::format::parse(json), o.max_space);
    auto def = noet::format::candidate(doc, o.max_space);
    *out = new noet_loop{"loop", std::move(doc), std::move(def)};
  });
}

noet_status noet_loop_load(const char* path, const noet_options* options, noet_loop** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  const auto o = opts(options);
  return guarded([&] {
    auto doc = noet::format::loop_doc_from_json(noet::format::read_file(path), o.max_space);
    auto def = noet::format::candidate(doc, o.max_space);
    *out = new noet_loop{path, std::move(doc), std::move(def)};
  });
}

noet_status noet_example_instantiate(const char* name, const char* params, const noet_options* options,
                                     noet_loop** out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  *out = nullptr;
  const auto o = opts(options);
  return guarded([&] {
    auto p = params_from(params ? noet::format::parse(params) : noet::format::Json::object());
    auto inst = noet::examples::instantiate(name, p, o.max_space);
    *out = new noet_loop{name, std::nullopt, std::move(inst.loop)};
  });
}

void noet_loop_free(noet_loop* loop) { delete loop; }

noet_status noet_loop_serialize(const noet_loop* loop, char** out) {
  if (!loop) return null_arg("loop");
  if (!out) return null_arg("out");
  if (!loop->doc) return fail(NOET_E_INVALID_ARGUMENT, "built-in examples have no document form");
  return guarded([&] { *out = dup(noet::format::dump(noet::format::to_json(*loop->doc))); });
}

noet_status noet_loop_validate(const noet_loop* loop) {
  if (!loop) return null_arg("loop");
  return guarded([&] { checked(*loop); });
}

noet_status noet_loop_inputs(const noet_loop* loop, char** out) {
  if (!loop) return null_arg("loop");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto list = noet::format::Json::array();
    for (const auto& v : loop->loop.inputs().values()) list.push_back(noet::format::to_json(v));
    *out = dup(list.dump());
  });
}

noet_status noet_run(const noet_loop* loop, const char* input, int all, int trace, const noet_options* options,
                     noet_report** out) {
  if (!loop) return null_arg("loop");
  if (!input) return null_arg("input");
  if (!out) return null_arg("out");
  const auto o = opts(options);
  return guarded([&] {
    auto def = checked(*loop);
    *out = wrap(noet::report::run(def, noet::format::parse_value(input), o.fuel, all != 0, trace != 0));
  });
}

noet_status noet_verify(const noet_loop* loop, const char* inputs, const noet_options* options, noet_report** out) {
  if (!loop) return null_arg("loop");
  if (!out) return null_arg("out");
  const auto o = opts(options);
  return guarded([&] {
    auto sample = noet::InputSample::all();
    if (inputs) {
      auto j = noet::format::parse(inputs);
      if (!j.is_array()) throw noet::Error(noet::ErrorCode::MalformedInput, "inputs must be a JSON array");
      noet::ValueList vs;
      for (const auto& v : j) vs.push_back(noet::format::value_from_json(v));
      sample = noet::InputSample::of(std::move(vs));
    }
    *out = wrap(noet::report::verify(loop->loop, loop->subject, sample, o.fuel));
  });
}

noet_status noet_examples_list(noet_report** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap(noet::report::examples_list()); });
}

noet_status noet_audit(uint64_t seed, size_t samples, noet_report** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = wrap(noet::report::audit(noet::audit::run(seed, samples), seed, samples)); });
}

const char* noet_report_text(const noet_report* report) { return report ? report->report.text.c_str() : ""; }
const char* noet_report_json(const noet_report* report) { return report ? report->json.c_str() : ""; }
int noet_report_passed(const noet_report* report) { return report && report->report.passed ? 1 : 0; }

size_t noet_report_artifact_count(const noet_report* report) {
  return report ? report->report.artifacts.size() : 0;
}

const char* noet_report_artifact_name(const noet_report* report, size_t index) {
  if (!report || index >= report->report.artifacts.size()) return nullptr;
  return report->report.artifacts[index].first.c_str();
}

const char* noet_report_artifact_content(const noet_report* report, size_t index) {
  if (!report || index >= report->report.artifacts.size()) return nullptr;
  return report->report.artifacts[index].second.c_str();
}

void noet_report_free(noet_report* report) { delete report; }

void noet_string_free(char* s) { std::free(s); }

} // extern "C"
