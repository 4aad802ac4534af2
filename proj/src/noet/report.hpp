#pragma once

#include "noet/audit.hpp"
#include "noet/format.hpp"
#include "noet/loop.hpp"

#include <string>
#include <utility>
#include <vector>

namespace noet::report {

// What a command prints: human-readable text, the --json document, whether
// the checked property holds, and any files it offers to write.
struct Report {
  std::string text;
  format::Json json;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> artifacts;
};

Report check(const Relation& r, std::size_t fuel = kDefaultFuel);
Report limit(const Relation& r, const Value& from, LimitMode mode);
Report height(const Relation& r, const Value& from);
Report seed(const Relation& r, const Relation& s);
Report run(const LoopDef& loop, const Value& input, std::size_t fuel, bool all, bool trace);
Report verify(const LoopDef& loop, const std::string& subject, const InputSample& sample, std::size_t fuel);
Report examples_list();
Report audit(const std::vector<audit::Finding>& findings, std::uint64_t seed, std::size_t samples);

} // namespace noet::report
