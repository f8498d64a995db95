#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magma/atom.hpp"

namespace magma {

// Knobs shared by every suite. Zero means "suite default"; domain_set
// restricts domain-iterating suites to one domain.
struct SuiteContext {
  std::uint64_t seed = 1;
  unsigned cases = 0;
  unsigned depth = 0;
  Domain domain = Domain::Tag;
  bool domain_set = false;
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  unsigned long long checked = 0;
  std::vector<std::string> counterexamples;  // replayable S-expressions
  std::vector<std::string> notes;            // always printed (e.g. witnesses)
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool pass = false;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);

// Runs one registered suite. Throws UnknownSuite. Deterministic in the
// context: identical invocations produce identical results.
SuiteResult run_suite(const std::string& name, const SuiteContext& ctx);

// Line-oriented report: one "[PASS]/[FAIL] suite/property (n cases)" line
// per property, counterexamples indented beneath failures.
std::string format_report(const SuiteResult& r);

}  // namespace magma
