// Acceptance gate: one line per criterion, every threshold pinned here.
// The extensional oracle gate runs first; the symbolic suites only mean
// something once it is green.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "magma/suites.hpp"

namespace {

using namespace magma;

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::vector<std::pair<std::string, SuiteContext>> suites;
};

SuiteContext ctx(unsigned cases = 0, std::uint64_t seed = 1) {
  SuiteContext c;
  c.seed = seed;
  c.cases = cases;
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {9, "oracle-soundness-gate", 120.0, {{"oracle-gate", ctx()}, {"oracle-levels", ctx()}}},
      {1, "pair-equality-theorem", 30.0, {{"pair-theorem", ctx(2000)}, {"oracle-pair", ctx()}}},
      {2, "sub-pair-law", 10.0, {{"sub-pair", ctx(1000)}}},
      {3, "product-weak-product-agreement", 30.0, {{"product-pairs", ctx(100)}}},
      {4, "function-check-soundness", 60.0,
       {{"function-check", ctx(500)}, {"oracle-functions", ctx()}}},
      {5, "disjointness-sufficiency-and-countgen", 30.0,
       {{"function-disjoint", ctx(500)}, {"countgen", ctx(200)}}},
      {6, "ordinal-laws", 20.0,
       {{"ordinal-order", ctx()}, {"alt-disjoint", ctx()}, {"ordinal-add", ctx()},
        {"nat-expansion", ctx()}}},
      {7, "magmatic-separation-scheme", 30.0, {{"mss", ctx(300)}}},
      {8, "replacement-failures", 5.0,
       {{"replacement-pr", ctx()}, {"completion-not-functional", ctx()}}},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    unsigned long long cases = 0;
    for (const auto& [suite, context] : c.suites) {
      SuiteResult r = run_suite(suite, context);
      for (const PropertyResult& p : r.properties) {
        cases += p.checked;
        if (!p.pass) {
          pass = false;
          if (detail.empty())
            detail = suite + "/" + p.name +
                     (p.counterexamples.empty() ? "" : " e.g. " + p.counterexamples.front());
        }
      }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = seconds < c.budget_seconds;
    if (!in_budget) {
      pass = false;
      if (detail.empty()) detail = "over time budget";
    }
    all_pass = all_pass && pass;
    std::printf("%s  criterion %d  %-38s  %llu checks  %.2fs (< %.0fs)%s%s\n",
                pass ? "PASS" : "FAIL", c.number, c.name.c_str(), cases, seconds,
                c.budget_seconds, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
