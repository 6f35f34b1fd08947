// The verification battery behind the paper-suite command and the acceptance
// binary: ten numbered checks covering the solver chain, the oracle
// equivalences, the worked examples, the closed forms, and the classification
// constants. Checks run as jobs on a small worker pool; the serialized
// reports carry no timing, so reruns with different worker counts and seeds
// must produce byte-identical files.
#pragma once

#include <string>
#include <vector>

namespace dectab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // deterministic; anything timing-related stays out
  double seconds = 0.0;  // wall time, printed to the console only
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;  // ordered by id
  int pass_count = 0;
  bool all_pass = false;
};

inline constexpr unsigned kSuiteDefaultSeed = 1;

// Runs all ten checks. workers bounds the pool for the first nine; the tenth
// reruns the battery under worker counts {1, 2, 8} and seeds {seed, seed+1}
// and compares the serialized results byte for byte.
SuiteReport run_paper_suite(int workers, unsigned seed);

std::string suite_report_json(const SuiteReport& report);
std::string suite_report_markdown(const SuiteReport& report);

}  // namespace dectab
