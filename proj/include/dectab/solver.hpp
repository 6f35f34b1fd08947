// The three table parameters: the cost of reading every column, the minimum
// deterministic tree cost, and the minimum nondeterministic tree cost.
// Additive measures get exact fast algorithms; brute-force searches double as
// oracles and as the only route for non-additive measures.
#pragma once

#include <optional>
#include <string>

#include "dectab/measure.hpp"
#include "dectab/table.hpp"
#include "dectab/tree.hpp"

namespace dectab {

struct SolveResult {
  long long value = 0;
  std::optional<DecisionTree> witness;
  std::string method;  // closed_form | dp | certificate | brute_force
  // Budget ran out before the search covered its completeness envelope.
  bool inconclusive = false;
};

// Measure of the word of all column attributes in column order, duplicates
// included.
long long psi_i(const DecisionTable& table, const ComplexityMeasure& measure);

// Minimum deterministic tree cost for an additive measure. Subtable dynamic
// program memoized on the row subset; witness rebuilt from the argmins.
SolveResult psi_d_additive(const DecisionTable& table,
                           const ComplexityMeasure& measure);

// Minimum nondeterministic tree cost for an additive measure: max over rows
// of the cheapest attribute subset whose fixing to the row's values leaves a
// common decision. Witness joins one such path per row at the root.
SolveResult psi_a_certificate(const DecisionTable& table,
                              const ComplexityMeasure& measure);

// Exhaustive search over deterministic trees that branch on realized values
// and never repeat an attribute on a path, with optional early terminals and
// continuation past degenerate subtables. Exact for limited measures, which
// never reward longer words; for others the value is the minimum within that
// envelope. node_budget caps recursion steps; exceeding it aborts with
// inconclusive = true.
SolveResult psi_d_bruteforce(const DecisionTable& table,
                             const ComplexityMeasure& measure,
                             long long node_budget = 1000000);

// Exhaustive per-row search over rule words (ordered attribute sequences
// carrying the row's values, repeats allowed up to length n+2) joined at the
// root. Exact for limited measures once every repeat-free sequence has been
// tried; path_budget caps the per-row word count, and stopping before the
// repeat-free envelope completes sets inconclusive.
SolveResult psi_a_bruteforce(const DecisionTable& table,
                             const ComplexityMeasure& measure,
                             long long path_budget = 1000000);

}  // namespace dectab
