// The four table operations (column removal with first-row dedup, decision
// changes, column permutation, column duplication), a canonical form that
// quotients by column order and decision relabeling, and bounded closure
// enumeration.
#pragma once

#include <string>
#include <vector>

#include "dectab/table.hpp"

namespace dectab {

// Deletes the column at a 0-based position. Rows that become equal collapse
// to the first row of the group, which keeps its decision set.
DecisionTable remove_column(const DecisionTable& table, int index);

// Replaces every row's decision set; assignment[i] belongs to row i.
DecisionTable change_decisions(const DecisionTable& table,
                               const std::vector<DecisionSet>& assignment);

// Reorders columns: result column j is input column perm[j].
DecisionTable permute_columns(const DecisionTable& table,
                              const std::vector<int>& perm);

// Inserts a copy of the column at the given position directly after it.
DecisionTable duplicate_column(const DecisionTable& table, int index);

struct CanonicalTable {
  DecisionTable table;
  std::string hash;  // printable key; equal iff canonically equal
};

// Columns sorted by attribute name (duplicates keep their multiplicity),
// rows sorted by value tuple, decision labels renamed to first-occurrence
// order scanning rows top-down and set elements in ascending order.
CanonicalTable canonical_form(const DecisionTable& table);

struct ClosureConfig {
  int max_columns = 4;       // duplication never grows tables beyond this
  int decision_universe = 2; // decision labels range over {0..decision_universe}
  int max_tables = 100000;   // enumeration cap
  bool include_duplication = false;
};

struct ClosureResult {
  // Sorted by (column count, hash). Deterministic for fixed inputs.
  std::vector<CanonicalTable> tables;
  bool capped = false;

  bool contains(const std::string& hash) const;
};

// Fixed point of the operations over canonical classes, restricted to the
// config bounds. Column permutations never change the canonical class, so
// only removals, decision changes, and (optionally) duplications expand.
ClosureResult enumerate_closure(const std::vector<DecisionTable>& generators,
                                const ClosureConfig& cfg);

}  // namespace dectab
