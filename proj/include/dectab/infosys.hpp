#pragma once
// Attribute families over the natural numbers, problems posed over them,
// and the decision tables a problem realizes on a bounded universe.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dectab/table.hpp"

namespace dectab {

enum class SystemId { U1, U2, U3, U4, U5, U6, U7, custom };

std::optional<SystemId> parse_system_id(const std::string& text);
std::string system_id_name(SystemId id);

// A family of named 0/1 attributes on {0..universe_bound}. Built-in
// families evaluate by name pattern; a custom family tabulates each
// attribute point by point.
struct InfoSystem {
  SystemId id = SystemId::custom;
  int k = 2;
  int max_index = 0;       // largest attribute subscript admitted
  int universe_bound = -1; // inclusive; must be set before generating tables
  std::map<std::string, std::vector<uint8_t>> tabulated;
};

// U1/U2: the single constant attribute f.
// U3/U4: thresholds l_i, zero up to i and one after.
// U5: indicators f_i, one exactly at i.
// U6: indicators plus the odd-subscript pair attributes g_m, one on {m, m+1}.
// U7: thresholds and indicators together.
InfoSystem builtin_system(SystemId id, int max_index);

bool system_has_attribute(const InfoSystem& sys, const std::string& attr);
uint8_t system_value(const InfoSystem& sys, const std::string& attr, int point);
// every attribute name the bounded family admits, sorted
std::vector<std::string> system_attributes(const InfoSystem& sys);

struct ProblemSpec {
  std::vector<std::string> attrs;                  // may repeat
  std::map<std::vector<uint8_t>, DecisionSet> nu;  // total on value tuples
};

struct GeneratedTable {
  DecisionTable table;
  int universe_bound = 0;
  // smallest universe at which the family provably realizes every tuple this
  // problem can ever produce; unknown for custom families
  std::optional<int> saturation_bound;
  bool saturated = false;
};

// Rows are the value tuples realized on {0..universe_bound}, in order of
// first realization, labeled through nu.
GeneratedTable table_of_problem(const InfoSystem& sys, const ProblemSpec& z,
                                const std::string& name = "generated");

// three-column indicator table with pairwise disjoint decisions
DecisionTable g_table(int index);

}  // namespace dectab
