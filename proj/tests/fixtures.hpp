// Shared tables used across the test suite.
#pragma once

#include <string>
#include <vector>

#include "dectab/table.hpp"

namespace fixtures {

inline dectab::DecisionTable make_table(
    std::string name, int k, std::vector<std::string> attrs,
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rows) {
  std::vector<dectab::Row> rs;
  for (auto& [vals, decs] : rows) {
    dectab::Row r;
    for (int v : vals) r.values.push_back(static_cast<uint8_t>(v));
    r.decisions = decs;
    rs.push_back(std::move(r));
  }
  return dectab::DecisionTable(std::move(name), k, std::move(attrs), std::move(rs));
}

// Two binary attributes, one many-valued row.
inline dectab::DecisionTable t1() {
  return make_table("T1", 2, {"f1", "f2"},
                    {{{0, 0}, {1}}, {{1, 0}, {2, 3}}, {{0, 1}, {2}}, {{1, 1}, {4}}});
}

inline dectab::DecisionTable t2() {
  return make_table("T2", 2, {"f1", "f2", "f3"},
                    {{{1, 0, 0}, {1, 2}},
                     {{0, 1, 0}, {1, 3}},
                     {{0, 0, 1}, {4}},
                     {{0, 0, 0}, {1, 2, 3}}});
}

// Duplicated attribute f1 in two columns.
inline dectab::DecisionTable t3() {
  return make_table("T3", 2, {"f1", "f1", "f3"},
                    {{{0, 0, 0}, {1, 3}}, {{1, 1, 0}, {1}}, {{0, 0, 1}, {2}}, {{1, 1, 1}, {1, 2}}});
}

// Degenerate: no rows at all.
inline dectab::DecisionTable d1() {
  return make_table("D1", 2, {"f1", "f2"}, {});
}

// Degenerate: decision 1 is common to every row.
inline dectab::DecisionTable d2() {
  return make_table("D2", 2, {"f1", "f2", "f3"},
                    {{{1, 0, 0}, {1, 2}}, {{0, 1, 0}, {1, 3}}, {{0, 0, 0}, {1, 2, 3}}});
}

// Three rows with pairwise disjoint decisions; needs two queries both ways.
inline dectab::DecisionTable q() {
  return make_table("Q", 2, {"f1", "f2"},
                    {{{1, 0}, {1}}, {{0, 1}, {2}}, {{0, 0}, {3}}});
}

// Three indicator columns a_i, b_i, c_i with singleton decisions.
inline dectab::DecisionTable g_table(int i) {
  std::string s = std::to_string(i);
  return make_table("G" + s, 2, {"a_" + s, "b_" + s, "c_" + s},
                    {{{1, 0, 0}, {1}}, {{0, 1, 0}, {2}}, {{0, 0, 1}, {3}}});
}

}  // namespace fixtures
