#include <stdexcept>
#include <string>
#include <vector>

#include "dectab/closure.hpp"
#include "dectab/infosys.hpp"
#include "dectab/table.hpp"
#include "dectab/table_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dectab;

namespace {

DecisionSet ds(std::vector<int> v) { return make_decision_set(std::move(v)); }

// total nu over the value cube: named tuples get their sets, the rest {0}
std::map<std::vector<uint8_t>, DecisionSet> fill_nu(
    size_t n, std::map<std::vector<uint8_t>, DecisionSet> named) {
  std::vector<uint8_t> tuple(n, 0);
  while (true) {
    named.emplace(tuple, DecisionSet{0});
    size_t pos = n;
    while (pos > 0 && tuple[pos - 1] == 1) tuple[--pos] = 0;
    if (pos == 0) break;
    ++tuple[pos - 1];
  }
  return named;
}

// problem whose table should reproduce `target` over `sys` exactly
ProblemSpec problem_matching(const DecisionTable& target) {
  ProblemSpec z;
  z.attrs = target.attrs();
  std::map<std::vector<uint8_t>, DecisionSet> named;
  for (const auto& row : target.rows()) named[row.values] = row.decisions;
  z.nu = fill_nu(z.attrs.size(), std::move(named));
  return z;
}

void check_generable(const InfoSystem& sys, const DecisionTable& result) {
  auto regenerated = table_of_problem(sys, problem_matching(result), "probe");
  DecisionTable expected = result;
  expected.set_name("probe");
  CHECK(print_dtab(regenerated.table) == print_dtab(expected));
}

}  // namespace

TEST_CASE("builtin attribute evaluation") {
  auto u3 = builtin_system(SystemId::U3, 4);
  CHECK(system_value(u3, "l_2", 2) == 0);
  CHECK(system_value(u3, "l_2", 3) == 1);
  CHECK(system_value(u3, "l_4", 0) == 0);
  CHECK(system_value(u3, "l_4", 5) == 1);

  auto u5 = builtin_system(SystemId::U5, 4);
  CHECK(system_value(u5, "f_4", 4) == 1);
  CHECK(system_value(u5, "f_4", 3) == 0);
  CHECK(system_value(u5, "f_4", 5) == 0);
  CHECK(system_value(u5, "f_1", 0) == 0);

  auto u6 = builtin_system(SystemId::U6, 5);
  CHECK(system_value(u6, "g_3", 3) == 1);
  CHECK(system_value(u6, "g_3", 4) == 1);
  CHECK(system_value(u6, "g_3", 5) == 0);
  CHECK(system_value(u6, "g_3", 2) == 0);
  CHECK(system_value(u6, "f_2", 2) == 1);

  auto u1 = builtin_system(SystemId::U1, 0);
  CHECK(system_value(u1, "f", 0) == 0);
  CHECK(system_value(u1, "f", 100) == 0);

  CHECK_THROWS_AS(system_value(u3, "f_2", 1), std::invalid_argument);
  CHECK_THROWS_AS(system_value(u3, "l_2", -1), std::invalid_argument);
}

TEST_CASE("family membership and listings") {
  auto u3 = builtin_system(SystemId::U3, 2);
  CHECK(system_has_attribute(u3, "l_1"));
  CHECK(system_has_attribute(u3, "l_2"));
  CHECK_FALSE(system_has_attribute(u3, "l_3"));   // beyond the range
  CHECK_FALSE(system_has_attribute(u3, "l_0"));   // subscripts start at one
  CHECK_FALSE(system_has_attribute(u3, "f_1"));
  CHECK_FALSE(system_has_attribute(u3, "l_"));
  CHECK(system_attributes(u3) == std::vector<std::string>{"l_1", "l_2"});

  auto u6 = builtin_system(SystemId::U6, 3);
  CHECK(system_has_attribute(u6, "g_1"));
  CHECK(system_has_attribute(u6, "g_3"));
  CHECK_FALSE(system_has_attribute(u6, "g_2"));   // even subscripts do not exist
  CHECK_FALSE(system_has_attribute(u6, "g_5"));
  CHECK(system_attributes(u6) ==
        std::vector<std::string>{"f_1", "f_2", "f_3", "g_1", "g_3"});

  auto u7 = builtin_system(SystemId::U7, 2);
  CHECK(system_has_attribute(u7, "l_2"));
  CHECK(system_has_attribute(u7, "f_2"));
  CHECK_FALSE(system_has_attribute(u7, "g_1"));

  auto u2 = builtin_system(SystemId::U2, 0);
  CHECK(system_has_attribute(u2, "f"));
  CHECK_FALSE(system_has_attribute(u2, "f_1"));
  CHECK(system_attributes(u2) == std::vector<std::string>{"f"});

  CHECK(parse_system_id("U4") == SystemId::U4);
  CHECK_FALSE(parse_system_id("U8").has_value());
  CHECK(system_id_name(SystemId::U6) == "U6");
  CHECK_THROWS_AS(builtin_system(SystemId::custom, 3), std::invalid_argument);
  CHECK_THROWS_AS(builtin_system(SystemId::U3, 0), std::invalid_argument);
}

TEST_CASE("threshold problem realizes three rows") {
  auto sys = builtin_system(SystemId::U3, 2);
  sys.universe_bound = 5;
  ProblemSpec z;
  z.attrs = {"l_1", "l_2"};
  z.nu = fill_nu(2, {{{0, 0}, ds({1})}, {{1, 0}, ds({2})}, {{1, 1}, ds({3})}});
  auto gen = table_of_problem(sys, z, "thr");
  CHECK(print_dtab(gen.table) ==
        "table thr\nk 2\nattrs l_1 l_2\n"
        "row 0 0 : 1\nrow 1 0 : 2\nrow 1 1 : 3\n");
  CHECK(gen.universe_bound == 5);
  CHECK(gen.saturation_bound == 4);
  CHECK(gen.saturated);
}

TEST_CASE("indicator problem realizes three rows") {
  auto sys = builtin_system(SystemId::U5, 2);
  sys.universe_bound = 3;
  ProblemSpec z;
  z.attrs = {"f_1", "f_2"};
  z.nu = fill_nu(2, {{{0, 0}, ds({3})}, {{1, 0}, ds({1})}, {{0, 1}, ds({2})}});
  auto gen = table_of_problem(sys, z, "ind");
  CHECK(print_dtab(gen.table) ==
        "table ind\nk 2\nattrs f_1 f_2\n"
        "row 0 0 : 3\nrow 1 0 : 1\nrow 0 1 : 2\n");
  CHECK(gen.saturation_bound == 3);
  CHECK(gen.saturated);
}

TEST_CASE("constant problem and saturation flags") {
  auto sys = builtin_system(SystemId::U1, 0);
  sys.universe_bound = 0;
  ProblemSpec z;
  z.attrs = {"f"};
  z.nu = fill_nu(1, {{{0}, ds({5})}});
  auto gen = table_of_problem(sys, z);
  CHECK(gen.table.row_count() == 1);
  CHECK(gen.table.rows()[0].decisions == ds({5}));
  CHECK(gen.saturation_bound == 0);
  CHECK(gen.saturated);

  // a threshold the universe never crosses leaves the table unsaturated
  auto narrow = builtin_system(SystemId::U3, 5);
  narrow.universe_bound = 3;
  ProblemSpec high;
  high.attrs = {"l_5"};
  high.nu = fill_nu(1, {});
  auto cut = table_of_problem(narrow, high);
  CHECK(cut.table.row_count() == 1);
  CHECK(cut.saturation_bound == 7);
  CHECK_FALSE(cut.saturated);

  // repeated attributes stay legal and agree columnwise
  auto pairs = builtin_system(SystemId::U3, 2);
  pairs.universe_bound = 4;
  ProblemSpec rep;
  rep.attrs = {"l_2", "l_2"};
  rep.nu = fill_nu(2, {});
  auto both = table_of_problem(pairs, rep);
  CHECK(both.table.columns() == 2);
  CHECK(both.table.row_count() == 2);
}

TEST_CASE("problem validation errors") {
  auto sys = builtin_system(SystemId::U3, 2);
  ProblemSpec z;
  z.attrs = {"l_1"};
  z.nu = fill_nu(1, {});
  CHECK_THROWS_WITH_AS(table_of_problem(sys, z), "universe bound not set",
                       std::invalid_argument);

  sys.universe_bound = 4;
  ProblemSpec empty;
  empty.nu = fill_nu(0, {});
  CHECK_THROWS_WITH_AS(table_of_problem(sys, empty),
                       "a problem needs at least one attribute",
                       std::invalid_argument);

  ProblemSpec foreign;
  foreign.attrs = {"l_9"};
  foreign.nu = fill_nu(1, {});
  CHECK_THROWS_WITH_AS(table_of_problem(sys, foreign),
                       "attribute l_9 not in the system", std::invalid_argument);

  ProblemSpec partial;
  partial.attrs = {"l_1", "l_2"};
  partial.nu[{0, 0}] = ds({1});
  partial.nu[{1, 0}] = ds({1});
  partial.nu[{1, 1}] = ds({1});
  CHECK_THROWS_WITH_AS(table_of_problem(sys, partial),
                       "nu is undefined on tuple 01", std::invalid_argument);

  ProblemSpec bad_set;
  bad_set.attrs = {"l_1"};
  bad_set.nu[{0}] = {};
  bad_set.nu[{1}] = ds({1});
  CHECK_THROWS_AS(table_of_problem(sys, bad_set), std::invalid_argument);
}

TEST_CASE("custom tabulated families") {
  InfoSystem sys;
  sys.tabulated["x"] = {0, 1, 1, 0};
  sys.tabulated["y"] = {0, 0, 1, 1};
  sys.universe_bound = 3;
  CHECK(system_has_attribute(sys, "x"));
  CHECK_FALSE(system_has_attribute(sys, "z"));
  CHECK(system_attributes(sys) == std::vector<std::string>{"x", "y"});
  CHECK(system_value(sys, "x", 1) == 1);

  ProblemSpec z;
  z.attrs = {"x", "y"};
  z.nu = fill_nu(2, {});
  auto gen = table_of_problem(sys, z);
  CHECK(gen.table.row_count() == 4);  // 00, 10, 11, 01 all realized
  CHECK_FALSE(gen.saturation_bound.has_value());
  CHECK_FALSE(gen.saturated);

  sys.universe_bound = 7;
  CHECK_THROWS_WITH_AS(table_of_problem(sys, z),
                       "attribute x not tabulated up to the universe bound",
                       std::invalid_argument);
}

TEST_CASE("indicator triple table") {
  CHECK(print_dtab(g_table(2)) == print_dtab(fixtures::g_table(2)));
  auto g7 = g_table(7);
  CHECK(g7.attrs() == std::vector<std::string>{"a_7", "b_7", "c_7"});
  CHECK(g7.row_count() == 3);
  CHECK_FALSE(g7.is_degenerate());
  CHECK_THROWS_AS(g_table(-1), std::invalid_argument);
}

TEST_CASE("operation results stay generable from a problem") {
  auto u3 = builtin_system(SystemId::U3, 3);
  u3.universe_bound = 5;
  ProblemSpec z3;
  z3.attrs = {"l_1", "l_2", "l_3"};
  z3.nu = fill_nu(3, {{{0, 0, 0}, ds({1})},
                      {{1, 0, 0}, ds({2, 3})},
                      {{1, 1, 0}, ds({2})},
                      {{1, 1, 1}, ds({4})}});
  auto base3 = table_of_problem(u3, z3).table;
  CHECK(base3.row_count() == 4);

  auto u5 = builtin_system(SystemId::U5, 3);
  u5.universe_bound = 4;
  ProblemSpec z5;
  z5.attrs = {"f_1", "f_2", "f_3"};
  z5.nu = fill_nu(3, {{{0, 0, 0}, ds({1, 2})},
                      {{1, 0, 0}, ds({1})},
                      {{0, 1, 0}, ds({2})},
                      {{0, 0, 1}, ds({3})}});
  auto base5 = table_of_problem(u5, z5).table;
  CHECK(base5.row_count() == 4);

  struct Case {
    InfoSystem sys;
    DecisionTable base;
  };
  for (const auto& [sys, base] : {Case{u3, base3}, Case{u5, base5}}) {
    check_generable(sys, remove_column(base, 0));
    check_generable(sys, remove_column(base, 2));
    check_generable(sys, permute_columns(base, {2, 0, 1}));
    check_generable(sys, duplicate_column(base, 1));

    std::vector<DecisionSet> flipped;
    for (int r = 0; r < base.row_count(); ++r) {
      flipped.push_back(ds({r + 10}));
    }
    check_generable(sys, change_decisions(base, flipped));
  }
}
