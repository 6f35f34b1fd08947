#include <algorithm>

#include "dectab/table.hpp"
#include "dectab/table_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using dectab::DecisionTable;
using dectab::ParseError;
using dectab::QueryWord;
using dectab::Row;

TEST_CASE("decision sets normalize and reject empties") {
  CHECK(dectab::make_decision_set({3, 1, 2, 1}) == dectab::DecisionSet{1, 2, 3});
  CHECK_THROWS_AS(dectab::make_decision_set({}), std::invalid_argument);
  CHECK_THROWS_AS(dectab::make_decision_set({-1}), std::invalid_argument);
}

TEST_CASE("construction validates shape") {
  CHECK_THROWS_WITH_AS(fixtures::make_table("X", 1, {"f1"}, {}),
                       "k must be at least 2", std::invalid_argument);
  CHECK_THROWS_AS(fixtures::make_table("X", 2, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(fixtures::make_table("X", 2, {"f1"}, {{{0, 0}, {1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fixtures::make_table("X", 2, {"f1"}, {{{2}, {1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fixtures::make_table("X", 2, {"f1"}, {{{0}, {1}}, {{0}, {2}}}),
      std::invalid_argument);
  // Two columns named f1 must agree in every row.
  CHECK_THROWS_AS(
      fixtures::make_table("X", 2, {"f1", "f1"}, {{{0, 1}, {1}}}),
      std::invalid_argument);
  CHECK_NOTHROW(fixtures::t3());
}

TEST_CASE("attribute set collapses duplicates and sorts") {
  CHECK(fixtures::t1().attributes() == std::vector<std::string>{"f1", "f2"});
  CHECK(fixtures::t3().attributes() == std::vector<std::string>{"f1", "f3"});
  CHECK(fixtures::t3().columns() == 3);
}

TEST_CASE("common decisions and degeneracy") {
  auto t1 = fixtures::t1();
  auto c1 = t1.common_decisions();
  CHECK_FALSE(c1.all);
  CHECK(c1.values.empty());
  CHECK_FALSE(t1.is_degenerate());

  auto d2 = fixtures::d2();
  auto c2 = d2.common_decisions();
  CHECK_FALSE(c2.all);
  CHECK(c2.values == dectab::DecisionSet{1});
  CHECK(d2.is_degenerate());

  auto d1 = fixtures::d1();
  CHECK(d1.common_decisions().all);
  CHECK(d1.is_degenerate());
  CHECK(d1.row_count() == 0);

  auto single = fixtures::make_table("S", 2, {"f1"}, {{{0}, {7}}});
  CHECK(single.is_degenerate());
}

static QueryWord word(std::vector<std::pair<std::string, int>> steps) {
  QueryWord w;
  for (auto& [a, v] : steps) w.push_back({a, static_cast<uint8_t>(v)});
  return w;
}

TEST_CASE("subtables filter rows and keep columns") {
  auto t1 = fixtures::t1();
  auto s = t1.subtable(word({{"f1", 1}}));
  CHECK(s.attrs() == t1.attrs());
  REQUIRE(s.row_count() == 2);
  CHECK(s.rows()[0].values == std::vector<uint8_t>{1, 0});
  CHECK(s.rows()[0].decisions == dectab::DecisionSet{2, 3});
  CHECK(s.rows()[1].values == std::vector<uint8_t>{1, 1});
  CHECK(s.rows()[1].decisions == dectab::DecisionSet{4});

  auto t2 = fixtures::t2();
  auto z = t2.subtable(word({{"f1", 0}, {"f2", 0}, {"f3", 0}}));
  REQUIRE(z.row_count() == 1);
  CHECK(z.rows()[0].values == std::vector<uint8_t>{0, 0, 0});
  CHECK(z.rows()[0].decisions == dectab::DecisionSet{1, 2, 3});

  // The empty word selects the whole table.
  CHECK(t2.subtable({}).row_count() == t2.row_count());

  // Restricting a duplicated attribute applies to both columns.
  auto t3 = fixtures::t3();
  auto s3 = t3.subtable(word({{"f1", 1}}));
  REQUIRE(s3.row_count() == 2);
  CHECK(s3.rows()[0].values == std::vector<uint8_t>{1, 1, 0});

  CHECK_THROWS_WITH_AS(t1.subtable(word({{"f9", 0}})),
                       "attribute not in At(T): f9", std::invalid_argument);
}

TEST_CASE("subtable chains only shrink and are idempotent") {
  auto t2 = fixtures::t2();
  std::vector<std::string> names = {"f1", "f2", "f3"};
  for (const auto& a : names) {
    for (int va = 0; va < 2; ++va) {
      auto sa = t2.subtable(word({{a, va}}));
      CHECK(sa.row_count() <= t2.row_count());
      auto again = sa.subtable(word({{a, va}}));
      CHECK(dectab::print_dtab(again) == dectab::print_dtab(sa));
      for (const auto& b : names) {
        for (int vb = 0; vb < 2; ++vb) {
          auto sab = t2.subtable(word({{a, va}, {b, vb}}));
          CHECK(sab.row_count() <= sa.row_count());
        }
      }
    }
  }
  // Subtables of a degenerate table stay degenerate.
  auto d2 = fixtures::d2();
  for (const auto& a : names) {
    for (int v = 0; v < 2; ++v) {
      CHECK(d2.subtable(word({{a, v}})).is_degenerate());
    }
  }
}

TEST_CASE("m parameter at a tuple") {
  auto t1 = fixtures::t1();
  CHECK(t1.m_parameter_at({0, 0}) == 2);
  CHECK(t1.m_parameter_at({1, 0}) == 2);
  CHECK(t1.m_parameter_at({0, 1}) == 2);
  CHECK(t1.m_parameter_at({1, 1}) == 2);

  auto t2 = fixtures::t2();
  CHECK(t2.m_parameter_at({0, 0, 0}) == 1);
  CHECK(t2.m_parameter_at({1, 0, 0}) == 1);

  CHECK_THROWS_AS(fixtures::d2().m_parameter_at({0, 0, 0}), std::logic_error);
  // Conflicting components for a duplicated attribute are rejected.
  CHECK_THROWS_AS(fixtures::t3().m_parameter_at({0, 1, 0}), std::invalid_argument);
  CHECK(fixtures::t3().m_parameter_at({0, 0, 0}) >= 1);
}

TEST_CASE("m parameter over all tuples") {
  CHECK(fixtures::t1().m_parameter() == 2);
  CHECK(fixtures::t2().m_parameter() == 1);
  CHECK(fixtures::d2().m_parameter() == 0);
  CHECK(fixtures::d1().m_parameter() == 0);
  auto q = fixtures::q();
  int m = q.m_parameter();
  CHECK(m >= 1);
  CHECK(m <= q.columns());
}

TEST_CASE("dtab format round-trips") {
  std::string text =
      "table T1\n"
      "k 2\n"
      "attrs f1 f2\n"
      "row 0 0 : 1\n"
      "row 1 0 : 2 3\n"
      "row 0 1 : 2\n"
      "row 1 1 : 4\n";
  auto t = dectab::parse_dtab(text, "T1.dtab");
  CHECK(t.name() == "T1");
  CHECK(t.row_count() == 4);
  CHECK(dectab::print_dtab(t) == text);
  CHECK(dectab::print_dtab(dectab::parse_dtab(dectab::print_dtab(t))) == text);

  // Comments and blank lines are dropped, decisions get sorted.
  std::string messy =
      "# header comment\n"
      "table T1\n\n"
      "k 2\n"
      "attrs f1 f2\n"
      "row 0 0 : 1  # trailing comment\n"
      "row 1 0 : 3 2\n"
      "row 0 1 : 2\n"
      "row 1 1 : 4\n";
  auto m = dectab::parse_dtab(messy);
  CHECK(m.rows()[1].decisions == dectab::DecisionSet{2, 3});

  // A table with no row lines is the empty table.
  auto empty = dectab::parse_dtab("table D1\nk 2\nattrs f1 f2\n");
  CHECK(empty.row_count() == 0);
  CHECK(dectab::print_dtab(empty) == "table D1\nk 2\nattrs f1 f2\n");
}

TEST_CASE("dtab parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      dectab::parse_dtab(text, "bad.dtab");
    } catch (const ParseError& e) {
      return e.line_number;
    }
    return -1;
  };
  CHECK(line_of("table X\nk 2\nattrs f1\nrow 0 1\n") == 4);       // missing ':'
  CHECK(line_of("table X\nk 2\nattrs f1\nspam\n") == 4);          // unknown directive
  CHECK(line_of("table X\nk zz\nattrs f1\n") == 2);               // bad integer
  CHECK(line_of("table X\nk 2\nattrs f1\nrow 0 0 : 1\n") == 4);   // width mismatch
  CHECK(line_of("table X\ntable Y\n") == 2);                      // duplicate directive
  CHECK(line_of("row 0 : 1\n") == 1);                             // row before header
  CHECK(line_of("k 2\nattrs f1\nrow 0 : 1\n") == 3);              // row rejected while table directive missing
  CHECK(line_of("table X\nk 2\nattrs f1\nrow 0 :\n") == 4);       // no decisions
  CHECK(line_of("table X\nk 2\nattrs f1\nrow 7 : 1\n") == 4);     // value outside E_k
  CHECK(line_of("") == 0);                                        // missing directives
}
