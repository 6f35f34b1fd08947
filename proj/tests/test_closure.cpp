#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dectab/closure.hpp"
#include "dectab/table.hpp"
#include "dectab/table_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dectab;

namespace {

// Independent count of r-tuples of nonempty subsets of {0..labels-1} up to
// injective relabeling: minimize the printed tuple over all label bijections.
int pattern_count(int rows, int labels) {
  int subsets = (1 << labels) - 1;
  std::set<std::string> classes;
  std::vector<int> pick(rows, 1);
  while (true) {
    std::string best;
    std::vector<int> perm(labels);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::string enc;
      for (int mask : pick) {
        std::vector<int> set;
        for (int d = 0; d < labels; ++d) {
          if (mask & (1 << d)) set.push_back(perm[d]);
        }
        std::sort(set.begin(), set.end());
        for (int d : set) enc += static_cast<char>('0' + d);
        enc += '/';
      }
      if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);

    int at = 0;
    while (at < rows && ++pick[at] > subsets) {
      pick[at] = 1;
      ++at;
    }
    if (at == rows) break;
  }
  return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("remove column") {
  auto t2 = fixtures::t2();
  auto no_f3 = remove_column(t2, 2);
  CHECK(print_dtab(no_f3) ==
        "table T2\n"
        "k 2\n"
        "attrs f1 f2\n"
        "row 1 0 : 1 2\n"
        "row 0 1 : 1 3\n"
        "row 0 0 : 4\n");

  auto t2_prime = remove_column(no_f3, 1);
  CHECK(print_dtab(t2_prime) ==
        "table T2\n"
        "k 2\n"
        "attrs f1\n"
        "row 1 : 1 2\n"
        "row 0 : 1 3\n");

  CHECK_THROWS_WITH_AS(remove_column(t2_prime, 0), "cannot remove last column",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(remove_column(t2, 3), "column index out of range",
                       std::invalid_argument);

  // no dedup when the remaining rows stay distinct
  auto plain = fixtures::make_table("P", 2, {"f1", "f2"},
                                    {{{0, 0}, {1}}, {{1, 1}, {2}}});
  auto kept = remove_column(plain, 0);
  CHECK(kept.row_count() == 2);
  CHECK(print_dtab(kept) ==
        "table P\nk 2\nattrs f2\nrow 0 : 1\nrow 1 : 2\n");
}

TEST_CASE("change decisions") {
  auto t1 = fixtures::t1();
  auto t1_prime = change_decisions(t1, {{1, 4}, {2, 3}, {3}, {4}});
  CHECK(print_dtab(t1_prime) ==
        "table T1\n"
        "k 2\n"
        "attrs f1 f2\n"
        "row 0 0 : 1 4\n"
        "row 1 0 : 2 3\n"
        "row 0 1 : 3\n"
        "row 1 1 : 4\n");

  std::vector<DecisionSet> identity;
  for (const Row& row : t1.rows()) identity.push_back(row.decisions);
  CHECK(print_dtab(change_decisions(t1, identity)) == print_dtab(t1));

  auto zeroed = change_decisions(t1, {{0}, {0}, {0}, {0}});
  CHECK(zeroed.is_degenerate());
  CHECK(!t1.is_degenerate());

  CHECK_THROWS_WITH_AS(change_decisions(t1, {{1}, {}, {2}, {3}}),
                       "decision sets must be nonempty", std::invalid_argument);
  CHECK_THROWS_WITH_AS(change_decisions(t1, {{1}, {2}}),
                       "assignment must cover every row", std::invalid_argument);
}

TEST_CASE("permute columns") {
  auto t1 = fixtures::t1();
  auto t1_dprime = permute_columns(t1, {1, 0});
  CHECK(print_dtab(t1_dprime) ==
        "table T1\n"
        "k 2\n"
        "attrs f2 f1\n"
        "row 0 0 : 1\n"
        "row 0 1 : 2 3\n"
        "row 1 0 : 2\n"
        "row 1 1 : 4\n");

  CHECK(print_dtab(permute_columns(t1, {0, 1})) == print_dtab(t1));
  CHECK(print_dtab(permute_columns(t1_dprime, {1, 0})) == print_dtab(t1));

  for (auto bad : std::vector<std::vector<int>>{{0}, {0, 0}, {0, 5}, {-1, 0}}) {
    CHECK_THROWS_WITH_AS(permute_columns(t1, bad),
                         "permutation must be a bijection on the columns",
                         std::invalid_argument);
  }
}

TEST_CASE("duplicate column") {
  auto t2 = fixtures::t2();
  auto t2_dprime = duplicate_column(t2, 1);
  CHECK(print_dtab(t2_dprime) ==
        "table T2\n"
        "k 2\n"
        "attrs f1 f2 f2 f3\n"
        "row 1 0 0 0 : 1 2\n"
        "row 0 1 1 0 : 1 3\n"
        "row 0 0 0 1 : 4\n"
        "row 0 0 0 0 : 1 2 3\n");

  // removing the duplicate restores the table up to canonical form
  auto back = remove_column(t2_dprime, 2);
  CHECK(canonical_form(back).hash == canonical_form(t2).hash);
  CHECK(print_dtab(back) == print_dtab(t2));

  CHECK_THROWS_AS(duplicate_column(t2, 9), std::invalid_argument);
}

TEST_CASE("canonical form") {
  auto t1 = fixtures::t1();
  auto c1 = canonical_form(t1);
  CHECK(print_dtab(c1.table) ==
        "table T1\n"
        "k 2\n"
        "attrs f1 f2\n"
        "row 0 0 : 0\n"
        "row 0 1 : 1\n"
        "row 1 0 : 1 2\n"
        "row 1 1 : 3\n");

  // invariant under column permutation
  CHECK(canonical_form(permute_columns(t1, {1, 0})).hash == c1.hash);

  // invariant under injective decision relabeling
  auto renamed = change_decisions(t1, {{10}, {20, 30}, {20}, {40}});
  CHECK(canonical_form(renamed).hash == c1.hash);

  // the hash ignores the table name
  auto q_copy = fixtures::q();
  q_copy.set_name("Q1");
  CHECK(canonical_form(q_copy).hash == canonical_form(fixtures::q()).hash);

  // idempotent
  auto c3 = canonical_form(fixtures::t3());
  auto again = canonical_form(c3.table);
  CHECK(again.hash == c3.hash);
  CHECK(print_dtab(again.table) == print_dtab(c3.table));

  // duplicate multiplicity is part of the identity
  CHECK(canonical_form(duplicate_column(t1, 0)).hash != c1.hash);

  // relabeled sets re-sort when the renaming is not monotone
  auto skew = fixtures::make_table("S", 2, {"f1"}, {{{0}, {5}}, {{1}, {2, 5}}});
  CHECK(print_dtab(canonical_form(skew).table) ==
        "table S\nk 2\nattrs f1\nrow 0 : 0\nrow 1 : 0 1\n");

  // orbit mates split by plain first-occurrence renaming hash together
  auto wa = fixtures::make_table("W", 2, {"f1"}, {{{0}, {0, 1}}, {{1}, {0}}});
  auto wb = fixtures::make_table("W", 2, {"f1"}, {{{0}, {0, 1}}, {{1}, {1}}});
  CHECK(canonical_form(wa).hash == canonical_form(wb).hash);

  // permutations of all six column orders agree
  auto t2 = fixtures::t2();
  for (auto perm : std::vector<std::vector<int>>{
           {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}) {
    CHECK(canonical_form(permute_columns(t2, perm)).hash ==
          canonical_form(t2).hash);
  }
}

TEST_CASE("closure of the two-attribute generator") {
  ClosureConfig cfg;
  cfg.max_columns = 2;
  cfg.decision_universe = 2;
  cfg.max_tables = 100000;
  cfg.include_duplication = false;

  auto q = fixtures::q();
  auto result = enumerate_closure({q}, cfg);
  CHECK(!result.capped);

  // generators survive
  CHECK(result.contains(canonical_form(q).hash));

  // both single-column shapes appear with the inherited decisions
  CHECK(result.contains(canonical_form(remove_column(q, 0)).hash));
  CHECK(result.contains(canonical_form(remove_column(q, 1)).hash));

  // the degenerate all-{0} variant is reachable
  CHECK(result.contains(
      canonical_form(change_decisions(q, {{0}, {0}, {0}})).hash));

  for (const auto& c : result.tables) {
    CHECK(c.table.columns() <= 2);
    CHECK(c.table.k() == 2);
  }

  // shape census: the 3-row generator shape plus one 2-row shape per column
  int p3 = pattern_count(3, 3);
  int p2 = pattern_count(2, 3);
  CHECK(static_cast<int>(result.tables.size()) == p3 + 2 * p2);

  // fixed point: in-bound operations never leave the set
  for (const auto& c : result.tables) {
    if (c.table.columns() >= 2) {
      for (int i = 0; i < c.table.columns(); ++i) {
        CHECK(result.contains(canonical_form(remove_column(c.table, i)).hash));
      }
    }
    std::vector<DecisionSet> probe(c.table.row_count(), DecisionSet{0});
    if (!probe.empty()) {
      probe[0] = {0, 1, 2};
      CHECK(result.contains(canonical_form(change_decisions(c.table, probe)).hash));
    }
  }

  // deterministic output
  auto rerun = enumerate_closure({q}, cfg);
  REQUIRE(rerun.tables.size() == result.tables.size());
  for (size_t i = 0; i < result.tables.size(); ++i) {
    CHECK(rerun.tables[i].hash == result.tables[i].hash);
  }
}

TEST_CASE("closure cap and trivial generator") {
  ClosureConfig cfg;
  cfg.max_columns = 2;
  cfg.decision_universe = 2;
  cfg.max_tables = 3;
  auto capped = enumerate_closure({fixtures::q()}, cfg);
  CHECK(capped.capped);
  CHECK(capped.tables.size() == 3);

  // a single-cell table closes into one table per decision-set size
  auto cell = fixtures::make_table("S", 2, {"f1"}, {{{0}, {7}}});
  cfg.max_tables = 100000;
  auto small = enumerate_closure({cell}, cfg);
  CHECK(!small.capped);
  CHECK(small.tables.size() == 3);  // {0}, {0,1}, {0,1,2}
  for (const auto& c : small.tables) {
    CHECK(c.table.columns() == 1);
    CHECK(c.table.row_count() == 1);
  }

  CHECK_THROWS_AS(enumerate_closure({}, cfg), std::invalid_argument);
  ClosureConfig bad;
  bad.max_tables = 0;
  CHECK_THROWS_AS(enumerate_closure({cell}, bad), std::invalid_argument);
}

TEST_CASE("closure with duplication stays within the column bound") {
  ClosureConfig cfg;
  cfg.max_columns = 3;
  cfg.decision_universe = 1;
  cfg.include_duplication = true;
  auto result = enumerate_closure({fixtures::q()}, cfg);
  CHECK(!result.capped);
  CHECK(result.contains(canonical_form(duplicate_column(fixtures::q(), 0)).hash));
  for (const auto& c : result.tables) {
    CHECK(c.table.columns() <= 3);
  }
}

TEST_CASE("closure of an indicator-triple generator") {
  ClosureConfig cfg;
  cfg.max_columns = 3;
  cfg.decision_universe = 3;
  auto g2 = fixtures::g_table(2);
  auto result = enumerate_closure({g2}, cfg);
  CHECK(!result.capped);

  CHECK(result.contains(canonical_form(g2).hash));
  for (int i = 0; i < 3; ++i) {
    auto two_col = remove_column(g2, i);
    CHECK(result.contains(canonical_form(two_col).hash));
    for (int j = 0; j < 2; ++j) {
      CHECK(result.contains(canonical_form(remove_column(two_col, j)).hash));
    }
  }

  // one 3-column shape and three 2-column shapes keep all three rows;
  // the three 1-column shapes collapse to two rows
  int p3 = pattern_count(3, 4);
  int p2 = pattern_count(2, 4);
  CHECK(static_cast<int>(result.tables.size()) == 4 * p3 + 3 * p2);
}
