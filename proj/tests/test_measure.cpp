#include "dectab/measure.hpp"
#include "doctest.h"

using dectab::check_limited;
using dectab::ComplexityMeasure;
using dectab::MeasureKind;
using dectab::ParseError;
using dectab::Word;

TEST_CASE("depth and weighted evaluation") {
  auto h = dectab::depth_measure();
  CHECK(h.evaluate({"f1", "f2", "f3"}) == 3);
  CHECK(h.evaluate({}) == 0);
  CHECK(h.additive());

  auto w = dectab::weighted_measure({{"f1", 2}, {"f2", 3}});
  CHECK(w.evaluate({"f1", "f2"}) == 5);
  CHECK(w.evaluate({"f2", "f2"}) == 6);
  CHECK(w.value_at_lambda() == 0);
  CHECK(w.additive());
  CHECK_THROWS_WITH_AS(w.evaluate({"f9"}), "weight undefined for attribute f9",
                       std::runtime_error);
  CHECK_THROWS_AS(dectab::weighted_measure({{"f1", 0}}), std::invalid_argument);

  // Depth is the all-ones weighted measure.
  auto ones = dectab::weighted_measure({{"f1", 1}, {"f2", 1}});
  for (const Word& word :
       {Word{}, Word{"f1"}, Word{"f1", "f2"}, Word{"f2", "f1", "f1"}}) {
    CHECK(h.evaluate(word) == ones.evaluate(word));
  }
}

TEST_CASE("mu depends on index order") {
  auto mu = dectab::mu_measure();
  CHECK(mu.evaluate({}) == 0);
  CHECK(mu.evaluate({"l_5"}) == 1);
  CHECK(mu.evaluate({"l_2", "l_1"}) == 1);
  CHECK(mu.evaluate({"l_1", "l_2"}) == 2);
  CHECK(mu.evaluate({"l_9", "l_2"}) == 1);
  CHECK(mu.evaluate({"l_2", "l_3"}) == 3);
  CHECK(mu.evaluate({"l_2", "l_2"}) == 2);
  CHECK(mu.evaluate({"l_3", "l_1", "l_2"}) == 3);
  CHECK_FALSE(mu.additive());
  CHECK_THROWS_AS(mu.evaluate({"plain"}), std::runtime_error);

  CHECK(dectab::attribute_index("l_7") == 7);
  CHECK(dectab::attribute_index("g_13") == 13);
  CHECK_FALSE(dectab::attribute_index("f").has_value());
  CHECK_FALSE(dectab::attribute_index("123").has_value());
}

TEST_CASE("union point and union family") {
  auto p3 = dectab::union_point_measure(3);
  CHECK(p3.evaluate({}) == 0);
  CHECK(p3.evaluate({"a_3"}) == 3);
  CHECK(p3.evaluate({"a_3", "b_3"}) == 4);
  CHECK(p3.evaluate({"a_3", "b_3", "c_3"}) == 4);
  CHECK_FALSE(p3.additive());

  auto fam = dectab::union_family_measure({0, 3, 6});
  CHECK(fam.evaluate({"a_3", "b_3"}) == 4);
  CHECK(fam.evaluate({"a_3", "b_6"}) == 0);  // mixed indices
  CHECK(fam.evaluate({"a_4"}) == 0);         // index outside K
  CHECK(fam.evaluate({"x_3"}) == 0);         // foreign letter
  CHECK(fam.evaluate({"a_0"}) == 0);
  CHECK(fam.evaluate({"a_0", "c_0"}) == 1);
  CHECK(fam.evaluate({}) == 0);

  // On the single-index alphabet the family measure is the point measure.
  for (int i : {0, 3, 6}) {
    auto pi = dectab::union_point_measure(i);
    std::string s = std::to_string(i);
    std::vector<std::string> letters = {"a_" + s, "b_" + s, "c_" + s};
    for (const auto& x : letters) {
      CHECK(fam.evaluate({x}) == pi.evaluate({x}));
      for (const auto& y : letters) {
        CHECK(fam.evaluate({x, y}) == pi.evaluate({x, y}));
        for (const auto& z : letters) {
          CHECK(fam.evaluate({x, y, z}) == pi.evaluate({x, y, z}));
        }
      }
    }
  }
}

TEST_CASE("table driven lookup flags the default region") {
  ComplexityMeasure m;
  m.kind = MeasureKind::TableDriven;
  m.table_length_bound = 4;
  m.table_default = 7;
  m.table[{"f1", "f2"}] = 5;
  m.table[{}] = 0;
  bool used_default = false;
  CHECK(m.evaluate_flagged({"f1", "f2"}, &used_default) == 5);
  CHECK_FALSE(used_default);
  CHECK(m.evaluate_flagged({"f3"}, &used_default) == 7);
  CHECK(used_default);
  CHECK(m.value_at_lambda() == 0);
  CHECK_FALSE(m.additive());
}

TEST_CASE("limited property check") {
  auto h = dectab::depth_measure();
  auto rh = check_limited(h, {"f1", "f2"}, 4);
  CHECK(rh.limited_in_window());
  CHECK(rh.counterexamples.empty());
  CHECK(rh.verified_window == 4);
  CHECK(rh.words_checked == 1 + 2 + 4 + 8 + 16);

  auto rw = check_limited(dectab::weighted_measure({{"f1", 2}, {"f2", 3}}), {"f1", "f2"}, 4);
  CHECK(rw.limited_in_window());

  // pi returns 0 on nonempty words, breaking the length bound immediately.
  // It is still additive: every word sums zero-valued letters.
  auto rp = check_limited(dectab::constant_zero_measure(), {"f"}, 1);
  CHECK(dectab::constant_zero_measure().additive());
  CHECK(rp.holds_a);
  CHECK(rp.holds_b);
  CHECK_FALSE(rp.holds_c);
  REQUIRE(rp.counterexamples.size() == 1);
  CHECK(rp.counterexamples[0].property == 'c');
  CHECK(rp.counterexamples[0].words[0] == Word{"f"});

  // Union point values cap at i+1, so words of length i+2 break (c).
  auto r1 = check_limited(dectab::union_point_measure(1), {"a_1", "b_1", "c_1"}, 4);
  CHECK_FALSE(r1.holds_c);
  bool found_len3 = false;
  for (const auto& ce : r1.counterexamples) {
    if (ce.property == 'c' && ce.words[0].size() == 3 && ce.values[0] == 2) found_len3 = true;
  }
  CHECK(found_len3);

  // Ascending pairs break subadditivity for mu: mu(l_2 l_3) = 3 > 1 + 1.
  auto rm = check_limited(dectab::mu_measure(), {"l_2", "l_3"}, 2);
  CHECK_FALSE(rm.holds_a);
  bool found_pair = false;
  for (const auto& ce : rm.counterexamples) {
    if (ce.property == 'a' && ce.words[0] == Word{"l_2", "l_3"} && ce.values[0] == 3) {
      found_pair = true;
    }
  }
  CHECK(found_pair);

  // Descending pairs break the length bound: mu(l_9 l_2) = 1 < 2.
  auto rd = check_limited(dectab::mu_measure(), {"l_2", "l_9"}, 2);
  CHECK_FALSE(rd.holds_c);

  CHECK_THROWS_AS(check_limited(h, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_limited(h, {"f"}, 0), std::invalid_argument);
}

TEST_CASE("path words reduce to attribute words") {
  dectab::QueryWord path{{"f1", 0}, {"f2", 1}};
  CHECK(dectab::extend_to_tree_word(path) == Word{"f1", "f2"});
  CHECK(dectab::extend_to_tree_word({}) == Word{});
  CHECK(dectab::extend_to_tree_word({{"f3", 1}}) == Word{"f3"});
}

TEST_CASE("dmeas format round-trips") {
  for (const std::string text : {
           "measure depth\n",
           "measure weighted f1=2 f2=3\n",
           "measure pi\n",
           "measure mu\n",
           "measure union-point i=3\n",
           "measure union-family K=0,3,6\n",
           "measure table L=4 default=7\nword = 0\nword f1 f2 = 5\n",
       }) {
    auto m = dectab::parse_dmeas(text);
    CHECK(dectab::print_dmeas(m) == text);
    auto again = dectab::parse_dmeas(dectab::print_dmeas(m));
    CHECK(dectab::print_dmeas(again) == text);
  }
  // Entries normalize: weights sort by name, K sorts and dedups.
  CHECK(dectab::print_dmeas(dectab::parse_dmeas("measure weighted f2=3 f1=2\n")) ==
        "measure weighted f1=2 f2=3\n");
  CHECK(dectab::print_dmeas(dectab::parse_dmeas("measure union-family K=6,0,3,3\n")) ==
        "measure union-family K=0,3,6\n");
}

TEST_CASE("dmeas parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      dectab::parse_dmeas(text, "bad.dmeas");
    } catch (const ParseError& e) {
      return e.line_number;
    }
    return -1;
  };
  CHECK(line_of("measure spectral\n") == 1);
  CHECK(line_of("measure weighted f1\n") == 1);
  CHECK(line_of("measure weighted f1=0\n") == 1);
  CHECK(line_of("measure union-point j=3\n") == 1);
  CHECK(line_of("measure union-family K=\n") == 1);
  CHECK(line_of("measure table L=2\n") == 1);
  CHECK(line_of("measure depth\nword f1 = 2\n") == 2);
  CHECK(line_of("measure table L=2 default=0\nword f1 f2 f3 = 1\n") == 2);
  CHECK(line_of("measure table L=2 default=0\nword f1 = 1\nword f1 = 2\n") == 3);
  CHECK(line_of("measure depth\nmeasure pi\n") == 2);
  CHECK(line_of("") == 0);
}
