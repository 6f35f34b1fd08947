// Complexity measures on attribute words, with the .dmeas text format and a
// bounded checker for the subadditivity, deletion and length properties.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dectab/io_error.hpp"
#include "dectab/table.hpp"

namespace dectab {

// A word is a finite sequence of attribute names.
using Word = std::vector<std::string>;

enum class MeasureKind {
  Depth,        // word length
  Weighted,     // sum of per-attribute weights from N\{0}
  ConstantZero, // identically 0
  Mu,           // 1 for one letter or a descending pair, max index otherwise
  UnionPoint,   // i for one letter, i+1 for two or more
  UnionFamily,  // dispatches to UnionPoint(i) on single-index words, else 0
  TableDriven,  // explicit word table with a default value
  Combined,     // dispatches to one of two sides by alphabet, 0 on mixed words
};

struct ComplexityMeasure {
  MeasureKind kind = MeasureKind::Depth;
  std::map<std::string, int> weights;        // Weighted
  int point = 0;                             // UnionPoint: the index i
  std::vector<int> family;                   // UnionFamily: sorted index list K
  std::map<Word, int> table;                 // TableDriven entries
  int table_default = 0;                     // TableDriven fallback value
  int table_length_bound = 0;                // TableDriven declared max length L
  std::vector<ComplexityMeasure> parts;      // Combined: the two sides
  std::vector<std::vector<std::string>> part_alphabets;  // Combined: sorted attrs

  bool additive() const;
  int value_at_lambda() const;

  // Total except Weighted on an attribute with no weight ("weight undefined")
  // and Mu on an attribute without a numeric index suffix.
  long long evaluate(const Word& word) const;

  // evaluate plus whether a TableDriven lookup fell back to the default.
  long long evaluate_flagged(const Word& word, bool* used_default) const;
};

ComplexityMeasure depth_measure();
ComplexityMeasure weighted_measure(std::map<std::string, int> weights);
ComplexityMeasure constant_zero_measure();
ComplexityMeasure mu_measure();
ComplexityMeasure union_point_measure(int i);
ComplexityMeasure union_family_measure(std::vector<int> K);
// Alphabets must be disjoint and the sides must agree on the empty word.
// Words inside one alphabet take that side's value, mixed words take 0.
// In-memory only: there is no dmeas form for it.
ComplexityMeasure combined_measure(const ComplexityMeasure& left,
                                   std::vector<std::string> left_attrs,
                                   const ComplexityMeasure& right,
                                   std::vector<std::string> right_attrs);

// Trailing digits of an attribute name ("l_7" -> 7); nullopt when absent.
std::optional<int> attribute_index(const std::string& name);

struct LimitedCounterexample {
  char property = 'a';
  std::vector<Word> words;  // the words whose values witness the violation
  std::vector<long long> values;
  std::string describe() const;
};

// Result of the bounded check of the three defining properties of a limited
// measure over all words up to length max_len.
struct LimitedReport {
  bool holds_a = true;
  bool holds_b = true;
  bool holds_c = true;
  std::vector<LimitedCounterexample> counterexamples;  // first per property
  int verified_window = 0;
  size_t words_checked = 0;
  bool default_region_touched = false;  // TableDriven only
  bool limited_in_window() const { return holds_a && holds_b && holds_c; }
};

LimitedReport check_limited(const ComplexityMeasure& measure,
                            const std::vector<std::string>& alphabet, int max_len);

// phi(xi): keep the attribute sequence of a path, drop the values.
Word extend_to_tree_word(const QueryWord& path_word);

ComplexityMeasure parse_dmeas(const std::string& text, const std::string& filename = "");
ComplexityMeasure load_dmeas(const std::string& path);
std::string print_dmeas(const ComplexityMeasure& measure);

}  // namespace dectab
