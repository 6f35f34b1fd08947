#include "dectab/table.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace dectab {

DecisionSet make_decision_set(std::vector<int> raw) {
  if (raw.empty()) {
    throw std::invalid_argument("decision sets must be nonempty");
  }
  for (int d : raw) {
    if (d < 0) throw std::invalid_argument("decision labels must be nonnegative");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

DecisionTable::DecisionTable(std::string name, int k,
                             std::vector<std::string> attrs,
                             std::vector<Row> rows)
    : name_(std::move(name)), k_(k), attrs_(std::move(attrs)), rows_(std::move(rows)) {
  if (k_ < 2) throw std::invalid_argument("k must be at least 2");
  if (attrs_.empty()) throw std::invalid_argument("a table must have at least one column");
  for (const auto& a : attrs_) {
    if (a.empty()) throw std::invalid_argument("attribute names must be nonempty");
  }
  std::set<std::vector<uint8_t>> seen;
  for (auto& r : rows_) {
    if (r.values.size() != attrs_.size()) {
      throw std::invalid_argument("row width does not match the number of columns");
    }
    for (uint8_t v : r.values) {
      if (v >= k_) throw std::invalid_argument("row value outside E_k");
    }
    r.decisions = make_decision_set(std::move(r.decisions));
    if (!seen.insert(r.values).second) {
      throw std::invalid_argument("rows must be pairwise distinct");
    }
  }
  // Columns labeled with the same attribute are the same function, so their
  // values must agree row by row.
  for (size_t i = 0; i < attrs_.size(); ++i) {
    for (size_t j = i + 1; j < attrs_.size(); ++j) {
      if (attrs_[i] != attrs_[j]) continue;
      for (const auto& r : rows_) {
        if (r.values[i] != r.values[j]) {
          throw std::invalid_argument("columns sharing an attribute must agree in every row");
        }
      }
    }
  }
}

void DecisionTable::set_name(std::string n) { name_ = std::move(n); }

std::vector<std::string> DecisionTable::attributes() const {
  std::vector<std::string> out(attrs_.begin(), attrs_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool DecisionTable::has_attribute(const std::string& name) const {
  return std::find(attrs_.begin(), attrs_.end(), name) != attrs_.end();
}

CommonDecisions DecisionTable::common_decisions() const {
  CommonDecisions out;
  if (rows_.empty()) {
    out.all = true;
    return out;
  }
  out.values = rows_[0].decisions;
  for (size_t i = 1; i < rows_.size() && !out.values.empty(); ++i) {
    DecisionSet next;
    std::set_intersection(out.values.begin(), out.values.end(),
                          rows_[i].decisions.begin(), rows_[i].decisions.end(),
                          std::back_inserter(next));
    out.values = std::move(next);
  }
  return out;
}

bool DecisionTable::is_degenerate() const {
  if (rows_.empty()) return true;
  return !common_decisions().values.empty();
}

DecisionTable DecisionTable::subtable(const QueryWord& word) const {
  std::vector<char> keep(rows_.size(), 1);
  for (const auto& step : word) {
    auto it = std::find(attrs_.begin(), attrs_.end(), step.attr);
    if (it == attrs_.end()) {
      throw std::invalid_argument("attribute not in At(T): " + step.attr);
    }
    size_t col = static_cast<size_t>(it - attrs_.begin());
    if (step.value >= k_) throw std::invalid_argument("query value outside E_k");
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (keep[r] && rows_[r].values[col] != step.value) keep[r] = 0;
    }
  }
  std::vector<Row> kept;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (keep[r]) kept.push_back(rows_[r]);
  }
  return DecisionTable(name_, k_, attrs_, std::move(kept));
}

namespace {

// Shared degeneracy probe for the m-parameter search. A state fixes some of
// the distinct attributes to values; encoded in mixed radix with k+1 digits
// (k means "not fixed").
struct MParameterSearch {
  const DecisionTable& table;
  std::vector<std::string> distinct;
  // distinct-attr index -> any column with that name
  std::vector<size_t> column_of;
  std::unordered_map<uint64_t, bool> degenerate_memo;

  explicit MParameterSearch(const DecisionTable& t) : table(t) {
    distinct = t.attributes();
    if (distinct.size() > 12) {
      throw std::invalid_argument("m parameter search supports at most 12 distinct attributes");
    }
    for (const auto& a : distinct) {
      const auto& names = t.attrs();
      column_of.push_back(static_cast<size_t>(
          std::find(names.begin(), names.end(), a) - names.begin()));
    }
  }

  bool fixed_subtable_degenerate(const std::vector<uint8_t>& assignment, uint32_t subset) {
    uint64_t key = 0;
    for (size_t i = 0; i < distinct.size(); ++i) {
      uint64_t digit = (subset >> i) & 1u ? assignment[i] : static_cast<uint64_t>(table.k());
      key = key * (static_cast<uint64_t>(table.k()) + 1) + digit;
    }
    auto it = degenerate_memo.find(key);
    if (it != degenerate_memo.end()) return it->second;

    DecisionSet common;
    bool any_row = false;
    bool have_common = false;
    for (const auto& row : table.rows()) {
      bool match = true;
      for (size_t i = 0; i < distinct.size() && match; ++i) {
        if (((subset >> i) & 1u) && row.values[column_of[i]] != assignment[i]) match = false;
      }
      if (!match) continue;
      any_row = true;
      if (!have_common) {
        common = row.decisions;
        have_common = true;
      } else {
        DecisionSet next;
        std::set_intersection(common.begin(), common.end(), row.decisions.begin(),
                              row.decisions.end(), std::back_inserter(next));
        common = std::move(next);
      }
      if (common.empty()) break;
    }
    bool degenerate = !any_row || !common.empty();
    degenerate_memo.emplace(key, degenerate);
    return degenerate;
  }

  // Least subset size whose fixed subtable is degenerate; the full fixing
  // leaves at most one row, so this always terminates.
  int min_fixing(const std::vector<uint8_t>& assignment) {
    int n = static_cast<int>(distinct.size());
    for (int m = 1; m <= n; ++m) {
      for (uint32_t subset = 0; subset < (1u << n); ++subset) {
        if (__builtin_popcount(subset) != m) continue;
        if (fixed_subtable_degenerate(assignment, subset)) return m;
      }
    }
    return n;
  }
};

}  // namespace

int DecisionTable::m_parameter_at(const std::vector<uint8_t>& tuple) const {
  if (is_degenerate()) {
    throw std::logic_error("m parameter at a tuple requires a nondegenerate table");
  }
  if (tuple.size() != attrs_.size()) {
    throw std::invalid_argument("tuple width does not match the number of columns");
  }
  for (uint8_t v : tuple) {
    if (v >= k_) throw std::invalid_argument("tuple value outside E_k");
  }
  for (size_t i = 0; i < attrs_.size(); ++i) {
    for (size_t j = i + 1; j < attrs_.size(); ++j) {
      if (attrs_[i] == attrs_[j] && tuple[i] != tuple[j]) {
        throw std::invalid_argument("tuple components of columns sharing an attribute must agree");
      }
    }
  }
  MParameterSearch search(*this);
  std::vector<uint8_t> assignment(search.distinct.size());
  for (size_t i = 0; i < search.distinct.size(); ++i) {
    assignment[i] = tuple[search.column_of[i]];
  }
  return search.min_fixing(assignment);
}

int DecisionTable::m_parameter() const {
  if (is_degenerate()) return 0;
  MParameterSearch search(*this);
  size_t n = search.distinct.size();
  std::vector<uint8_t> assignment(n, 0);
  int best = 0;
  while (true) {
    best = std::max(best, search.min_fixing(assignment));
    size_t pos = 0;
    while (pos < n && assignment[pos] == k_ - 1) assignment[pos++] = 0;
    if (pos == n) break;
    ++assignment[pos];
  }
  return best;
}

}  // namespace dectab
