// Decision tables with many-valued decisions over E_k = {0,...,k-1}.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dectab {

// Kept sorted and duplicate-free, never empty.
using DecisionSet = std::vector<int>;

// Sorts, dedups, rejects empty input and negative labels.
DecisionSet make_decision_set(std::vector<int> raw);

struct Row {
  std::vector<uint8_t> values;
  DecisionSet decisions;
};

struct QueryStep {
  std::string attr;
  uint8_t value = 0;
};

// A sequence of (attribute, value) restrictions; the empty word is a valid
// query and selects the whole table.
using QueryWord = std::vector<QueryStep>;

// Intersection of the decision sets of all rows. Over zero rows the
// intersection is unrestricted; `all` marks that case and is never
// represented as an empty `values` set.
struct CommonDecisions {
  bool all = false;
  DecisionSet values;
};

class DecisionTable {
 public:
  // Validates: k >= 2, at least one column, every value below k, rows
  // pairwise distinct as value tuples, columns sharing a name equal in
  // every row. Decision sets are normalized and must be nonempty.
  DecisionTable(std::string name, int k, std::vector<std::string> attrs,
                std::vector<Row> rows);

  const std::string& name() const { return name_; }
  void set_name(std::string n);
  int k() const { return k_; }
  int columns() const { return static_cast<int>(attrs_.size()); }
  const std::vector<std::string>& attrs() const { return attrs_; }
  const std::vector<Row>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  // At(T): the set of attribute names, sorted, duplicates collapsed.
  std::vector<std::string> attributes() const;

  bool has_attribute(const std::string& name) const;

  CommonDecisions common_decisions() const;

  // Degenerate: no rows, or some decision common to all rows.
  bool is_degenerate() const;

  // Rows matching every restriction in the word; columns are unchanged and
  // row order is preserved. Unknown attribute names are rejected.
  DecisionTable subtable(const QueryWord& word) const;

  // Least number of attributes that, fixed to the tuple's components, leave
  // a degenerate subtable. The tuple is column-aligned; components of
  // columns sharing a name must agree. Requires a nondegenerate table.
  int m_parameter_at(const std::vector<uint8_t>& tuple) const;

  // 0 for a degenerate table, otherwise the maximum of m_parameter_at over
  // all k^n value tuples (n counted over distinct attributes, at most 12).
  int m_parameter() const;

 private:
  std::string name_;
  int k_ = 2;
  std::vector<std::string> attrs_;
  std::vector<Row> rows_;
};

}  // namespace dectab
