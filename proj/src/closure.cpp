#include "dectab/closure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dectab {

DecisionTable remove_column(const DecisionTable& table, int index) {
  if (table.columns() < 2) {
    throw std::invalid_argument("cannot remove last column");
  }
  if (index < 0 || index >= table.columns()) {
    throw std::invalid_argument("column index out of range");
  }
  std::vector<std::string> attrs = table.attrs();
  attrs.erase(attrs.begin() + index);

  std::vector<Row> rows;
  std::set<std::vector<uint8_t>> seen;
  for (const Row& row : table.rows()) {
    Row shrunk = row;
    shrunk.values.erase(shrunk.values.begin() + index);
    if (seen.insert(shrunk.values).second) rows.push_back(std::move(shrunk));
  }
  return DecisionTable(table.name(), table.k(), std::move(attrs), std::move(rows));
}

DecisionTable change_decisions(const DecisionTable& table,
                               const std::vector<DecisionSet>& assignment) {
  if (static_cast<int>(assignment.size()) != table.row_count()) {
    throw std::invalid_argument("assignment must cover every row");
  }
  std::vector<Row> rows = table.rows();
  for (size_t i = 0; i < rows.size(); ++i) {
    rows[i].decisions = make_decision_set(assignment[i]);
  }
  return DecisionTable(table.name(), table.k(), table.attrs(), std::move(rows));
}

DecisionTable permute_columns(const DecisionTable& table,
                              const std::vector<int>& perm) {
  int n = table.columns();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation must be a bijection on the columns");
  }
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) {
      throw std::invalid_argument("permutation must be a bijection on the columns");
    }
    hit[p] = 1;
  }
  std::vector<std::string> attrs(n);
  for (int j = 0; j < n; ++j) attrs[j] = table.attrs()[perm[j]];
  std::vector<Row> rows = table.rows();
  for (Row& row : rows) {
    std::vector<uint8_t> values(n);
    for (int j = 0; j < n; ++j) values[j] = row.values[perm[j]];
    row.values = std::move(values);
  }
  return DecisionTable(table.name(), table.k(), std::move(attrs), std::move(rows));
}

DecisionTable duplicate_column(const DecisionTable& table, int index) {
  if (index < 0 || index >= table.columns()) {
    throw std::invalid_argument("column index out of range");
  }
  std::vector<std::string> attrs = table.attrs();
  attrs.insert(attrs.begin() + index + 1, attrs[index]);
  std::vector<Row> rows = table.rows();
  for (Row& row : rows) {
    row.values.insert(row.values.begin() + index + 1, row.values[index]);
  }
  return DecisionTable(table.name(), table.k(), std::move(attrs), std::move(rows));
}

CanonicalTable canonical_form(const DecisionTable& table) {
  int n = table.columns();
  // Duplicate columns of one attribute carry equal values, so sorting by
  // name alone already realizes the (name, values) order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return table.attrs()[a] < table.attrs()[b];
  });

  std::vector<std::string> attrs(n);
  for (int j = 0; j < n; ++j) attrs[j] = table.attrs()[order[j]];

  std::vector<Row> rows = table.rows();
  for (Row& row : rows) {
    std::vector<uint8_t> values(n);
    for (int j = 0; j < n; ++j) values[j] = row.values[order[j]];
    row.values = std::move(values);
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.values < b.values; });

  // Rename decision labels to the lexicographically smallest relabeling of
  // the row-decision sequence. Plain first-occurrence renaming alone leaves
  // orbit mates like ({0,1},{0}) and ({0,1},{1}) distinct; the minimum over
  // all injective renamings is itself in first-occurrence order and is a
  // complete invariant.
  std::vector<int> used;
  for (const Row& row : rows) {
    used.insert(used.end(), row.decisions.begin(), row.decisions.end());
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  int m = static_cast<int>(used.size());
  if (m > 8) {
    throw std::invalid_argument(
        "canonical form supports at most 8 distinct decision labels");
  }
  std::map<int, int> slot;
  for (int i = 0; i < m; ++i) slot[used[i]] = i;

  auto relabeled = [&](const std::vector<int>& rank) {
    // flattened rows with -1 separators; sets re-sorted after renaming
    std::vector<int> flat;
    for (const Row& row : rows) {
      std::vector<int> set;
      for (int d : row.decisions) set.push_back(rank[slot[d]]);
      std::sort(set.begin(), set.end());
      flat.insert(flat.end(), set.begin(), set.end());
      flat.push_back(-1);
    }
    return flat;
  };

  std::vector<int> rank(m);
  std::iota(rank.begin(), rank.end(), 0);
  std::vector<int> best_rank = rank;
  std::vector<int> best = relabeled(rank);
  while (std::next_permutation(rank.begin(), rank.end())) {
    auto flat = relabeled(rank);
    if (flat < best) {
      best = std::move(flat);
      best_rank = rank;
    }
  }
  for (Row& row : rows) {
    for (int& d : row.decisions) d = best_rank[slot[d]];
    row.decisions = make_decision_set(row.decisions);
  }

  DecisionTable canon(table.name(), table.k(), std::move(attrs), std::move(rows));

  std::ostringstream key;
  key << "k" << canon.k();
  for (const auto& a : canon.attrs()) key << "|" << a;
  for (const Row& row : canon.rows()) {
    key << "/";
    for (size_t j = 0; j < row.values.size(); ++j) {
      if (j) key << ",";
      key << static_cast<int>(row.values[j]);
    }
    key << ":";
    for (size_t j = 0; j < row.decisions.size(); ++j) {
      if (j) key << ",";
      key << row.decisions[j];
    }
  }
  return {std::move(canon), key.str()};
}

bool ClosureResult::contains(const std::string& hash) const {
  for (const auto& c : tables) {
    if (c.hash == hash) return true;
  }
  return false;
}

namespace {

// Value structure without decisions; decision sweeps are per structure.
std::string structure_key(const CanonicalTable& canon) {
  std::ostringstream key;
  key << "k" << canon.table.k();
  for (const auto& a : canon.table.attrs()) key << "|" << a;
  for (const Row& row : canon.table.rows()) {
    key << "/";
    for (size_t j = 0; j < row.values.size(); ++j) {
      if (j) key << ",";
      key << static_cast<int>(row.values[j]);
    }
  }
  return key.str();
}

}  // namespace

ClosureResult enumerate_closure(const std::vector<DecisionTable>& generators,
                                const ClosureConfig& cfg) {
  if (generators.empty()) {
    throw std::invalid_argument("generators must be nonempty");
  }
  if (cfg.max_columns < 1 || cfg.max_tables < 1 || cfg.decision_universe < 1 ||
      cfg.decision_universe > 20) {
    throw std::invalid_argument("closure config out of range");
  }

  std::map<std::string, DecisionTable> seen;
  std::set<std::pair<int, std::string>> frontier;
  std::set<std::string> swept_structures;
  bool capped = false;

  auto admit = [&](const DecisionTable& raw) {
    auto canon = canonical_form(raw);
    if (seen.count(canon.hash)) return;
    if (static_cast<int>(seen.size()) >= cfg.max_tables) {
      capped = true;
      return;
    }
    frontier.insert({canon.table.columns(), canon.hash});
    seen.emplace(std::move(canon.hash), std::move(canon.table));
  };

  for (const auto& g : generators) admit(g);

  // All nonempty subsets of {0..D} as sorted decision sets.
  std::vector<DecisionSet> subsets;
  int labels = cfg.decision_universe + 1;
  for (int mask = 1; mask < (1 << labels); ++mask) {
    DecisionSet s;
    for (int d = 0; d < labels; ++d) {
      if (mask & (1 << d)) s.push_back(d);
    }
    subsets.push_back(std::move(s));
  }

  while (!frontier.empty() && !capped) {
    auto head = *frontier.begin();
    frontier.erase(frontier.begin());
    const DecisionTable table = seen.at(head.second);

    if (table.columns() >= 2) {
      for (int i = 0; i < table.columns(); ++i) {
        admit(remove_column(table, i));
      }
    }
    if (cfg.include_duplication && table.columns() < cfg.max_columns) {
      for (int i = 0; i < table.columns(); ++i) {
        admit(duplicate_column(table, i));
      }
    }

    // Decision changes reach the same patterns from every table with this
    // value structure, so sweep assignments once per structure.
    std::string structure = structure_key(canonical_form(table));
    if (table.row_count() > 0 && swept_structures.insert(structure).second) {
      std::vector<size_t> pick(table.row_count(), 0);
      while (!capped) {
        std::vector<DecisionSet> assignment;
        for (size_t p : pick) assignment.push_back(subsets[p]);
        admit(change_decisions(table, assignment));
        size_t at = 0;
        while (at < pick.size() && ++pick[at] == subsets.size()) {
          pick[at] = 0;
          ++at;
        }
        if (at == pick.size()) break;
      }
    }
  }

  ClosureResult result;
  result.capped = capped;
  for (auto& [hash, table] : seen) {
    result.tables.push_back({std::move(table), hash});
  }
  std::sort(result.tables.begin(), result.tables.end(),
            [](const CanonicalTable& a, const CanonicalTable& b) {
              int ca = a.table.columns(), cb = b.table.columns();
              return ca != cb ? ca < cb : a.hash < b.hash;
            });
  return result;
}

}  // namespace dectab
