#include "dectab/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace dectab {

namespace {

// Distinct attribute names (sorted) with the first column carrying each.
struct AttrIndex {
  std::vector<std::string> names;
  std::vector<int> column;
};

AttrIndex attr_index(const DecisionTable& table) {
  AttrIndex out;
  std::map<std::string, int> first;
  for (int c = 0; c < table.columns(); ++c) {
    first.emplace(table.attrs()[c], c);
  }
  for (const auto& [name, col] : first) {
    out.names.push_back(name);
    out.column.push_back(col);
  }
  return out;
}

// Intersection of the decision sets of the given rows; empty input means an
// empty table slice, which every decision serves (represented as {0}).
std::vector<int> common_decisions_of(const DecisionTable& table,
                                     const std::vector<int>& rows) {
  if (rows.empty()) return {0};
  std::vector<int> common = table.rows()[rows[0]].decisions;
  for (size_t i = 1; i < rows.size() && !common.empty(); ++i) {
    const auto& decs = table.rows()[rows[i]].decisions;
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), decs.begin(),
                          decs.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

std::vector<int> rows_with_value(const DecisionTable& table,
                                 const std::vector<int>& rows, int column,
                                 uint8_t value) {
  std::vector<int> out;
  for (int r : rows) {
    if (table.rows()[r].values[column] == value) out.push_back(r);
  }
  return out;
}

std::vector<uint8_t> realized_values(const DecisionTable& table,
                                     const std::vector<int>& rows,
                                     int column) {
  std::set<uint8_t> seen;
  for (int r : rows) seen.insert(table.rows()[r].values[column]);
  return {seen.begin(), seen.end()};
}

DecisionTree root_terminal_tree(int decision) {
  auto tree = DecisionTree::make();
  tree.add_root_edge(tree.add_terminal(decision));
  return tree;
}

int degenerate_terminal(const DecisionTable& table) {
  auto common = table.common_decisions();
  return common.values.empty() ? 0 : common.values.front();
}

// Tree fragment used while searching; converted to DecisionTree at the end.
struct BuildNode {
  bool terminal = false;
  int decision = 0;
  std::string attr;
  std::vector<std::pair<uint8_t, BuildNode>> children;
};

int graft(DecisionTree& tree, const BuildNode& node) {
  if (node.terminal) return tree.add_terminal(node.decision);
  int id = tree.add_worker(node.attr);
  for (const auto& [value, child] : node.children) {
    tree.add_edge(id, value, graft(tree, child));
  }
  return id;
}

DecisionTree single_subtree(const BuildNode& top) {
  auto tree = DecisionTree::make();
  tree.add_root_edge(graft(tree, top));
  return tree;
}

}  // namespace

long long psi_i(const DecisionTable& table, const ComplexityMeasure& measure) {
  return measure.evaluate(table.attrs());
}

namespace {

struct AdditiveDp {
  const DecisionTable& table;
  const AttrIndex& attrs;
  std::vector<long long> weight;
  // mask of rows -> (value, splitting attr index or -1 for a terminal)
  std::map<uint64_t, std::pair<long long, int>> memo;

  uint64_t mask_of(const std::vector<int>& rows) const {
    uint64_t m = 0;
    for (int r : rows) m |= uint64_t{1} << r;
    return m;
  }

  long long solve(const std::vector<int>& rows) {
    uint64_t mask = mask_of(rows);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second.first;

    if (!common_decisions_of(table, rows).empty()) {
      memo.emplace(mask, std::make_pair(0LL, -1));
      return 0;
    }
    long long best = -1;
    int best_attr = -1;
    for (size_t a = 0; a < attrs.names.size(); ++a) {
      auto values = realized_values(table, rows, attrs.column[a]);
      // A query with one realized value repeats the same subtable; with
      // positive-cost additive measures it can never help.
      if (values.size() < 2) continue;
      long long worst = 0;
      for (uint8_t v : values) {
        long long sub = solve(rows_with_value(table, rows, attrs.column[a], v));
        worst = std::max(worst, sub);
      }
      long long total = weight[a] + worst;
      if (best < 0 || total < best) {
        best = total;
        best_attr = static_cast<int>(a);
      }
    }
    // Distinct rows guarantee a splitting attribute for any non-degenerate
    // subset of two or more rows.
    memo.emplace(mask, std::make_pair(best, best_attr));
    return best;
  }

  BuildNode rebuild(const std::vector<int>& rows) {
    auto entry = memo.at(mask_of(rows));
    if (entry.second < 0) {
      BuildNode leaf;
      leaf.terminal = true;
      leaf.decision = common_decisions_of(table, rows).front();
      return leaf;
    }
    BuildNode node;
    node.attr = attrs.names[entry.second];
    int column = attrs.column[entry.second];
    for (uint8_t v : realized_values(table, rows, column)) {
      node.children.emplace_back(v, rebuild(rows_with_value(table, rows, column, v)));
    }
    return node;
  }
};

}  // namespace

SolveResult psi_d_additive(const DecisionTable& table,
                           const ComplexityMeasure& measure) {
  if (!measure.additive()) {
    throw std::invalid_argument("psi_d_additive needs an additive measure");
  }
  if (table.row_count() > 62) {
    throw std::invalid_argument("psi_d_additive supports at most 62 rows");
  }
  SolveResult result;
  result.method = "dp";
  if (table.is_degenerate()) {
    result.value = 0;
    result.witness = root_terminal_tree(degenerate_terminal(table));
    return result;
  }
  AttrIndex attrs = attr_index(table);
  AdditiveDp dp{table, attrs, {}, {}};
  for (const auto& name : attrs.names) {
    dp.weight.push_back(measure.evaluate({name}));
  }
  std::vector<int> all(table.row_count());
  for (int r = 0; r < table.row_count(); ++r) all[r] = r;
  result.value = dp.solve(all);
  result.witness = single_subtree(dp.rebuild(all));
  return result;
}

SolveResult psi_a_certificate(const DecisionTable& table,
                              const ComplexityMeasure& measure) {
  if (!measure.additive()) {
    throw std::invalid_argument("psi_a_certificate needs an additive measure");
  }
  SolveResult result;
  result.method = "certificate";
  if (table.is_degenerate()) {
    result.value = 0;
    result.witness = root_terminal_tree(degenerate_terminal(table));
    return result;
  }
  AttrIndex attrs = attr_index(table);
  int n = static_cast<int>(attrs.names.size());
  if (n > 16) {
    throw std::invalid_argument("psi_a_certificate supports at most 16 attributes");
  }
  std::vector<long long> weight;
  for (const auto& name : attrs.names) {
    weight.push_back(measure.evaluate({name}));
  }

  std::vector<int> all(table.row_count());
  for (int r = 0; r < table.row_count(); ++r) all[r] = r;

  long long value = 0;
  // per row: the cheapest qualifying attribute subset, lowest bitmask first
  std::vector<int> best_mask(table.row_count(), -1);
  std::vector<int> best_terminal(table.row_count(), 0);
  for (int r = 0; r < table.row_count(); ++r) {
    long long best = -1;
    for (int mask = 1; mask < (1 << n); ++mask) {
      long long cost = 0;
      for (int a = 0; a < n; ++a) {
        if (mask & (1 << a)) cost += weight[a];
      }
      if (best >= 0 && cost >= best) continue;
      std::vector<int> rows = all;
      for (int a = 0; a < n; ++a) {
        if (mask & (1 << a)) {
          rows = rows_with_value(table, rows, attrs.column[a],
                                 table.rows()[r].values[attrs.column[a]]);
        }
      }
      auto common = common_decisions_of(table, rows);
      if (common.empty()) continue;
      best = cost;
      best_mask[r] = mask;
      best_terminal[r] = common.front();
    }
    // the full attribute set isolates the row, so a rule always exists
    value = std::max(value, best);
  }

  result.value = value;
  auto tree = DecisionTree::make();
  std::set<std::pair<std::vector<std::pair<int, uint8_t>>, int>> emitted;
  for (int r = 0; r < table.row_count(); ++r) {
    std::vector<std::pair<int, uint8_t>> steps;
    for (int a = 0; a < n; ++a) {
      if (best_mask[r] & (1 << a)) {
        steps.emplace_back(a, table.rows()[r].values[attrs.column[a]]);
      }
    }
    if (!emitted.insert({steps, best_terminal[r]}).second) continue;
    int parent = 0;
    for (size_t s = 0; s < steps.size(); ++s) {
      int worker = tree.add_worker(attrs.names[steps[s].first]);
      if (parent == 0) {
        tree.add_root_edge(worker);
      } else {
        tree.add_edge(parent, steps[s - 1].second, worker);
      }
      parent = worker;
    }
    int terminal = tree.add_terminal(best_terminal[r]);
    if (parent == 0) {
      tree.add_root_edge(terminal);
    } else {
      tree.add_edge(parent, steps.back().second, terminal);
    }
  }
  result.witness = std::move(tree);
  return result;
}

namespace {

struct DeterministicSearch {
  const DecisionTable& table;
  const ComplexityMeasure& measure;
  const AttrIndex& attrs;
  long long budget;
  bool exhausted = false;

  std::optional<std::pair<long long, BuildNode>> solve(
      const std::vector<int>& rows, std::vector<char>& used, Word& prefix) {
    if (--budget < 0) {
      exhausted = true;
      return std::nullopt;
    }
    long long best = -1;
    BuildNode best_node;

    auto common = common_decisions_of(table, rows);
    if (!common.empty()) {
      best = measure.evaluate(prefix);
      best_node.terminal = true;
      best_node.decision = common.front();
    }
    for (size_t a = 0; a < attrs.names.size(); ++a) {
      if (used[a]) continue;
      auto values = realized_values(table, rows, attrs.column[a]);
      if (values.empty()) continue;
      used[a] = 1;
      prefix.push_back(attrs.names[a]);
      long long worst = 0;
      BuildNode node;
      node.attr = attrs.names[a];
      bool complete = true;
      for (uint8_t v : values) {
        auto sub = solve(rows_with_value(table, rows, attrs.column[a], v),
                         used, prefix);
        if (!sub) {
          complete = false;
          break;
        }
        worst = std::max(worst, sub->first);
        node.children.emplace_back(v, std::move(sub->second));
      }
      prefix.pop_back();
      used[a] = 0;
      if (!complete) return std::nullopt;
      if (best < 0 || worst < best) {
        best = worst;
        best_node = std::move(node);
      }
    }
    if (best < 0) return std::nullopt;  // cannot happen on valid tables
    return std::make_pair(best, std::move(best_node));
  }
};

}  // namespace

SolveResult psi_d_bruteforce(const DecisionTable& table,
                             const ComplexityMeasure& measure,
                             long long node_budget) {
  SolveResult result;
  result.method = "brute_force";
  AttrIndex attrs = attr_index(table);
  DeterministicSearch search{table, measure, attrs, node_budget};
  std::vector<int> all(table.row_count());
  for (int r = 0; r < table.row_count(); ++r) all[r] = r;
  std::vector<char> used(attrs.names.size(), 0);
  Word prefix;
  auto found = search.solve(all, used, prefix);
  if (!found) {
    result.inconclusive = true;
    return result;
  }
  result.value = found->first;
  result.witness = single_subtree(found->second);
  return result;
}

SolveResult psi_a_bruteforce(const DecisionTable& table,
                             const ComplexityMeasure& measure,
                             long long path_budget) {
  SolveResult result;
  result.method = "brute_force";
  if (table.row_count() == 0) {
    result.value = measure.evaluate({});
    result.witness = root_terminal_tree(0);
    return result;
  }
  AttrIndex attrs = attr_index(table);
  int n = static_cast<int>(attrs.names.size());
  std::vector<int> all(table.row_count());
  for (int r = 0; r < table.row_count(); ++r) all[r] = r;

  // repeat-free sequence count: the completeness envelope for limited measures
  long long repeat_free_total = 0;
  {
    long long partial = 1;
    repeat_free_total = 1;
    for (int l = 1; l <= n; ++l) {
      partial *= (n - l + 1);
      repeat_free_total += partial;
    }
  }

  long long value = 0;
  std::vector<Word> best_word(table.row_count());
  std::vector<int> best_terminal(table.row_count(), 0);
  std::vector<std::vector<uint8_t>> best_values(table.row_count());
  for (int r = 0; r < table.row_count(); ++r) {
    long long best = -1;
    long long tried = 0;
    long long repeat_free_tried = 0;
    // sequences of attribute indices, repeats allowed, by length then lex
    std::vector<std::vector<int>> frontier{{}};
    for (int length = 0; length <= n + 2 && !frontier.empty(); ++length) {
      std::vector<std::vector<int>> next;
      for (const auto& seq : frontier) {
        if (tried++ >= path_budget) break;
        bool repeat_free =
            std::set<int>(seq.begin(), seq.end()).size() == seq.size();
        if (repeat_free) ++repeat_free_tried;

        std::vector<int> rows = all;
        Word word;
        for (int a : seq) {
          word.push_back(attrs.names[a]);
          rows = rows_with_value(table, rows, attrs.column[a],
                                 table.rows()[r].values[attrs.column[a]]);
        }
        auto common = common_decisions_of(table, rows);
        if (!common.empty()) {
          long long cost = measure.evaluate(word);
          if (best < 0 || cost < best) {
            best = cost;
            best_word[r] = word;
            best_terminal[r] = common.front();
            best_values[r].clear();
            for (int a : seq) {
              best_values[r].push_back(table.rows()[r].values[attrs.column[a]]);
            }
          }
        }
        for (int a = 0; a < n; ++a) {
          auto longer = seq;
          longer.push_back(a);
          next.push_back(std::move(longer));
        }
      }
      if (tried >= path_budget) break;
      frontier = std::move(next);
    }
    if (repeat_free_tried < repeat_free_total) result.inconclusive = true;
    if (best < 0) {
      // budget died before any rule for this row
      result.inconclusive = true;
      return result;
    }
    value = std::max(value, best);
  }

  result.value = value;
  auto tree = DecisionTree::make();
  // keyed by the full labeled path; same attribute word with different
  // values is a different path and must stay in the tree
  std::set<std::tuple<Word, std::vector<uint8_t>, int>> emitted;
  for (int r = 0; r < table.row_count(); ++r) {
    if (!emitted.insert({best_word[r], best_values[r], best_terminal[r]}).second)
      continue;
    int parent = 0;
    for (size_t s = 0; s < best_word[r].size(); ++s) {
      int worker = tree.add_worker(best_word[r][s]);
      if (parent == 0) {
        tree.add_root_edge(worker);
      } else {
        tree.add_edge(parent, best_values[r][s - 1], worker);
      }
      parent = worker;
    }
    int terminal = tree.add_terminal(best_terminal[r]);
    if (parent == 0) {
      tree.add_root_edge(terminal);
    } else {
      tree.add_edge(parent, best_values[r].back(), terminal);
    }
  }
  result.witness = std::move(tree);
  return result;
}

}  // namespace dectab
