// Decision trees: an unlabeled root with unlabeled root edges, worker nodes
// labeled with attributes, value-labeled worker edges, integer terminals.
// Validation against a table and tree complexity live here too.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dectab/measure.hpp"
#include "dectab/table.hpp"

namespace dectab {

struct TreeEdge {
  std::optional<uint8_t> label;  // absent exactly on root edges
  int child = 0;
};

struct TreeNode {
  bool terminal = false;
  std::string attr;   // worker nodes
  int decision = 0;   // terminal nodes
  std::vector<TreeEdge> edges;
};

struct DecisionTree {
  // nodes[0] is always the root; its attr/terminal fields are unused.
  std::vector<TreeNode> nodes;

  static DecisionTree make() {
    DecisionTree t;
    t.nodes.push_back({});
    return t;
  }
  int add_worker(const std::string& attr) {
    nodes.push_back({false, attr, 0, {}});
    return static_cast<int>(nodes.size()) - 1;
  }
  int add_terminal(int decision) {
    nodes.push_back({true, "", decision, {}});
    return static_cast<int>(nodes.size()) - 1;
  }
  void add_root_edge(int child) { nodes[0].edges.push_back({std::nullopt, child}); }
  void add_edge(int parent, uint8_t label, int child) {
    nodes[parent].edges.push_back({label, child});
  }
};

struct CompletePath {
  QueryWord word;              // pi(xi)
  int terminal = 0;            // tau(xi)
  std::vector<int> node_ids;   // root to terminal inclusive
};

// nullopt when well formed, otherwise a description of the first problem.
// Checks: at least two nodes, tree-shaped reachability, terminals without
// edges, workers and the root with at least one edge, labels present on
// worker edges and absent on root edges, nonnegative terminal decisions.
std::optional<std::string> tree_structure_error(const DecisionTree& tree);

// Paths in depth-first edge order. Requires a well-formed tree.
std::vector<CompletePath> complete_paths(const DecisionTree& tree);

// Attributes appearing at worker nodes, sorted, duplicates collapsed.
std::vector<std::string> tree_attributes(const DecisionTree& tree);

bool is_deterministic(const DecisionTree& tree);

struct ValidationReport {
  bool valid = false;
  // 0 = structural, 1 = attributes outside At(T), 2 = uncovered row,
  // 3 = terminal not in a covered row's decision set, 4 = not deterministic
  // (validate_deterministic only).
  int violated_condition = 0;
  std::string witness;
};

ValidationReport validate_nondeterministic(const DecisionTree& tree,
                                           const DecisionTable& table);
ValidationReport validate_deterministic(const DecisionTree& tree,
                                        const DecisionTable& table);

// max over complete paths of the measure of the path's attribute word.
long long tree_complexity(const ComplexityMeasure& measure, const DecisionTree& tree);

DecisionTree parse_dtree(const std::string& text, const std::string& filename = "");
DecisionTree load_dtree(const std::string& path);
std::string print_dtree(const DecisionTree& tree);
void save_dtree(const DecisionTree& tree, const std::string& path);

}  // namespace dectab
