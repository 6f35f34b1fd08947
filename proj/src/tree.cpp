#include "dectab/tree.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "dectab/io_error.hpp"

namespace dectab {

std::optional<std::string> tree_structure_error(const DecisionTree& tree) {
  const auto& nodes = tree.nodes;
  if (nodes.empty()) return "tree has no nodes";
  if (nodes[0].terminal) return "root must not be a terminal";
  if (nodes.size() < 2) return "a tree needs at least two nodes";

  std::vector<int> indegree(nodes.size(), 0);
  for (size_t id = 0; id < nodes.size(); ++id) {
    const auto& node = nodes[id];
    for (const auto& edge : node.edges) {
      if (edge.child <= 0 || edge.child >= static_cast<int>(nodes.size())) {
        return "edge from node " + std::to_string(id) + " points outside the tree";
      }
      ++indegree[edge.child];
      bool is_root = id == 0;
      if (is_root && edge.label) return "root edges must be unlabeled";
      if (!is_root && !edge.label) {
        return "edge from worker node " + std::to_string(id) + " needs a value label";
      }
    }
    if (node.terminal) {
      if (!node.edges.empty()) return "terminal node " + std::to_string(id) + " has edges";
      if (node.decision < 0) return "terminal decisions must be nonnegative";
    } else {
      if (node.edges.empty()) {
        return (id == 0 ? std::string("root") : "worker node " + std::to_string(id)) +
               " has no outgoing edges";
      }
      if (id != 0 && node.attr.empty()) {
        return "worker node " + std::to_string(id) + " has no attribute";
      }
    }
  }
  if (indegree[0] != 0) return "the root has an incoming edge";
  for (size_t id = 1; id < nodes.size(); ++id) {
    if (indegree[id] == 0) return "node " + std::to_string(id) + " is unreachable";
    if (indegree[id] > 1) return "node " + std::to_string(id) + " has two parents";
  }
  // In-degrees alone rule out cycles here: a cycle among nodes with one
  // parent each would have to include the root, which has none.
  return std::nullopt;
}

std::vector<CompletePath> complete_paths(const DecisionTree& tree) {
  if (auto err = tree_structure_error(tree)) {
    throw std::invalid_argument("malformed tree: " + *err);
  }
  std::vector<CompletePath> out;
  CompletePath current;
  current.node_ids.push_back(0);
  std::function<void(int)> walk = [&](int id) {
    const auto& node = tree.nodes[id];
    if (node.terminal) {
      CompletePath done = current;
      done.terminal = node.decision;
      out.push_back(std::move(done));
      return;
    }
    for (const auto& edge : node.edges) {
      if (id != 0) current.word.push_back({node.attr, *edge.label});
      current.node_ids.push_back(edge.child);
      walk(edge.child);
      current.node_ids.pop_back();
      if (id != 0) current.word.pop_back();
    }
  };
  walk(0);
  return out;
}

std::vector<std::string> tree_attributes(const DecisionTree& tree) {
  std::vector<std::string> out;
  for (size_t id = 1; id < tree.nodes.size(); ++id) {
    if (!tree.nodes[id].terminal) out.push_back(tree.nodes[id].attr);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_deterministic(const DecisionTree& tree) {
  if (tree.nodes.empty() || tree.nodes[0].edges.size() != 1) return false;
  for (size_t id = 1; id < tree.nodes.size(); ++id) {
    const auto& node = tree.nodes[id];
    if (node.terminal) continue;
    for (size_t a = 0; a < node.edges.size(); ++a) {
      for (size_t b = a + 1; b < node.edges.size(); ++b) {
        if (node.edges[a].label == node.edges[b].label) return false;
      }
    }
  }
  return true;
}

namespace {

// Row indices of T matched by a query word; assumes attributes were checked.
std::vector<int> matching_rows(const DecisionTable& table, const QueryWord& word) {
  std::vector<int> out;
  for (int r = 0; r < table.row_count(); ++r) {
    bool match = true;
    for (const auto& step : word) {
      const auto& names = table.attrs();
      for (size_t c = 0; c < names.size() && match; ++c) {
        if (names[c] == step.attr && table.rows()[r].values[c] != step.value) match = false;
      }
      if (!match) break;
    }
    if (match) out.push_back(r);
  }
  return out;
}

}  // namespace

ValidationReport validate_nondeterministic(const DecisionTree& tree,
                                           const DecisionTable& table) {
  if (auto err = tree_structure_error(tree)) {
    return {false, 0, *err};
  }
  for (size_t id = 1; id < tree.nodes.size(); ++id) {
    const auto& node = tree.nodes[id];
    if (node.terminal) continue;
    for (const auto& edge : node.edges) {
      if (*edge.label >= table.k()) {
        return {false, 0, "edge label " + std::to_string(*edge.label) +
                              " at node " + std::to_string(id) + " outside E_k"};
      }
    }
  }
  // Condition 1: every tree attribute is an attribute of the table.
  for (const auto& attr : tree_attributes(tree)) {
    if (!table.has_attribute(attr)) {
      return {false, 1, "attribute " + attr + " not in At(T)"};
    }
  }
  auto paths = complete_paths(tree);
  // One sweep records row coverage (condition 2) and the first terminal that
  // is missing from a covered row's decision set (condition 3). Coverage is
  // reported first so violations come out in numeric order.
  std::vector<char> covered(table.row_count(), 0);
  std::optional<ValidationReport> mismatch;
  for (size_t p = 0; p < paths.size(); ++p) {
    for (int r : matching_rows(table, paths[p].word)) {
      covered[r] = 1;
      const auto& decs = table.rows()[r].decisions;
      if (!mismatch &&
          !std::binary_search(decs.begin(), decs.end(), paths[p].terminal)) {
        mismatch = ValidationReport{
            false, 3,
            "path " + std::to_string(p) + " ends with " +
                std::to_string(paths[p].terminal) + ", not a decision of row " +
                std::to_string(r)};
      }
    }
  }
  for (int r = 0; r < table.row_count(); ++r) {
    if (!covered[r]) {
      return {false, 2, "row " + std::to_string(r) + " not covered by any path"};
    }
  }
  if (mismatch) return *mismatch;
  return {true, 0, ""};
}

ValidationReport validate_deterministic(const DecisionTree& tree,
                                        const DecisionTable& table) {
  auto report = validate_nondeterministic(tree, table);
  if (!report.valid) return report;
  if (!is_deterministic(tree)) {
    return {false, 4, "tree is not deterministic"};
  }
  return report;
}

long long tree_complexity(const ComplexityMeasure& measure, const DecisionTree& tree) {
  long long best = 0;
  bool first = true;
  for (const auto& path : complete_paths(tree)) {
    long long v = measure.evaluate(extend_to_tree_word(path.word));
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

DecisionTree parse_dtree(const std::string& text, const std::string& filename) {
  DecisionTree tree = DecisionTree::make();
  bool have_root = false;
  // Last node seen at each depth; depth 0 is the root.
  std::vector<int> stack;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    std::string body = raw.substr(indent);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\r')) body.pop_back();
    if (body.empty()) continue;

    if (!have_root) {
      if (body != "root" || indent != 0) {
        throw ParseError(filename, line, "tree files start with an unindented 'root' line");
      }
      have_root = true;
      stack = {0};
      continue;
    }
    if (body == "root") throw ParseError(filename, line, "duplicate root line");
    if (indent % 2 != 0 || indent == 0) {
      throw ParseError(filename, line, "edges are indented two spaces per level");
    }
    // Root edges sit at indent 2, so the parent lives at indent/2 - 1 on the
    // stack of last-seen nodes per depth.
    size_t parent_depth = indent / 2 - 1;
    if (parent_depth >= stack.size()) {
      throw ParseError(filename, line, "line indented deeper than its parent allows");
    }

    std::istringstream toks(body);
    std::string kw, label_tok, kind, payload;
    toks >> kw >> label_tok >> kind >> payload;
    std::string extra;
    if (kw != "edge" || (toks >> extra)) {
      throw ParseError(filename, line, "expected: edge [<value>] node <attr> | edge [<value>] term <int>");
    }
    if (label_tok.size() < 2 || label_tok.front() != '[' || label_tok.back() != ']') {
      throw ParseError(filename, line, "edge label looks like [] or [<value>]");
    }
    std::string label_str = label_tok.substr(1, label_tok.size() - 2);
    std::optional<uint8_t> label;
    if (!label_str.empty()) {
      try {
        size_t used = 0;
        int v = std::stoi(label_str, &used);
        if (used != label_str.size() || v < 0 || v > 255) throw std::invalid_argument(label_str);
        label = static_cast<uint8_t>(v);
      } catch (const std::exception&) {
        throw ParseError(filename, line, "bad edge value '" + label_str + "'");
      }
    }
    int parent = stack[parent_depth];
    if (parent == 0 && label) throw ParseError(filename, line, "root edges are unlabeled: edge []");
    if (parent != 0 && !label) throw ParseError(filename, line, "worker edges need a value: edge [<value>]");
    if (tree.nodes[parent].terminal) {
      throw ParseError(filename, line, "terminal nodes cannot have children");
    }

    int child;
    if (kind == "node") {
      if (payload.empty()) throw ParseError(filename, line, "node needs an attribute name");
      child = tree.add_worker(payload);
    } else if (kind == "term") {
      if (payload.empty()) throw ParseError(filename, line, "term needs an integer decision");
      try {
        size_t used = 0;
        int v = std::stoi(payload, &used);
        if (used != payload.size() || v < 0) throw std::invalid_argument(payload);
        child = tree.add_terminal(v);
      } catch (const std::exception&) {
        throw ParseError(filename, line, "bad terminal decision '" + payload + "'");
      }
    } else {
      throw ParseError(filename, line, "expected 'node' or 'term', got '" + kind + "'");
    }
    tree.nodes[parent].edges.push_back({label, child});
    stack.resize(parent_depth + 1);
    stack.push_back(child);
  }
  if (!have_root) throw ParseError(filename, 0, "missing root line");
  if (auto err = tree_structure_error(tree)) {
    throw ParseError(filename, 0, "malformed tree: " + *err);
  }
  return tree;
}

DecisionTree load_dtree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dtree(buf.str(), path);
}

std::string print_dtree(const DecisionTree& tree) {
  std::ostringstream out;
  out << "root\n";
  std::function<void(int, int)> walk = [&](int id, int depth) {
    for (const auto& edge : tree.nodes[id].edges) {
      for (int i = 0; i < depth; ++i) out << "  ";
      out << "edge [";
      if (edge.label) out << static_cast<int>(*edge.label);
      out << "] ";
      const auto& child = tree.nodes[edge.child];
      if (child.terminal) {
        out << "term " << child.decision << "\n";
      } else {
        out << "node " << child.attr << "\n";
      }
      walk(edge.child, depth + 1);
    }
  };
  walk(0, 1);
  return out.str();
}

void save_dtree(const DecisionTree& tree, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << print_dtree(tree);
}

}  // namespace dectab
