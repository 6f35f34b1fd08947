#include "dectab/measure.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace dectab {

bool ComplexityMeasure::additive() const {
  // value of a word is a sum of per-letter weights (all 1, given, or all 0)
  return kind == MeasureKind::Depth || kind == MeasureKind::Weighted ||
         kind == MeasureKind::ConstantZero;
}

int ComplexityMeasure::value_at_lambda() const {
  return static_cast<int>(evaluate({}));
}

std::optional<int> attribute_index(const std::string& name) {
  size_t end = name.size();
  size_t begin = end;
  while (begin > 0 && std::isdigit(static_cast<unsigned char>(name[begin - 1]))) --begin;
  if (begin == end || begin == 0) return std::nullopt;  // no digits, or digits only
  return std::stoi(name.substr(begin));
}

namespace {

// Letter of a union-family alphabet: one of a_i, b_i, c_i.
std::optional<std::pair<char, int>> union_letter(const std::string& name) {
  if (name.size() < 3 || name[1] != '_') return std::nullopt;
  char base = name[0];
  if (base != 'a' && base != 'b' && base != 'c') return std::nullopt;
  for (size_t i = 2; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  return std::make_pair(base, std::stoi(name.substr(2)));
}

long long union_point_value(int i, size_t len) {
  if (len == 0) return 0;
  if (len == 1) return i;
  return i + 1;
}

}  // namespace

long long ComplexityMeasure::evaluate(const Word& word) const {
  bool ignored = false;
  return evaluate_flagged(word, &ignored);
}

long long ComplexityMeasure::evaluate_flagged(const Word& word, bool* used_default) const {
  *used_default = false;
  switch (kind) {
    case MeasureKind::Depth:
      return static_cast<long long>(word.size());
    case MeasureKind::Weighted: {
      long long sum = 0;
      for (const auto& f : word) {
        auto it = weights.find(f);
        if (it == weights.end()) {
          throw std::runtime_error("weight undefined for attribute " + f);
        }
        sum += it->second;
      }
      return sum;
    }
    case MeasureKind::ConstantZero:
      return 0;
    case MeasureKind::Mu: {
      if (word.empty()) return 0;
      std::vector<int> idx;
      for (const auto& f : word) {
        auto i = attribute_index(f);
        if (!i) throw std::runtime_error("mu requires attributes with a numeric index suffix: " + f);
        idx.push_back(*i);
      }
      if (idx.size() == 1) return 1;
      if (idx.size() == 2 && idx[0] > idx[1]) return 1;
      return *std::max_element(idx.begin(), idx.end());
    }
    case MeasureKind::UnionPoint:
      return union_point_value(point, word.size());
    case MeasureKind::UnionFamily: {
      if (word.empty()) return 0;
      std::optional<int> common;
      for (const auto& f : word) {
        auto letter = union_letter(f);
        if (!letter) return 0;
        if (common && *common != letter->second) return 0;  // mixed indices
        common = letter->second;
      }
      if (!std::binary_search(family.begin(), family.end(), *common)) return 0;
      return union_point_value(*common, word.size());
    }
    case MeasureKind::TableDriven: {
      auto it = table.find(word);
      if (it != table.end()) return it->second;
      *used_default = true;
      return table_default;
    }
    case MeasureKind::Combined: {
      if (word.empty()) return parts[0].evaluate({});
      for (int side = 0; side < 2; ++side) {
        const auto& alphabet = part_alphabets[side];
        bool inside = true;
        for (const auto& f : word) {
          if (!std::binary_search(alphabet.begin(), alphabet.end(), f)) {
            inside = false;
            break;
          }
        }
        if (inside) return parts[side].evaluate_flagged(word, used_default);
      }
      return 0;
    }
  }
  return 0;
}

ComplexityMeasure depth_measure() { return {}; }

ComplexityMeasure weighted_measure(std::map<std::string, int> weights) {
  for (const auto& [f, w] : weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive: " + f);
  }
  ComplexityMeasure m;
  m.kind = MeasureKind::Weighted;
  m.weights = std::move(weights);
  return m;
}

ComplexityMeasure constant_zero_measure() {
  ComplexityMeasure m;
  m.kind = MeasureKind::ConstantZero;
  return m;
}

ComplexityMeasure mu_measure() {
  ComplexityMeasure m;
  m.kind = MeasureKind::Mu;
  return m;
}

ComplexityMeasure union_point_measure(int i) {
  if (i < 0) throw std::invalid_argument("union-point index must be nonnegative");
  ComplexityMeasure m;
  m.kind = MeasureKind::UnionPoint;
  m.point = i;
  return m;
}

ComplexityMeasure union_family_measure(std::vector<int> K) {
  for (int i : K) {
    if (i < 0) throw std::invalid_argument("union-family indices must be nonnegative");
  }
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  ComplexityMeasure m;
  m.kind = MeasureKind::UnionFamily;
  m.family = std::move(K);
  return m;
}

ComplexityMeasure combined_measure(const ComplexityMeasure& left,
                                   std::vector<std::string> left_attrs,
                                   const ComplexityMeasure& right,
                                   std::vector<std::string> right_attrs) {
  auto tidy = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(left_attrs);
  tidy(right_attrs);
  for (const auto& f : left_attrs) {
    if (std::binary_search(right_attrs.begin(), right_attrs.end(), f)) {
      throw std::invalid_argument("combined measure needs disjoint alphabets, both sides hold " + f);
    }
  }
  if (left.value_at_lambda() != right.value_at_lambda()) {
    throw std::invalid_argument("combined measure needs matching empty-word values");
  }
  ComplexityMeasure m;
  m.kind = MeasureKind::Combined;
  m.parts = {left, right};
  m.part_alphabets = {std::move(left_attrs), std::move(right_attrs)};
  return m;
}

std::string LimitedCounterexample::describe() const {
  auto word_str = [](const Word& w) {
    if (w.empty()) return std::string("λ");
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += " ";
      s += w[i];
    }
    return s;
  };
  std::ostringstream out;
  out << "(" << property << ")";
  for (size_t i = 0; i < words.size(); ++i) {
    out << (i ? "; " : " ") << word_str(words[i]) << " -> " << values[i];
  }
  return out.str();
}

LimitedReport check_limited(const ComplexityMeasure& measure,
                            const std::vector<std::string>& alphabet, int max_len) {
  if (alphabet.empty() || max_len < 1) {
    throw std::invalid_argument("check_limited needs a nonempty alphabet and max_len >= 1");
  }
  double total = 0;
  double layer = 1;
  for (int l = 0; l <= max_len; ++l) {
    total += layer;
    layer *= alphabet.size();
  }
  if (total > 2e6) throw std::invalid_argument("check_limited word space too large");

  LimitedReport report;
  report.verified_window = max_len;

  std::vector<Word> words{{}};
  size_t frontier_begin = 0;
  for (int len = 0; len < max_len; ++len) {
    size_t frontier_end = words.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& a : alphabet) {
        Word w = words[i];
        w.push_back(a);
        words.push_back(std::move(w));
      }
    }
    frontier_begin = frontier_end;
  }

  std::map<Word, long long> value;
  for (const auto& w : words) {
    bool used_default = false;
    value[w] = measure.evaluate_flagged(w, &used_default);
    if (used_default) report.default_region_touched = true;
  }
  report.words_checked = words.size();

  auto slice = [](const Word& w, size_t from, size_t to) {
    return Word(w.begin() + from, w.begin() + to);
  };

  for (const auto& w : words) {
    long long vw = value.at(w);
    // (c) first: it never needs a decomposition.
    if (report.holds_c && vw < static_cast<long long>(w.size())) {
      report.holds_c = false;
      report.counterexamples.push_back({'c', {w}, {vw}});
    }
    // (a): every split of w into two parts.
    if (report.holds_a) {
      for (size_t p = 0; p <= w.size(); ++p) {
        Word a1 = slice(w, 0, p), a2 = slice(w, p, w.size());
        if (vw > value.at(a1) + value.at(a2)) {
          report.holds_a = false;
          report.counterexamples.push_back({'a', {w, a1, a2}, {vw, value.at(a1), value.at(a2)}});
          break;
        }
      }
    }
    // (b): every way of deleting a middle factor from w.
    if (report.holds_b) {
      bool done = false;
      for (size_t p = 0; p <= w.size() && !done; ++p) {
        for (size_t q = p + 1; q <= w.size() && !done; ++q) {
          Word kept = slice(w, 0, p);
          for (size_t i = q; i < w.size(); ++i) kept.push_back(w[i]);
          if (vw < value.at(kept)) {
            report.holds_b = false;
            report.counterexamples.push_back({'b', {w, kept}, {vw, value.at(kept)}});
            done = true;
          }
        }
      }
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const auto& x, const auto& y) { return x.property < y.property; });
  return report;
}

Word extend_to_tree_word(const QueryWord& path_word) {
  Word out;
  out.reserve(path_word.size());
  for (const auto& step : path_word) out.push_back(step.attr);
  return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int_tok(const std::string& tok, const std::string& file, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(file, line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

ComplexityMeasure parse_dmeas(const std::string& text, const std::string& filename) {
  ComplexityMeasure m;
  bool have_measure = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    if (toks[0] == "measure") {
      if (have_measure) throw ParseError(filename, line, "duplicate measure directive");
      if (toks.size() < 2) throw ParseError(filename, line, "measure directive needs a kind");
      const std::string& kind = toks[1];
      auto args = std::vector<std::string>(toks.begin() + 2, toks.end());
      if (kind == "depth") {
        m = depth_measure();
      } else if (kind == "pi") {
        m = constant_zero_measure();
      } else if (kind == "mu") {
        m = mu_measure();
      } else if (kind == "weighted") {
        std::map<std::string, int> ws;
        for (const auto& arg : args) {
          auto eq = arg.find('=');
          if (eq == std::string::npos || eq == 0) {
            throw ParseError(filename, line, "weighted entries look like name=value");
          }
          ws[arg.substr(0, eq)] = parse_int_tok(arg.substr(eq + 1), filename, line);
        }
        if (ws.empty()) throw ParseError(filename, line, "weighted measure needs at least one weight");
        try {
          m = weighted_measure(std::move(ws));
        } catch (const std::exception& e) {
          throw ParseError(filename, line, e.what());
        }
      } else if (kind == "union-point") {
        if (args.size() != 1 || args[0].rfind("i=", 0) != 0) {
          throw ParseError(filename, line, "union-point takes i=<index>");
        }
        m = union_point_measure(parse_int_tok(args[0].substr(2), filename, line));
      } else if (kind == "union-family") {
        if (args.size() != 1 || args[0].rfind("K=", 0) != 0) {
          throw ParseError(filename, line, "union-family takes K=<comma list>");
        }
        std::vector<int> K;
        std::string csv = args[0].substr(2);
        std::istringstream items(csv);
        std::string item;
        while (std::getline(items, item, ',')) {
          if (item.empty()) throw ParseError(filename, line, "empty entry in K list");
          K.push_back(parse_int_tok(item, filename, line));
        }
        if (K.empty()) throw ParseError(filename, line, "union-family needs a nonempty K list");
        m = union_family_measure(std::move(K));
      } else if (kind == "table") {
        m.kind = MeasureKind::TableDriven;
        bool have_l = false, have_default = false;
        for (const auto& arg : args) {
          if (arg.rfind("L=", 0) == 0) {
            m.table_length_bound = parse_int_tok(arg.substr(2), filename, line);
            have_l = true;
          } else if (arg.rfind("default=", 0) == 0) {
            m.table_default = parse_int_tok(arg.substr(8), filename, line);
            have_default = true;
          } else {
            throw ParseError(filename, line, "table measure takes L= and default=");
          }
        }
        if (!have_l || !have_default) {
          throw ParseError(filename, line, "table measure needs both L= and default=");
        }
      } else {
        throw ParseError(filename, line, "unknown measure kind '" + kind + "'");
      }
      have_measure = true;
    } else if (toks[0] == "word") {
      if (!have_measure || m.kind != MeasureKind::TableDriven) {
        throw ParseError(filename, line, "word lines belong to table measures only");
      }
      auto eq = std::find(toks.begin(), toks.end(), "=");
      if (eq == toks.end() || eq + 2 != toks.end()) {
        throw ParseError(filename, line, "word line looks like: word f1 f2 = 5");
      }
      Word w(toks.begin() + 1, eq);
      if (static_cast<int>(w.size()) > m.table_length_bound) {
        throw ParseError(filename, line, "word longer than the declared bound L");
      }
      int v = parse_int_tok(*(eq + 1), filename, line);
      if (!m.table.emplace(std::move(w), v).second) {
        throw ParseError(filename, line, "duplicate word entry");
      }
    } else {
      throw ParseError(filename, line, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_measure) throw ParseError(filename, 0, "missing measure directive");
  return m;
}

ComplexityMeasure load_dmeas(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dmeas(buf.str(), path);
}

std::string print_dmeas(const ComplexityMeasure& m) {
  std::ostringstream out;
  switch (m.kind) {
    case MeasureKind::Depth:
      out << "measure depth\n";
      break;
    case MeasureKind::Weighted: {
      out << "measure weighted";
      for (const auto& [f, w] : m.weights) out << " " << f << "=" << w;
      out << "\n";
      break;
    }
    case MeasureKind::ConstantZero:
      out << "measure pi\n";
      break;
    case MeasureKind::Mu:
      out << "measure mu\n";
      break;
    case MeasureKind::UnionPoint:
      out << "measure union-point i=" << m.point << "\n";
      break;
    case MeasureKind::UnionFamily: {
      out << "measure union-family K=";
      for (size_t i = 0; i < m.family.size(); ++i) out << (i ? "," : "") << m.family[i];
      out << "\n";
      break;
    }
    case MeasureKind::TableDriven: {
      out << "measure table L=" << m.table_length_bound << " default=" << m.table_default << "\n";
      for (const auto& [w, v] : m.table) {
        out << "word";
        for (const auto& f : w) out << " " << f;
        out << " = " << v << "\n";
      }
      break;
    }
    case MeasureKind::Combined:
      throw std::invalid_argument("combined measures have no dmeas form");
  }
  return out.str();
}

}  // namespace dectab
