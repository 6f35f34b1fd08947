#include "dectab/table_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace dectab {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const std::string& file, int line,
              const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(file, line, "expected an integer " + what + ", got '" + tok + "'");
  }
}

}  // namespace

DecisionTable parse_dtab(const std::string& text, const std::string& filename) {
  std::optional<std::string> name;
  std::optional<int> k;
  std::optional<std::vector<std::string>> attrs;
  std::vector<Row> rows;
  int construct_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "table") {
      if (name) throw ParseError(filename, line, "duplicate table directive");
      if (toks.size() != 2) throw ParseError(filename, line, "table directive takes one name");
      name = toks[1];
    } else if (head == "k") {
      if (k) throw ParseError(filename, line, "duplicate k directive");
      if (toks.size() != 2) throw ParseError(filename, line, "k directive takes one integer");
      k = parse_int(toks[1], filename, line, "for k");
    } else if (head == "attrs") {
      if (attrs) throw ParseError(filename, line, "duplicate attrs directive");
      if (toks.size() < 2) throw ParseError(filename, line, "attrs directive needs at least one name");
      attrs = std::vector<std::string>(toks.begin() + 1, toks.end());
    } else if (head == "row") {
      if (!name || !k || !attrs) {
        throw ParseError(filename, line, "row before table, k and attrs directives");
      }
      auto sep = std::find(toks.begin(), toks.end(), ":");
      if (sep == toks.end()) throw ParseError(filename, line, "row line needs ':' between values and decisions");
      Row row;
      for (auto it = toks.begin() + 1; it != sep; ++it) {
        int v = parse_int(*it, filename, line, "row value");
        if (v < 0 || v > 255) throw ParseError(filename, line, "row value out of range");
        row.values.push_back(static_cast<uint8_t>(v));
      }
      for (auto it = sep + 1; it != toks.end(); ++it) {
        row.decisions.push_back(parse_int(*it, filename, line, "decision"));
      }
      if (row.values.size() != attrs->size()) {
        throw ParseError(filename, line, "row has " + std::to_string(row.values.size()) +
                                             " values for " + std::to_string(attrs->size()) +
                                             " columns");
      }
      if (row.decisions.empty()) throw ParseError(filename, line, "row needs at least one decision");
      rows.push_back(std::move(row));
      construct_line = line;
    } else {
      throw ParseError(filename, line, "unknown directive '" + head + "'");
    }
  }
  if (!name) throw ParseError(filename, 0, "missing table directive");
  if (!k) throw ParseError(filename, 0, "missing k directive");
  if (!attrs) throw ParseError(filename, 0, "missing attrs directive");
  try {
    return DecisionTable(*name, *k, std::move(*attrs), std::move(rows));
  } catch (const std::exception& e) {
    throw ParseError(filename, construct_line, e.what());
  }
}

DecisionTable load_dtab(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dtab(buf.str(), path);
}

std::string print_dtab(const DecisionTable& table) {
  std::ostringstream out;
  out << "table " << table.name() << "\n";
  out << "k " << table.k() << "\n";
  out << "attrs";
  for (const auto& a : table.attrs()) out << " " << a;
  out << "\n";
  for (const auto& row : table.rows()) {
    out << "row";
    for (uint8_t v : row.values) out << " " << static_cast<int>(v);
    out << " :";
    for (int d : row.decisions) out << " " << d;
    out << "\n";
  }
  return out.str();
}

void save_dtab(const DecisionTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << print_dtab(table);
}

}  // namespace dectab
