#include "dectab/infosys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dectab {

namespace {

// "l_7" -> ('l', 7); nullopt when the shape is different
std::optional<std::pair<char, int>> subscripted(const std::string& name) {
  if (name.size() < 3 || name[1] != '_') return std::nullopt;
  for (size_t i = 2; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  if (name.size() > 2 + 9) return std::nullopt;  // keeps stoi in range
  return std::make_pair(name[0], std::stoi(name.substr(2)));
}

bool uses_constant(SystemId id) { return id == SystemId::U1 || id == SystemId::U2; }
bool uses_thresholds(SystemId id) {
  return id == SystemId::U3 || id == SystemId::U4 || id == SystemId::U7;
}
bool uses_indicators(SystemId id) {
  return id == SystemId::U5 || id == SystemId::U6 || id == SystemId::U7;
}
bool uses_pairs(SystemId id) { return id == SystemId::U6; }

}  // namespace

std::optional<SystemId> parse_system_id(const std::string& text) {
  static const std::pair<const char*, SystemId> names[] = {
      {"U1", SystemId::U1}, {"U2", SystemId::U2}, {"U3", SystemId::U3},
      {"U4", SystemId::U4}, {"U5", SystemId::U5}, {"U6", SystemId::U6},
      {"U7", SystemId::U7}, {"custom", SystemId::custom}};
  for (const auto& [name, id] : names) {
    if (text == name) return id;
  }
  return std::nullopt;
}

std::string system_id_name(SystemId id) {
  static const char* names[] = {"U1", "U2", "U3", "U4", "U5", "U6", "U7", "custom"};
  return names[static_cast<int>(id)];
}

InfoSystem builtin_system(SystemId id, int max_index) {
  if (id == SystemId::custom) {
    throw std::invalid_argument("custom systems are built from tabulated attributes");
  }
  if (max_index < 1 && !uses_constant(id)) {
    throw std::invalid_argument("the family needs a positive subscript range");
  }
  InfoSystem sys;
  sys.id = id;
  sys.max_index = uses_constant(id) ? 0 : max_index;
  return sys;
}

bool system_has_attribute(const InfoSystem& sys, const std::string& attr) {
  if (sys.id == SystemId::custom) return sys.tabulated.count(attr) > 0;
  if (uses_constant(sys.id)) return attr == "f";
  auto sub = subscripted(attr);
  if (!sub || sub->second < 1 || sub->second > sys.max_index) return false;
  switch (sub->first) {
    case 'l': return uses_thresholds(sys.id);
    case 'f': return uses_indicators(sys.id);
    case 'g': return uses_pairs(sys.id) && sub->second % 2 == 1;
    default: return false;
  }
}

uint8_t system_value(const InfoSystem& sys, const std::string& attr, int point) {
  if (point < 0) throw std::invalid_argument("universe points are nonnegative");
  if (!system_has_attribute(sys, attr)) {
    throw std::invalid_argument("attribute " + attr + " not in the system");
  }
  if (sys.id == SystemId::custom) {
    const auto& values = sys.tabulated.at(attr);
    if (point >= static_cast<int>(values.size())) {
      throw std::invalid_argument("attribute " + attr +
                                  " not tabulated up to the universe bound");
    }
    return values[point];
  }
  if (uses_constant(sys.id)) return 0;
  auto sub = *subscripted(attr);
  switch (sub.first) {
    case 'l': return point <= sub.second ? 0 : 1;
    case 'f': return point == sub.second ? 1 : 0;
    default:  // 'g'
      return point == sub.second || point == sub.second + 1 ? 1 : 0;
  }
}

std::vector<std::string> system_attributes(const InfoSystem& sys) {
  std::vector<std::string> out;
  if (sys.id == SystemId::custom) {
    for (const auto& [name, values] : sys.tabulated) out.push_back(name);
    return out;
  }
  if (uses_constant(sys.id)) return {"f"};
  for (int i = 1; i <= sys.max_index; ++i) {
    if (uses_thresholds(sys.id)) out.push_back("l_" + std::to_string(i));
    if (uses_indicators(sys.id)) out.push_back("f_" + std::to_string(i));
    if (uses_pairs(sys.id) && i % 2 == 1) out.push_back("g_" + std::to_string(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// universe size beyond which the attribute is constant, with margin; the
// family-level bound is the maximum over the problem's attributes
std::optional<int> saturation_contribution(const InfoSystem& sys,
                                           const std::string& attr) {
  if (sys.id == SystemId::custom) return std::nullopt;
  if (uses_constant(sys.id)) return 0;
  auto sub = *subscripted(attr);
  switch (sub.first) {
    case 'l': return sub.second + 2;
    case 'f': return sub.second + 1;
    default: return sub.second + 2;  // 'g'
  }
}

}  // namespace

GeneratedTable table_of_problem(const InfoSystem& sys, const ProblemSpec& z,
                                const std::string& name) {
  if (sys.universe_bound < 0) {
    throw std::invalid_argument("universe bound not set");
  }
  if (z.attrs.empty()) {
    throw std::invalid_argument("a problem needs at least one attribute");
  }
  if (z.attrs.size() > 16) {
    throw std::invalid_argument("a problem takes at most 16 attributes");
  }
  for (const auto& attr : z.attrs) {
    if (!system_has_attribute(sys, attr)) {
      throw std::invalid_argument("attribute " + attr + " not in the system");
    }
  }

  // nu must cover the full value cube
  size_t n = z.attrs.size();
  std::vector<uint8_t> tuple(n, 0);
  while (true) {
    auto it = z.nu.find(tuple);
    if (it == z.nu.end()) {
      std::string bits;
      for (uint8_t v : tuple) bits += static_cast<char>('0' + v);
      throw std::invalid_argument("nu is undefined on tuple " + bits);
    }
    make_decision_set(it->second);
    size_t pos = n;
    while (pos > 0 && tuple[pos - 1] == sys.k - 1) tuple[--pos] = 0;
    if (pos == 0) break;
    ++tuple[pos - 1];
  }

  std::vector<Row> rows;
  std::set<std::vector<uint8_t>> seen;
  for (int a = 0; a <= sys.universe_bound; ++a) {
    std::vector<uint8_t> values;
    for (const auto& attr : z.attrs) values.push_back(system_value(sys, attr, a));
    if (seen.insert(values).second) {
      rows.push_back(Row{values, make_decision_set(z.nu.at(values))});
    }
  }

  std::optional<int> bound = 0;
  for (const auto& attr : z.attrs) {
    auto c = saturation_contribution(sys, attr);
    if (!c) {
      bound = std::nullopt;
      break;
    }
    bound = std::max(*bound, *c);
  }
  return GeneratedTable{DecisionTable(name, sys.k, z.attrs, std::move(rows)),
                        sys.universe_bound, bound,
                        bound.has_value() && sys.universe_bound >= *bound};
}

DecisionTable g_table(int index) {
  if (index < 0) throw std::invalid_argument("the table index is nonnegative");
  std::string s = std::to_string(index);
  std::vector<Row> rows = {Row{{1, 0, 0}, {1}}, Row{{0, 1, 0}, {2}},
                           Row{{0, 0, 1}, {3}}};
  return DecisionTable("G" + s, 2, {"a_" + s, "b_" + s, "c_" + s},
                       std::move(rows));
}

}  // namespace dectab
