#include "dectab/funtype.hpp"

#include <algorithm>
#include <stdexcept>

namespace dectab {

bool type_less(TypeLetter a, TypeLetter b) {
  return static_cast<int>(a) < static_cast<int>(b);
}

TypeLetter max_tilde(TypeLetter a, TypeLetter b) { return type_less(a, b) ? b : a; }

TypeLetter rho(TypeLetter x) {
  switch (x) {
    case TypeLetter::alpha: return TypeLetter::epsilon;
    case TypeLetter::beta: return TypeLetter::delta;
    case TypeLetter::gamma: return TypeLetter::gamma;
    case TypeLetter::delta: return TypeLetter::beta;
    case TypeLetter::epsilon: return TypeLetter::alpha;
  }
  throw std::logic_error("bad type letter");
}

char type_letter_char(TypeLetter x) {
  static const char chars[] = {'a', 'b', 'g', 'd', 'e'};
  return chars[static_cast<int>(x)];
}

std::string type_letter_name(TypeLetter x) {
  static const char* names[] = {"alpha", "beta", "gamma", "delta", "epsilon"};
  return names[static_cast<int>(x)];
}

std::optional<TypeLetter> parse_type_letter(const std::string& text) {
  for (int v = 0; v < 5; ++v) {
    auto letter = static_cast<TypeLetter>(v);
    if (text == type_letter_name(letter) ||
        (text.size() == 1 && text[0] == type_letter_char(letter))) {
      return letter;
    }
  }
  return std::nullopt;
}

Certificates certificates_for(TypeLetter x) {
  switch (x) {
    case TypeLetter::alpha:
      return {true, true, true, false};
    case TypeLetter::beta:
      return {true, false, true, false};
    case TypeLetter::gamma:
      return {true, false, false, false};
    case TypeLetter::delta:
      return {true, false, false, true};
    case TypeLetter::epsilon:
      return {false, true, true, true};
  }
  return {};
}

namespace {

TypeLetter classify_certified(const FunctionWindow& window, const Certificates& c) {
  // a finite domain bounds its values and both half-domains
  if (!c.dom_infinite &&
      (!c.bounded_above || !c.dom_plus_finite || !c.dom_minus_finite)) {
    throw std::invalid_argument(
        "certificates conflict: a finite domain is bounded with finite half-domains");
  }
  // the half-domains cover the domain, so both cannot be finite
  if (c.dom_infinite && c.dom_plus_finite && c.dom_minus_finite) {
    throw std::invalid_argument(
        "certificates conflict: both half-domains finite on an infinite domain");
  }
  // a bound B puts every point above B into the lower half-domain
  if (c.dom_infinite && c.bounded_above &&
      (!c.dom_plus_finite || c.dom_minus_finite)) {
    throw std::invalid_argument(
        "certificates conflict: a bounded function eventually stays below the diagonal");
  }
  // an infinite value caps the domain at that point
  if (c.dom_infinite && !window.infinite.empty()) {
    throw std::invalid_argument(
        "certificates conflict with the window: an infinite value bounds the domain");
  }

  if (!c.dom_infinite) return TypeLetter::epsilon;
  if (c.bounded_above) return TypeLetter::alpha;
  if (c.dom_plus_finite) return TypeLetter::beta;
  if (c.dom_minus_finite) return TypeLetter::delta;
  return TypeLetter::gamma;
}

std::optional<TypeLetter> classify_sampled(const FunctionWindow& window) {
  // an infinite value forces all later points infinite, so the domain is finite
  if (!window.infinite.empty()) return TypeLetter::epsilon;
  if (window.n_max + 1 < 16) return std::nullopt;

  int half = (window.n_max + 1) / 2;
  bool any_defined = false;
  bool all_defined = true;
  int above = 0, equal = 0, below = 0;
  for (int n = half; n <= window.n_max; ++n) {
    auto it = window.finite.find(n);
    if (it == window.finite.end()) {
      all_defined = false;
      continue;
    }
    any_defined = true;
    if (it->second > n) ++above;
    else if (it->second == n) ++equal;
    else ++below;
  }
  if (!any_defined) return TypeLetter::epsilon;  // the domain looks exhausted
  if (!all_defined) return std::nullopt;

  int points = window.n_max - half + 1;
  if (above == points) return TypeLetter::delta;
  if (equal == points) return TypeLetter::gamma;
  if (below != points) return std::nullopt;  // mixed verdicts

  // below the diagonal everywhere: split bounded from unbounded by whether
  // the top half pushes past every earlier value
  std::optional<long long> bottom_max, top_max;
  for (const auto& [n, value] : window.finite) {
    auto& slot = n < half ? bottom_max : top_max;
    slot = slot ? std::max(*slot, value) : value;
  }
  if (!bottom_max) return std::nullopt;  // no earlier points to compare against
  return *top_max > *bottom_max ? TypeLetter::beta : TypeLetter::alpha;
}

}  // namespace

std::optional<TypeLetter> typ_of(const FunctionDescriptor& fd) {
  if (fd.certificates) return classify_certified(fd.window, *fd.certificates);
  return classify_sampled(fd.window);
}

namespace {

UpperTypeTable upper_of(const char* rows) {
  // nine letter chars, rows of three separated by '/'
  UpperTypeTable out;
  int pos = 0;
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      auto letter = parse_type_letter(std::string(1, rows[pos++]));
      out.cell[b][c] = *letter;
    }
    ++pos;  // skip '/' or the terminator
  }
  return out;
}

}  // namespace

const std::array<UpperTypeTable, 7>& upper_constants() {
  static const std::array<UpperTypeTable, 7> tables = {
      upper_of("aaa/aaa/aaa"), upper_of("gee/aaa/aaa"), upper_of("gee/bge/aaa"),
      upper_of("gee/gge/aaa"), upper_of("gee/ggg/ggg"), upper_of("gee/ggd/ggg"),
      upper_of("gee/gge/ggg")};
  return tables;
}

const std::array<FullTypeTable, 7>& full_constants() {
  static const std::array<FullTypeTable, 7> tables = [] {
    std::array<FullTypeTable, 7> out;
    for (int i = 0; i < 7; ++i) out[i] = full_from_upper(upper_constants()[i]);
    return out;
  }();
  return tables;
}

std::optional<int> match_upper_constant(const UpperTypeTable& table) {
  const auto& all = upper_constants();
  for (int i = 0; i < 7; ++i) {
    if (all[i] == table) return i + 1;
  }
  return std::nullopt;
}

std::optional<int> match_full_constant(const FullTypeTable& table) {
  const auto& all = full_constants();
  for (int i = 0; i < 7; ++i) {
    if (all[i] == table) return i + 1;
  }
  return std::nullopt;
}

FullTypeTable full_from_upper(const UpperTypeTable& upper) {
  FullTypeTable out;
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      out.cell[b][c] = {rho(upper.cell[c][b]), upper.cell[b][c]};
    }
  }
  return out;
}

std::set<int> union_upper_possibilities(int first, int second) {
  if (first < 1 || first > 7 || second < 1 || second > 7) {
    throw std::invalid_argument("reference table index out of range");
  }
  const auto& u1 = upper_constants()[first - 1];
  const auto& u2 = upper_constants()[second - 1];
  UpperTypeTable base;
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      base.cell[b][c] = max_tilde(u1.cell[b][c], u2.cell[b][c]);
    }
  }
  // cell (d,a) escapes the cellwise rule: two gamma entries admit delta too
  std::set<TypeLetter> da = {base.cell[1][2]};
  if (u1.cell[1][2] == TypeLetter::gamma && u2.cell[1][2] == TypeLetter::gamma) {
    da.insert(TypeLetter::delta);
  }
  std::set<int> out;
  for (TypeLetter letter : da) {
    base.cell[1][2] = letter;
    auto matched = match_upper_constant(base);
    if (!matched) throw std::logic_error("union produced an unlisted table");
    out.insert(*matched);
  }
  return out;
}

std::string print_upper_table(const UpperTypeTable& table) {
  std::string out;
  for (int b = 0; b < 3; ++b) {
    if (b) out += '/';
    for (int c = 0; c < 3; ++c) out += type_letter_char(table.cell[b][c]);
  }
  return out;
}

std::string print_full_table(const FullTypeTable& table) {
  std::string out;
  for (int b = 0; b < 3; ++b) {
    if (b) out += '/';
    for (int c = 0; c < 3; ++c) {
      if (c) out += ' ';
      out += type_letter_char(table.cell[b][c].first);
      out += type_letter_char(table.cell[b][c].second);
    }
  }
  return out;
}

}  // namespace dectab
