#pragma once
// Five-letter growth classification of partial functions on N, the dual map,
// the nine-cell type tables with their seven reference constants, and the
// rule for combining the types of two merged classes.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace dectab {

// ordered: alpha < beta < gamma < delta < epsilon
enum class TypeLetter { alpha = 0, beta, gamma, delta, epsilon };

bool type_less(TypeLetter a, TypeLetter b);
TypeLetter max_tilde(TypeLetter a, TypeLetter b);
// the order-reversing involution pairing alpha<->epsilon and beta<->delta
TypeLetter rho(TypeLetter x);
char type_letter_char(TypeLetter x);  // 'a', 'b', 'g', 'd', 'e'
std::string type_letter_name(TypeLetter x);
std::optional<TypeLetter> parse_type_letter(const std::string& text);

// Sampled values of a partial function on {0..n_max}. A point can be
// undefined (absent), carry a finite value, or be marked infinite, which
// means the true value exceeds every bound there and at every later point.
struct FunctionWindow {
  int n_max = -1;
  std::map<int, long long> finite;
  std::set<int> infinite;
};

// Declared asymptotic facts about the function; the window alone can never
// prove them. dom refers to the set of points with finite values, dom_plus
// to points where the value is >= the point, dom_minus to <=.
struct Certificates {
  bool dom_infinite = false;
  bool bounded_above = false;
  bool dom_plus_finite = false;
  bool dom_minus_finite = false;
};

// the flag combination whose classification is the given letter
Certificates certificates_for(TypeLetter x);

struct FunctionDescriptor {
  FunctionWindow window;
  std::optional<Certificates> certificates;
};

// With certificates: applies the five defining clauses after rejecting
// inconsistent declarations. Without: a conservative sampling rule that
// needs window length >= 16 and a uniform verdict over the top half of the
// window; returns nullopt when the evidence is not stable.
std::optional<TypeLetter> typ_of(const FunctionDescriptor& fd);

// rows and columns are indexed 0,1,2 = full read, deterministic, nondeterministic
inline constexpr std::array<const char*, 3> kModeNames = {"i", "d", "a"};

struct UpperTypeTable {
  std::array<std::array<TypeLetter, 3>, 3> cell;
  bool operator==(const UpperTypeTable& other) const { return cell == other.cell; }
};

// each cell holds (lower letter, upper letter)
struct FullTypeTable {
  std::array<std::array<std::pair<TypeLetter, TypeLetter>, 3>, 3> cell;
  bool operator==(const FullTypeTable& other) const { return cell == other.cell; }
};

// the seven reference tables; index 0 holds table 1
const std::array<UpperTypeTable, 7>& upper_constants();
const std::array<FullTypeTable, 7>& full_constants();

// 1-based index of the matching reference table, nullopt if unlisted
std::optional<int> match_upper_constant(const UpperTypeTable& table);
std::optional<int> match_full_constant(const FullTypeTable& table);

// lower component of cell (b,c) is rho of the upper component of cell (c,b)
FullTypeTable full_from_upper(const UpperTypeTable& upper);

// possible reference indices for the type of a merged class: cellwise
// max_tilde, except that two gamma entries in cell (d,a) admit both gamma
// and delta there
std::set<int> union_upper_possibilities(int first, int second);

// compact forms for reports: "gee/aaa/aaa" and "gg ee ee/aa ea ea/aa ea ea"
std::string print_upper_table(const UpperTypeTable& table);
std::string print_full_table(const FullTypeTable& table);

}  // namespace dectab
