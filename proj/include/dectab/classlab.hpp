// Empirical upper and lower bound functions over enumerated class slices,
// infinity detection by certified pumps, and assembly of the nine-cell type
// tables for a generated class with its measure.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dectab/closure.hpp"
#include "dectab/funtype.hpp"
#include "dectab/infosys.hpp"
#include "dectab/measure.hpp"
#include "dectab/table.hpp"

namespace dectab {

// row/column index into the type tables: full read, deterministic tree,
// nondeterministic tree
enum class Mode { i = 0, d = 1, a = 2 };

const char* mode_name(Mode m);
std::optional<Mode> parse_mode(const std::string& text);

struct TPair {
  std::vector<DecisionTable> generators;
  ComplexityMeasure measure;
  std::string label;
  // Declared asymptotic facts per (b, c) cell. A bounded window can never
  // prove them; assembly checks them against the window for consistency and
  // reports them as assumptions.
  std::map<std::pair<Mode, Mode>, Certificates> declared_upper;
  std::map<std::pair<Mode, Mode>, Certificates> declared_lower;
};

enum class PumpKind { column_duplication, degenerate_decision_replacement };
const char* pump_kind_name(PumpKind k);

// Certifies an infinite bound value: starting from base_table, which lies in
// the slice psi^c <= bound_n, column duplication strictly grows psi^b while
// psi^c stays inside the slice, checked over three consecutive applications.
struct PumpEvidence {
  CanonicalTable base_table;
  PumpKind pump_kind = PumpKind::column_duplication;
  Mode grown_mode = Mode::i;  // b
  Mode fixed_mode = Mode::d;  // c
  long long bound_n = 0;
};

// Reruns the three-step growth check the detector performed.
bool pump_certifies(const PumpEvidence& ev, const ComplexityMeasure& measure);

enum class BoundKind { Empty, Finite, Infinite };

struct BoundValue {
  BoundKind kind = BoundKind::Empty;
  long long value = 0;                    // Finite only
  std::optional<PumpEvidence> evidence;   // Infinite only
  bool exact = false;  // the enumeration provably covered the whole slice
  std::string note;    // the covering argument, or what cut the search short
  std::optional<CanonicalTable> witness;  // a slice table realizing value
};

BoundValue bound_empty(bool exact, std::string note);
BoundValue bound_finite(long long value, bool exact, std::string note,
                        std::optional<CanonicalTable> witness);
BoundValue bound_infinite(PumpEvidence evidence);

// max psi^b over {T in the class: psi^c(T) <= n}; pump detection runs first
// and is the only source of Infinite
BoundValue u_empirical(const TPair& tp, Mode b, Mode c, long long n,
                       const ClosureConfig& cfg);

// min psi^b over {T in the class: psi^c(T) >= n}; without an exactness
// argument the result is an upper bound on the true minimum
BoundValue l_empirical(const TPair& tp, Mode b, Mode c, long long n,
                       const ClosureConfig& cfg);

// Whole windows n = 0..n_max for one cell, sharing a single enumeration
// across the window instead of rebuilding it per point.
std::vector<BoundValue> u_window(const TPair& tp, Mode b, Mode c,
                                 long long n_max, const ClosureConfig& cfg);
std::vector<BoundValue> l_window(const TPair& tp, Mode b, Mode c,
                                 long long n_max, const ClosureConfig& cfg);

struct CellReport {
  char bound = 'U';  // 'U' or 'L'
  Mode b = Mode::i;
  Mode c = Mode::i;
  std::vector<BoundValue> values;  // index n = 0..n_max
  FunctionDescriptor descriptor;
  std::optional<TypeLetter> letter;
  std::string evidence;  // "pump:<kind>", "certificate", "window" or "none"
  bool exact = false;    // every window value is exact
};

struct TPairTypeReport {
  std::string label;
  int n_max = 0;
  std::array<std::array<CellReport, 3>, 3> upper;
  std::array<std::array<CellReport, 3>, 3> lower;
  std::optional<UpperTypeTable> upper_table;
  std::optional<FullTypeTable> full_table;
  std::optional<int> upper_match;  // 1-based reference table index
  std::optional<int> full_match;
  bool conclusive = false;
  std::vector<std::string> inconclusive_cells;  // "U(i,d)" style
};

// Computes all 18 windows up to n_max, classifies every cell through the
// letter machinery, and matches the assembled tables against the reference
// constants. Declared certificate conflicts surface as invalid_argument.
TPairTypeReport assemble_tpair_type(const TPair& tp, int n_max,
                                    const ClosureConfig& cfg);

// Union of two classes over disjoint attribute alphabets that agree on the
// empty word. Declared certificates do not carry over; the union gets its
// own. Errors name the violated clause.
TPair union_tpair(const TPair& tp1, const TPair& tp2);

// Overwrites all 36 declared cells with the certificates of reference table
// `reference_index` (1-based): upper letters from its upper parts, lower
// letters from its lower parts.
void declare_reference_cells(TPair& tp, int reference_index);

// 0 below min(K), else the largest element of K that is <= n. K must be
// nonempty and sorted ascending.
long long phi_K(const std::vector<long long>& K, long long n);

// The indicator-triple classes for every index in K under the family
// measure. complement_infinite says whether infinitely many indices are
// missing from the ambient index set; it decides which reference table the
// declared certificates follow (5 when true, 6 when false).
TPair tk_tpair(const std::vector<int>& K, bool complement_infinite);

// Bounded lab setup for one of the built-in attribute families: generators
// from the saturated full-attribute problem, the family's measure, and
// declared certificates following its reference table.
TPair builtin_lab_pair(SystemId id, int max_index);

}  // namespace dectab
