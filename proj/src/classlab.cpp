#include "dectab/classlab.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dectab/solver.hpp"

namespace dectab {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::i:
      return "i";
    case Mode::d:
      return "d";
    case Mode::a:
      return "a";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& text) {
  if (text == "i") return Mode::i;
  if (text == "d") return Mode::d;
  if (text == "a") return Mode::a;
  return std::nullopt;
}

const char* pump_kind_name(PumpKind k) {
  switch (k) {
    case PumpKind::column_duplication:
      return "column_duplication";
    case PumpKind::degenerate_decision_replacement:
      return "degenerate_decision_replacement";
  }
  return "?";
}

BoundValue bound_empty(bool exact, std::string note) {
  BoundValue v;
  v.kind = BoundKind::Empty;
  v.exact = exact;
  v.note = std::move(note);
  return v;
}

BoundValue bound_finite(long long value, bool exact, std::string note,
                        std::optional<CanonicalTable> witness) {
  BoundValue v;
  v.kind = BoundKind::Finite;
  v.value = value;
  v.exact = exact;
  v.note = std::move(note);
  v.witness = std::move(witness);
  return v;
}

BoundValue bound_infinite(PumpEvidence evidence) {
  BoundValue v;
  v.kind = BoundKind::Infinite;
  v.evidence = std::move(evidence);
  v.exact = true;
  v.note = "certified by three pump applications";
  return v;
}

namespace {

constexpr long long kDNodeBudget = 80000;
constexpr long long kAPathBudget = 60000;

int mode_index(Mode m) { return static_cast<int>(m); }

// How the column word value reacts to duplication and column counts.
enum class MeasureClass {
  ColumnGrowth,  // depth and positive weights: every duplicate adds value
  AlwaysZero,    // the word value is identically zero
  Other,
};

MeasureClass measure_class(const ComplexityMeasure& m) {
  switch (m.kind) {
    case MeasureKind::Depth:
    case MeasureKind::Weighted:
      return MeasureClass::ColumnGrowth;
    case MeasureKind::ConstantZero:
      return MeasureClass::AlwaysZero;
    default:
      return MeasureClass::Other;
  }
}

// duplication never lowers the column word value for these kinds
bool duplication_monotone(const ComplexityMeasure& m) {
  switch (m.kind) {
    case MeasureKind::Depth:
    case MeasureKind::Weighted:
    case MeasureKind::ConstantZero:
    case MeasureKind::Mu:
    case MeasureKind::UnionPoint:
    case MeasureKind::UnionFamily:
      return true;
    default:
      return false;
  }
}

std::optional<long long> psi_of(const DecisionTable& t, const ComplexityMeasure& m,
                                Mode mode) {
  switch (mode) {
    case Mode::i:
      return psi_i(t, m);
    case Mode::d: {
      if (m.additive()) return psi_d_additive(t, m).value;
      SolveResult r = psi_d_bruteforce(t, m, kDNodeBudget);
      if (r.inconclusive) return std::nullopt;
      return r.value;
    }
    case Mode::a: {
      if (m.additive()) return psi_a_certificate(t, m).value;
      SolveResult r = psi_a_bruteforce(t, m, kAPathBudget);
      if (r.inconclusive) return std::nullopt;
      return r.value;
    }
  }
  return std::nullopt;
}

struct SolvedClosure {
  ClosureResult closure;
  // per table, indexed by mode; nullopt when a solver budget ran out
  std::vector<std::array<std::optional<long long>, 3>> psi;
  bool all_solved = true;

  bool complete() const { return !closure.capped && all_solved; }
};

SolvedClosure solve_closure(const std::vector<DecisionTable>& generators,
                            const ComplexityMeasure& m, const ClosureConfig& cfg) {
  SolvedClosure out;
  out.closure = enumerate_closure(generators, cfg);
  out.psi.reserve(out.closure.tables.size());
  for (const auto& c : out.closure.tables) {
    std::array<std::optional<long long>, 3> row;
    for (int mo = 0; mo < 3; ++mo) {
      row[mo] = psi_of(c.table, m, static_cast<Mode>(mo));
      if (!row[mo]) out.all_solved = false;
    }
    out.psi.push_back(row);
  }
  return out;
}

int generator_columns(const std::vector<DecisionTable>& generators) {
  int cols = 1;
  for (const auto& g : generators) cols = std::max(cols, g.columns());
  return cols;
}

int max_weight(const ComplexityMeasure& m) {
  int w = 1;
  if (m.kind == MeasureKind::Weighted) {
    for (const auto& [attr, weight] : m.weights) w = std::max(w, weight);
  }
  return w;
}

// Scratch shared by one series of bound computations on a t-pair.
struct LabState {
  const TPair* tp = nullptr;
  ClosureConfig cfg;
  MeasureClass mclass = MeasureClass::Other;
  SolvedClosure dup_free;
  std::optional<SolvedClosure> duplicated;
  int duplicated_columns = 0;
  // per duplication-free table and fixed mode: whether three duplications
  // strictly grew the word value, and the largest fixed-mode value seen
  std::array<std::map<size_t, std::pair<bool, long long>>, 3> pump_probe_memo;

  const ComplexityMeasure& measure() const { return tp->measure; }
};

LabState make_state(const TPair& tp, const ClosureConfig& cfg) {
  if (tp.generators.empty()) {
    throw std::invalid_argument("a t-pair needs at least one generator");
  }
  LabState st;
  st.tp = &tp;
  st.cfg = cfg;
  st.mclass = measure_class(tp.measure);
  ClosureConfig flat = cfg;
  flat.include_duplication = false;
  st.dup_free = solve_closure(tp.generators, tp.measure, flat);
  return st;
}

// Columns the duplicated pool should reach for bound n: slices below n need
// n columns at most, and minimal tables above n fit under n plus the
// generator width plus the largest letter weight.
long long dup_want(const LabState& st, long long n) {
  return std::max<long long>(n, 1) + generator_columns(st.tp->generators) +
         max_weight(st.measure());
}

const SolvedClosure& duplicated_closure(LabState& st, long long n) {
  int cols = static_cast<int>(std::min<long long>(st.cfg.max_columns, dup_want(st, n)));
  if (!st.duplicated || st.duplicated_columns < cols) {
    ClosureConfig dup = st.cfg;
    dup.include_duplication = true;
    dup.max_columns = cols;
    st.duplicated = solve_closure(st.tp->generators, st.measure(), dup);
    st.duplicated_columns = cols;
  }
  return *st.duplicated;
}

std::pair<bool, long long> pump_probe(LabState& st, size_t t, Mode c) {
  auto& memo = st.pump_probe_memo[mode_index(c)];
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  std::pair<bool, long long> out{false, 0};
  const ComplexityMeasure& m = st.measure();
  auto prev = st.dup_free.psi[t][mode_index(Mode::i)];
  if (prev) {
    DecisionTable probe = st.dup_free.closure.tables[t].table;
    long long last = *prev;
    long long fixed_max = 0;
    bool grew = true;
    for (int step = 0; step < 3 && grew; ++step) {
      probe = duplicate_column(probe, 0);
      auto grown = psi_of(probe, m, Mode::i);
      if (!grown || *grown <= last) {
        grew = false;
        break;
      }
      auto fixed = psi_of(probe, m, c);
      if (!fixed) {
        grew = false;
        break;
      }
      last = *grown;
      fixed_max = std::max(fixed_max, *fixed);
    }
    out = {grew, fixed_max};
  }
  memo[t] = out;
  return out;
}

std::optional<PumpEvidence> detect_pump(LabState& st, Mode b, Mode c, long long n) {
  // the one finite-generator route to an infinite bound: duplication grows
  // the full-read cost while both tree costs ignore duplicate columns
  if (b != Mode::i || c == Mode::i) return std::nullopt;
  const auto& tables = st.dup_free.closure.tables;
  for (size_t t = 0; t < tables.size(); ++t) {
    auto vc = st.dup_free.psi[t][mode_index(c)];
    auto vb = st.dup_free.psi[t][mode_index(b)];
    if (!vc || !vb || *vc > n) continue;
    auto [grew, fixed_max] = pump_probe(st, t, c);
    if (!grew || fixed_max > n) continue;
    PumpKind kind = tables[t].table.is_degenerate()
                        ? PumpKind::degenerate_decision_replacement
                        : PumpKind::column_duplication;
    return PumpEvidence{tables[t], kind, b, c, n};
  }
  return std::nullopt;
}

struct SliceScan {
  bool any_member = false;
  bool any_unsolved_filter = false;  // a table whose psi^c is unknown
  bool any_member_unsolved = false;  // a member whose psi^b is unknown
  long long best = 0;
  std::optional<size_t> best_index;
};

template <typename Keep>
SliceScan scan_slice(const SolvedClosure& pool, Mode b, Mode c, Keep keep, int dir) {
  SliceScan out;
  for (size_t t = 0; t < pool.psi.size(); ++t) {
    auto vc = pool.psi[t][mode_index(c)];
    if (!vc) {
      out.any_unsolved_filter = true;
      continue;
    }
    if (!keep(*vc)) continue;
    out.any_member = true;
    auto vb = pool.psi[t][mode_index(b)];
    if (!vb) {
      out.any_member_unsolved = true;
      continue;
    }
    if (!out.best_index || (dir > 0 ? *vb > out.best : *vb < out.best)) {
      out.best = *vb;
      out.best_index = t;
    }
  }
  return out;
}

// Duplicates the first column until the word value reaches n.
std::optional<CanonicalTable> pumped_witness(const LabState& st,
                                             const CanonicalTable& base, long long n) {
  DecisionTable t = base.table;
  auto v = psi_of(t, st.measure(), Mode::i);
  long long guard = 4 * std::max<long long>(n, 1) + 64;
  while (v && *v < n && guard-- > 0) {
    t = duplicate_column(t, 0);
    v = psi_of(t, st.measure(), Mode::i);
  }
  if (!v || *v < n) return std::nullopt;
  return canonical_form(t);
}

BoundValue u_core(LabState& st, Mode b, Mode c, long long n) {
  if (n < 0) throw std::invalid_argument("bounds are nonnegative");
  if (auto pump = detect_pump(st, b, c, n)) return bound_infinite(std::move(*pump));

  const bool tree_only = b != Mode::i && c != Mode::i;
  const SolvedClosure* pool = nullptr;
  bool pool_argument = false;  // the pool provably covers the slice values
  std::string argument;
  if (st.mclass == MeasureClass::AlwaysZero) {
    pool = &st.dup_free;
    pool_argument = true;
    argument = "the zero word value adds nothing beyond the duplication-free closure";
  } else if (c != Mode::i && (tree_only || st.mclass == MeasureClass::ColumnGrowth)) {
    // tree costs ignore duplicate columns; with a column-growth measure a
    // failed pump means no table reaches the slice at all
    pool = &st.dup_free;
    pool_argument = true;
    argument = "tree costs ignore duplicate columns";
  } else if (c == Mode::i && st.mclass == MeasureClass::ColumnGrowth) {
    pool = &duplicated_closure(st, n);
    pool_argument = st.cfg.max_columns >= std::max<long long>(n, 1);
    argument = pool_argument ? "the word value bounds the column count"
                             : "the column cap cuts the slice";
  } else {
    pool = &duplicated_closure(st, n);
    pool_argument = false;
    argument = "duplication effects on this measure are not modeled";
  }

  SliceScan scan = scan_slice(*pool, b, c, [n](long long v) { return v <= n; }, +1);
  bool exact = pool_argument && pool->complete() && !scan.any_unsolved_filter &&
               !scan.any_member_unsolved;
  std::string note = argument;
  if (!pool->complete() && pool->closure.capped) {
    note = "closure enumeration hit the table cap";
  } else if (scan.any_unsolved_filter || scan.any_member_unsolved) {
    note = "a solver budget ran out inside the slice";
  }
  if (!scan.any_member) {
    return bound_empty(exact, exact ? "no table reaches the slice" : note);
  }
  if (!scan.best_index) {
    return bound_finite(0, false, "every slice member defeated its solver budget",
                        std::nullopt);
  }
  return bound_finite(scan.best, exact, note, pool->closure.tables[*scan.best_index]);
}

BoundValue l_core(LabState& st, Mode b, Mode c, long long n) {
  if (n < 0) throw std::invalid_argument("bounds are nonnegative");
  const ComplexityMeasure& m = st.measure();

  if (c == Mode::i && st.mclass == MeasureClass::AlwaysZero && n >= 1) {
    return bound_empty(true, "the zero word value never reaches the bound");
  }

  if (c == Mode::i && st.mclass == MeasureClass::ColumnGrowth && b != Mode::i) {
    // duplication lifts any table's word value past the bound while leaving
    // the tree costs alone, so the minimum is the class minimum
    SliceScan scan =
        scan_slice(st.dup_free, b, b, [](long long) { return true; }, -1);
    if (!scan.best_index) {
      return bound_finite(0, false, "every table defeated its solver budget",
                          std::nullopt);
    }
    bool exact = st.dup_free.complete() && !scan.any_member_unsolved;
    auto witness =
        pumped_witness(st, st.dup_free.closure.tables[*scan.best_index], n);
    return bound_finite(scan.best, exact,
                        exact ? "duplication lifts the word value past the bound "
                                "without touching tree costs"
                              : "closure enumeration was cut short",
                        std::move(witness));
  }

  const SolvedClosure* pool = nullptr;
  bool pool_argument = false;
  std::string argument;
  if (c == Mode::i && st.mclass == MeasureClass::AlwaysZero) {
    pool = &st.dup_free;  // n == 0: the slice is the whole class
    pool_argument = true;
    argument = "the zero word value adds nothing beyond the duplication-free closure";
  } else if (c == Mode::i) {
    pool = &duplicated_closure(st, n);
    if (st.mclass == MeasureClass::ColumnGrowth && b == Mode::i) {
      pool_argument =
          m.kind == MeasureKind::Depth && st.cfg.max_columns >= dup_want(st, n);
      argument = pool_argument
                     ? "each duplicate adds one to the word value, so minimal "
                       "slice members fit the enumerated columns"
                     : "minimal slice members may exceed the enumerated columns";
    } else {
      pool_argument = false;
      argument = "duplication effects on this measure are not modeled";
    }
  } else {
    pool = &st.dup_free;
    if (b == Mode::i) {
      pool_argument = duplication_monotone(m);
      argument = pool_argument
                     ? "duplication never lowers the word value and tree costs "
                       "ignore duplicate columns"
                     : "duplication could lower the word value below the "
                       "enumerated samples";
    } else {
      pool_argument = true;
      argument = "tree costs ignore duplicate columns";
    }
  }

  SliceScan scan = scan_slice(*pool, b, c, [n](long long v) { return v >= n; }, -1);
  bool exact = pool_argument && pool->complete() && !scan.any_unsolved_filter &&
               !scan.any_member_unsolved;
  std::string note = argument;
  if (!pool->complete() && pool->closure.capped) {
    note = "closure enumeration hit the table cap";
  } else if (scan.any_unsolved_filter || scan.any_member_unsolved) {
    note = "a solver budget ran out inside the slice";
  }
  if (!scan.any_member) {
    bool empty_exact = exact && c != Mode::i;
    return bound_empty(empty_exact,
                       empty_exact ? "no table reaches the slice" : note);
  }
  if (!scan.best_index) {
    return bound_finite(0, false, "every slice member defeated its solver budget",
                        std::nullopt);
  }
  return bound_finite(scan.best, exact, note, pool->closure.tables[*scan.best_index]);
}

}  // namespace

bool pump_certifies(const PumpEvidence& ev, const ComplexityMeasure& measure) {
  auto base_fixed = psi_of(ev.base_table.table, measure, ev.fixed_mode);
  auto prev = psi_of(ev.base_table.table, measure, ev.grown_mode);
  if (!base_fixed || !prev || *base_fixed > ev.bound_n) return false;
  DecisionTable probe = ev.base_table.table;
  for (int step = 0; step < 3; ++step) {
    probe = duplicate_column(probe, 0);
    auto grown = psi_of(probe, measure, ev.grown_mode);
    auto fixed = psi_of(probe, measure, ev.fixed_mode);
    if (!grown || !fixed || *grown <= *prev || *fixed > ev.bound_n) return false;
    prev = grown;
  }
  return true;
}

BoundValue u_empirical(const TPair& tp, Mode b, Mode c, long long n,
                       const ClosureConfig& cfg) {
  LabState st = make_state(tp, cfg);
  return u_core(st, b, c, n);
}

BoundValue l_empirical(const TPair& tp, Mode b, Mode c, long long n,
                       const ClosureConfig& cfg) {
  LabState st = make_state(tp, cfg);
  return l_core(st, b, c, n);
}

std::vector<BoundValue> u_window(const TPair& tp, Mode b, Mode c, long long n_max,
                                 const ClosureConfig& cfg) {
  LabState st = make_state(tp, cfg);
  // only c = i slices ever consult the duplicated pool
  if (c == Mode::i && st.mclass != MeasureClass::AlwaysZero) {
    duplicated_closure(st, n_max);
  }
  std::vector<BoundValue> out;
  for (long long n = 0; n <= n_max; ++n) out.push_back(u_core(st, b, c, n));
  return out;
}

std::vector<BoundValue> l_window(const TPair& tp, Mode b, Mode c, long long n_max,
                                 const ClosureConfig& cfg) {
  LabState st = make_state(tp, cfg);
  if (c == Mode::i && st.mclass != MeasureClass::AlwaysZero) {
    duplicated_closure(st, n_max);
  }
  std::vector<BoundValue> out;
  for (long long n = 0; n <= n_max; ++n) out.push_back(l_core(st, b, c, n));
  return out;
}

TPairTypeReport assemble_tpair_type(const TPair& tp, int n_max,
                                    const ClosureConfig& cfg) {
  if (n_max < 0) throw std::invalid_argument("the window end is nonnegative");
  LabState st = make_state(tp, cfg);
  if (st.mclass != MeasureClass::AlwaysZero) {
    duplicated_closure(st, n_max);  // widest pool first, every cell reuses it
  }

  TPairTypeReport rep;
  rep.label = tp.label;
  rep.n_max = n_max;
  bool all_upper = true;
  bool all_lower = true;
  for (int bi = 0; bi < 3; ++bi) {
    for (int ci = 0; ci < 3; ++ci) {
      Mode b = static_cast<Mode>(bi);
      Mode c = static_cast<Mode>(ci);
      for (char side : {'U', 'L'}) {
        CellReport cell;
        cell.bound = side;
        cell.b = b;
        cell.c = c;
        cell.exact = true;
        cell.descriptor.window.n_max = n_max;
        for (int n = 0; n <= n_max; ++n) {
          BoundValue v = side == 'U' ? u_core(st, b, c, n) : l_core(st, b, c, n);
          if (v.kind == BoundKind::Finite) cell.descriptor.window.finite[n] = v.value;
          if (v.kind == BoundKind::Infinite) cell.descriptor.window.infinite.insert(n);
          cell.exact = cell.exact && v.exact;
          cell.values.push_back(std::move(v));
        }
        const auto& declared = side == 'U' ? tp.declared_upper : tp.declared_lower;
        auto dit = declared.find({b, c});
        if (dit != declared.end()) cell.descriptor.certificates = dit->second;
        cell.letter = typ_of(cell.descriptor);
        // evidence precedence: a certified pump, then a declared
        // certificate, then the window itself
        cell.evidence = cell.letter ? "window" : "none";
        if (cell.descriptor.certificates) cell.evidence = "certificate";
        for (const auto& v : cell.values) {
          if (v.kind == BoundKind::Infinite) {
            cell.evidence = std::string("pump:") + pump_kind_name(v.evidence->pump_kind);
            break;
          }
        }
        if (!cell.letter) {
          std::ostringstream name;
          name << side << "(" << mode_name(b) << "," << mode_name(c) << ")";
          rep.inconclusive_cells.push_back(name.str());
          (side == 'U' ? all_upper : all_lower) = false;
        }
        (side == 'U' ? rep.upper : rep.lower)[bi][ci] = std::move(cell);
      }
    }
  }

  if (all_upper) {
    UpperTypeTable up;
    for (int bi = 0; bi < 3; ++bi) {
      for (int ci = 0; ci < 3; ++ci) up.cell[bi][ci] = *rep.upper[bi][ci].letter;
    }
    rep.upper_table = up;
    rep.upper_match = match_upper_constant(up);
  }
  if (all_upper && all_lower) {
    FullTypeTable full;
    for (int bi = 0; bi < 3; ++bi) {
      for (int ci = 0; ci < 3; ++ci) {
        full.cell[bi][ci] = {*rep.lower[bi][ci].letter, *rep.upper[bi][ci].letter};
      }
    }
    rep.full_table = full;
    rep.full_match = match_full_constant(full);
  }
  rep.conclusive = all_upper && all_lower;
  return rep;
}

TPair union_tpair(const TPair& tp1, const TPair& tp2) {
  auto alphabet = [](const TPair& tp) {
    std::set<std::string> out;
    for (const auto& g : tp.generators) {
      for (const auto& a : g.attributes()) out.insert(a);
    }
    return out;
  };
  std::set<std::string> a1 = alphabet(tp1);
  std::set<std::string> a2 = alphabet(tp2);
  for (const auto& f : a1) {
    if (a2.count(f)) {
      throw std::invalid_argument(
          "t-pair union needs disjoint attribute alphabets, both classes use " + f);
    }
  }
  int lambda1 = tp1.measure.value_at_lambda();
  int lambda2 = tp2.measure.value_at_lambda();
  if (lambda1 != lambda2) {
    throw std::invalid_argument("t-pair union needs matching empty-word values, got " +
                                std::to_string(lambda1) + " and " +
                                std::to_string(lambda2));
  }

  TPair out;
  out.generators = tp1.generators;
  out.generators.insert(out.generators.end(), tp2.generators.begin(),
                        tp2.generators.end());
  out.label = tp1.label + "+" + tp2.label;
  auto family_of = [](const ComplexityMeasure& m) -> std::optional<std::vector<int>> {
    if (m.kind == MeasureKind::UnionPoint) return std::vector<int>{m.point};
    if (m.kind == MeasureKind::UnionFamily) return m.family;
    return std::nullopt;
  };
  auto f1 = family_of(tp1.measure);
  auto f2 = family_of(tp2.measure);
  if (f1 && f2) {
    std::vector<int> merged = *f1;
    merged.insert(merged.end(), f2->begin(), f2->end());
    out.measure = union_family_measure(std::move(merged));
  } else {
    out.measure = combined_measure(tp1.measure, {a1.begin(), a1.end()}, tp2.measure,
                                   {a2.begin(), a2.end()});
  }
  return out;
}

long long phi_K(const std::vector<long long>& K, long long n) {
  if (K.empty()) throw std::invalid_argument("the index set must be nonempty");
  if (!std::is_sorted(K.begin(), K.end())) {
    throw std::invalid_argument("the index set must be sorted ascending");
  }
  if (n < K.front()) return 0;
  auto it = std::upper_bound(K.begin(), K.end(), n);
  return *(it - 1);
}

void declare_reference_cells(TPair& tp, int reference_index) {
  if (reference_index < 1 || reference_index > 7) {
    throw std::invalid_argument("reference table index out of range");
  }
  const FullTypeTable& full = full_constants()[reference_index - 1];
  for (int bi = 0; bi < 3; ++bi) {
    for (int ci = 0; ci < 3; ++ci) {
      auto key = std::make_pair(static_cast<Mode>(bi), static_cast<Mode>(ci));
      tp.declared_upper[key] = certificates_for(full.cell[bi][ci].second);
      tp.declared_lower[key] = certificates_for(full.cell[bi][ci].first);
    }
  }
}

TPair tk_tpair(const std::vector<int>& K, bool complement_infinite) {
  if (K.empty()) throw std::invalid_argument("the index list must be nonempty");
  std::vector<int> sorted = K;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 0) throw std::invalid_argument("indices are nonnegative");

  TPair tp;
  for (int i : sorted) tp.generators.push_back(g_table(i));
  tp.measure = union_family_measure(sorted);
  std::ostringstream label;
  label << "triples{";
  for (size_t i = 0; i < sorted.size(); ++i) label << (i ? "," : "") << sorted[i];
  label << "}" << (complement_infinite ? " sparse" : " cofinite");
  tp.label = label.str();
  declare_reference_cells(tp, complement_infinite ? 5 : 6);
  return tp;
}

TPair builtin_lab_pair(SystemId id, int max_index) {
  if (id == SystemId::custom) {
    throw std::invalid_argument("builtin lab pairs cover the named families only");
  }
  InfoSystem sys = builtin_system(id, max_index);
  sys.universe_bound = max_index + 2;

  ProblemSpec z;
  z.attrs = system_attributes(sys);
  // decisions are irrelevant to the generated value structure; the closure
  // sweep redecorates rows anyway
  std::vector<uint8_t> tuple(z.attrs.size(), 0);
  while (true) {
    z.nu[tuple] = {0};
    size_t at = 0;
    while (at < tuple.size() && tuple[at] == 1) tuple[at++] = 0;
    if (at == tuple.size()) break;
    tuple[at] = 1;
  }

  GeneratedTable gen = table_of_problem(sys, z, system_id_name(id));
  if (!gen.saturated) {
    throw std::logic_error("builtin universe bound is below saturation");
  }

  TPair tp;
  tp.generators = {gen.table};
  switch (id) {
    case SystemId::U1:
      tp.measure = constant_zero_measure();
      tp.label = system_id_name(id) + ".pi";
      break;
    case SystemId::U4:
      tp.measure = mu_measure();
      tp.label = system_id_name(id) + ".mu";
      break;
    default:
      tp.measure = depth_measure();
      tp.label = system_id_name(id) + ".h";
      break;
  }
  declare_reference_cells(tp, static_cast<int>(id) + 1);
  return tp;
}

}  // namespace dectab
