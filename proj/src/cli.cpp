#include "dectab/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dectab/classlab.hpp"
#include "dectab/closure.hpp"
#include "dectab/funtype.hpp"
#include "dectab/infosys.hpp"
#include "dectab/io_error.hpp"
#include "dectab/measure.hpp"
#include "dectab/solver.hpp"
#include "dectab/suite.hpp"
#include "dectab/table.hpp"
#include "dectab/table_io.hpp"
#include "dectab/tree.hpp"

namespace dectab {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Named measures cover the common cases; anything else is a .dmeas path.
ComplexityMeasure resolve_measure(const std::string& spec) {
  if (spec == "h" || spec == "depth") return depth_measure();
  if (spec == "pi" || spec == "zero") return constant_zero_measure();
  if (spec == "mu") return mu_measure();
  return load_dmeas(spec);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << text;
}

// ---------------------------------------------------------------------------

int cmd_inspect(const std::string& path, std::ostream& out) {
  DecisionTable t = load_dtab(path);
  std::string m;
  try {
    m = std::to_string(t.m_parameter());
  } catch (const std::exception&) {
    m = "?";  // more distinct attributes than the exact search covers
  }
  out << "n=" << t.columns() << ", N=" << t.row_count()
      << ", degenerate=" << (t.is_degenerate() ? "true" : "false") << ", M=" << m
      << "\n";
  return 0;
}

int cmd_solve(const std::string& table_path, const std::string& measure_spec,
              const std::string& param, const std::string& witness_path,
              long long budget, std::ostream& out, std::ostream& err) {
  DecisionTable t = load_dtab(table_path);
  ComplexityMeasure m = resolve_measure(measure_spec);

  long long value = 0;
  std::optional<DecisionTree> witness;
  if (param == "i") {
    if (!witness_path.empty()) {
      err << "error: the full-read cost has no tree witness\n";
      return 2;
    }
    value = psi_i(t, m);
  } else if (param == "d") {
    SolveResult res =
        m.additive() ? psi_d_additive(t, m) : psi_d_bruteforce(t, m, budget);
    if (res.inconclusive) {
      err << "error: solver budget exhausted before the search completed\n";
      return 1;
    }
    value = res.value;
    witness = std::move(res.witness);
  } else {
    bool certificate_ok = m.additive() && t.attributes().size() <= 16;
    SolveResult res =
        certificate_ok ? psi_a_certificate(t, m) : psi_a_bruteforce(t, m, budget);
    if (res.inconclusive) {
      err << "error: solver budget exhausted before the search completed\n";
      return 1;
    }
    value = res.value;
    witness = std::move(res.witness);
  }

  if (!witness_path.empty()) {
    if (!witness) {
      err << "error: the solver produced no witness tree\n";
      return 1;
    }
    save_dtree(*witness, witness_path);
  }
  out << value << "\n";
  return 0;
}

int cmd_validate_tree(const std::string& table_path, const std::string& tree_path,
                      bool deterministic, std::ostream& out) {
  DecisionTable t = load_dtab(table_path);
  DecisionTree g = load_dtree(tree_path);
  ValidationReport rep =
      deterministic ? validate_deterministic(g, t) : validate_nondeterministic(g, t);
  if (rep.valid) {
    out << "valid\n";
    return 0;
  }
  static const char* kWhy[] = {"malformed tree", "attribute outside the table",
                               "uncovered row",
                               "terminal not among the row's decisions",
                               "not deterministic"};
  out << "invalid (" << kWhy[rep.violated_condition] << "): " << rep.witness
      << "\n";
  return 1;
}

int cmd_closure(const std::vector<std::string>& generator_paths,
                const std::string& out_dir, const ClosureConfig& cfg,
                std::ostream& out) {
  std::vector<DecisionTable> generators;
  for (const auto& p : generator_paths) generators.push_back(load_dtab(p));
  ClosureResult res = enumerate_closure(generators, cfg);

  fs::create_directories(out_dir);
  ordered_json manifest;
  manifest["generators"] = generator_paths;
  ordered_json jcfg;
  jcfg["max_columns"] = cfg.max_columns;
  jcfg["decision_universe"] = cfg.decision_universe;
  jcfg["max_tables"] = cfg.max_tables;
  jcfg["include_duplication"] = cfg.include_duplication;
  manifest["config"] = std::move(jcfg);
  manifest["count"] = res.tables.size();
  manifest["capped"] = res.capped;

  int width = 1;
  for (size_t n = res.tables.size(); n >= 10; n /= 10) ++width;
  ordered_json listing = ordered_json::array();
  for (size_t i = 0; i < res.tables.size(); ++i) {
    std::ostringstream name;
    name << "t";
    name.width(width);
    name.fill('0');
    name << i;
    name << ".dtab";
    save_dtab(res.tables[i].table, (fs::path(out_dir) / name.str()).string());
    ordered_json item;
    item["file"] = name.str();
    item["hash"] = res.tables[i].hash;
    item["columns"] = res.tables[i].table.columns();
    item["rows"] = res.tables[i].table.row_count();
    listing.push_back(std::move(item));
  }
  manifest["tables"] = std::move(listing);
  write_text_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");

  out << res.tables.size() << " tables" << (res.capped ? " (capped)" : "")
      << "\n";
  return 0;
}

FunctionWindow parse_window_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  FunctionWindow w;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream parts(line);
    long long n;
    std::string value;
    if (!(parts >> n >> value) || n < 0) {
      throw ParseError(path, lineno, "expected '<point> <value|inf>'");
    }
    std::string extra;
    if (parts >> extra) throw ParseError(path, lineno, "trailing tokens");
    int point = static_cast<int>(n);
    if (w.finite.count(point) || w.infinite.count(point)) {
      throw ParseError(path, lineno, "duplicate point " + std::to_string(point));
    }
    if (value == "inf") {
      w.infinite.insert(point);
    } else {
      try {
        size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        w.finite[point] = v;
      } catch (const std::exception&) {
        throw ParseError(path, lineno, "bad value '" + value + "'");
      }
    }
    w.n_max = std::max(w.n_max, point);
  }
  return w;
}

Certificates parse_certify(const std::string& csv) {
  Certificates c;
  for (const auto& raw : split_csv(csv)) {
    std::string tok = trim(raw);
    if (tok == "infinite") {
      c.dom_infinite = true;
    } else if (tok == "finite") {
      c.dom_infinite = false;
    } else if (tok == "bounded") {
      c.bounded_above = true;
    } else if (tok == "unbounded") {
      c.bounded_above = false;
    } else if (tok == "domplus-finite") {
      c.dom_plus_finite = true;
    } else if (tok == "domplus-infinite") {
      c.dom_plus_finite = false;
    } else if (tok == "domminus-finite") {
      c.dom_minus_finite = true;
    } else if (tok == "domminus-infinite") {
      c.dom_minus_finite = false;
    } else {
      throw ParseError("", 0, "unknown certificate flag '" + tok + "'");
    }
  }
  return c;
}

int cmd_typ(const std::string& window_path, const std::string& certify,
            int nmax, std::ostream& out) {
  FunctionDescriptor fd;
  fd.window = parse_window_file(window_path);
  if (nmax >= 0) {
    if (nmax < fd.window.n_max) {
      throw ParseError(window_path, 0,
                       "--nmax is below the last sampled point");
    }
    fd.window.n_max = nmax;
  }
  if (!certify.empty()) fd.certificates = parse_certify(certify);
  std::optional<TypeLetter> letter = typ_of(fd);
  if (!letter) {
    out << "inconclusive\n";
    return 1;
  }
  out << type_letter_name(*letter) << "\n";
  return 0;
}

struct LabSpec {
  std::string label;
  std::vector<std::string> generators;
  std::string measure;
  std::vector<int> family;
  bool has_family = false;
  int reference = 0;
};

std::string parse_toml_string(const std::string& path, int lineno,
                              const std::string& value) {
  if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
    throw ParseError(path, lineno, "expected a quoted string");
  }
  return value.substr(1, value.size() - 2);
}

std::vector<std::string> parse_toml_list(const std::string& path, int lineno,
                                         const std::string& value) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    throw ParseError(path, lineno, "expected an array");
  }
  std::vector<std::string> items;
  std::string inner = trim(value.substr(1, value.size() - 2));
  if (inner.empty()) return items;
  for (const auto& piece : split_csv(inner)) {
    std::string t = trim(piece);
    if (t.empty()) throw ParseError(path, lineno, "empty array element");
    items.push_back(t);
  }
  return items;
}

LabSpec parse_lab_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  LabSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos && line.find('"', hash) == std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path, lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "label") {
      spec.label = parse_toml_string(path, lineno, value);
    } else if (key == "measure") {
      spec.measure = parse_toml_string(path, lineno, value);
    } else if (key == "generators") {
      for (const auto& item : parse_toml_list(path, lineno, value)) {
        spec.generators.push_back(parse_toml_string(path, lineno, item));
      }
    } else if (key == "family") {
      spec.has_family = true;
      for (const auto& item : parse_toml_list(path, lineno, value)) {
        try {
          spec.family.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw ParseError(path, lineno, "bad integer '" + item + "'");
        }
      }
    } else if (key == "reference") {
      try {
        spec.reference = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError(path, lineno, "bad integer '" + value + "'");
      }
      if (spec.reference < 1 || spec.reference > 7) {
        throw ParseError(path, lineno, "reference must be between 1 and 7");
      }
    } else {
      throw ParseError(path, lineno, "unknown key '" + key + "'");
    }
  }
  if (spec.generators.empty()) {
    throw ParseError(path, 0, "the spec lists no generators");
  }
  if (spec.has_family && !spec.measure.empty()) {
    throw ParseError(path, 0, "family and measure are mutually exclusive");
  }
  if (!spec.has_family && spec.measure.empty()) {
    throw ParseError(path, 0, "the spec names neither measure nor family");
  }
  return spec;
}

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Empty: return "empty";
    case BoundKind::Finite: return "finite";
    default: return "infinite";
  }
}

ordered_json cell_json(const CellReport& cell) {
  ordered_json jc;
  if (cell.letter) {
    jc["letter"] = type_letter_name(*cell.letter);
  } else {
    jc["letter"] = nullptr;
  }
  jc["evidence"] = cell.evidence;
  jc["exact"] = cell.exact;
  ordered_json finite = ordered_json::object();
  for (const auto& [n, v] : cell.descriptor.window.finite) {
    finite[std::to_string(n)] = v;
  }
  jc["finite"] = std::move(finite);
  ordered_json infinite = ordered_json::array();
  for (int n : cell.descriptor.window.infinite) infinite.push_back(n);
  jc["infinite"] = std::move(infinite);
  ordered_json values = ordered_json::array();
  for (const auto& v : cell.values) values.push_back(bound_kind_name(v.kind));
  jc["points"] = std::move(values);
  return jc;
}

int cmd_lab(const std::string& spec_path, int nmax, const ClosureConfig& cfg,
            const std::string& out_path, std::ostream& out) {
  LabSpec spec = parse_lab_spec(spec_path);
  TPair tp;
  tp.label = spec.label.empty() ? fs::path(spec_path).stem().string() : spec.label;
  fs::path base = fs::path(spec_path).parent_path();
  for (const auto& g : spec.generators) {
    fs::path p(g);
    if (p.is_relative()) p = base / p;
    tp.generators.push_back(load_dtab(p.string()));
  }
  tp.measure =
      spec.has_family ? union_family_measure(spec.family) : resolve_measure(spec.measure);
  if (spec.reference != 0) declare_reference_cells(tp, spec.reference);

  TPairTypeReport rep = assemble_tpair_type(tp, nmax, cfg);

  ordered_json doc;
  doc["label"] = rep.label;
  doc["n_max"] = rep.n_max;
  ordered_json jcfg;
  jcfg["max_columns"] = cfg.max_columns;
  jcfg["decision_universe"] = cfg.decision_universe;
  jcfg["max_tables"] = cfg.max_tables;
  jcfg["include_duplication"] = cfg.include_duplication;
  doc["config"] = std::move(jcfg);
  doc["conclusive"] = rep.conclusive;
  doc["inconclusive_cells"] = rep.inconclusive_cells;
  if (rep.upper_table) {
    doc["upper_letters"] = print_upper_table(*rep.upper_table);
  } else {
    doc["upper_letters"] = nullptr;
  }
  if (rep.full_table) {
    doc["full_letters"] = print_full_table(*rep.full_table);
  } else {
    doc["full_letters"] = nullptr;
  }
  if (rep.upper_match) {
    doc["upper_match"] = *rep.upper_match;
  } else {
    doc["upper_match"] = nullptr;
  }
  if (rep.full_match) {
    doc["full_match"] = *rep.full_match;
  } else {
    doc["full_match"] = nullptr;
  }
  ordered_json cells = ordered_json::object();
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      std::string suffix = std::string("(") + kModeNames[b] + "," + kModeNames[c] + ")";
      cells["U" + suffix] = cell_json(rep.upper[b][c]);
    }
  }
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      std::string suffix = std::string("(") + kModeNames[b] + "," + kModeNames[c] + ")";
      cells["L" + suffix] = cell_json(rep.lower[b][c]);
    }
  }
  doc["cells"] = std::move(cells);

  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
    out << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& system, int max_index, const std::string& attrs_csv,
            const std::string& nu_path, int universe, const std::string& name,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  auto sid = parse_system_id(system);
  if (!sid || *sid == SystemId::custom) {
    throw ParseError("", 0, "unknown built-in family '" + system + "'");
  }
  InfoSystem sys = builtin_system(*sid, max_index);
  sys.universe_bound = universe >= 0 ? universe : max_index + 2;

  ProblemSpec z;
  for (const auto& raw : split_csv(attrs_csv)) {
    std::string a = trim(raw);
    if (a.empty()) throw ParseError("", 0, "empty attribute name");
    if (!system_has_attribute(sys, a)) {
      throw ParseError("", 0, "attribute '" + a + "' is not in family " +
                                  system_id_name(*sid) + " with max index " +
                                  std::to_string(max_index));
    }
    z.attrs.push_back(a);
  }
  size_t n = z.attrs.size();
  if (n == 0) throw ParseError("", 0, "no attributes given");
  if (n > 16) throw ParseError("", 0, "too many attributes to tabulate nu");

  std::ifstream nu_in(nu_path);
  if (!nu_in) throw ParseError(nu_path, 0, "cannot open file");
  ordered_json nu_doc;
  try {
    nu_doc = ordered_json::parse(nu_in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(nu_path, 0, e.what());
  }
  if (!nu_doc.is_object()) throw ParseError(nu_path, 0, "expected a JSON object");

  auto decisions_of = [&](const ordered_json& value) {
    if (!value.is_array() || value.empty()) {
      throw ParseError(nu_path, 0, "decision lists must be nonempty arrays");
    }
    std::vector<int> d;
    for (const auto& item : value) {
      if (!item.is_number_integer()) {
        throw ParseError(nu_path, 0, "decision lists must hold integers");
      }
      d.push_back(item.get<int>());
    }
    return d;
  };

  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::string key(n, '0');
    std::vector<uint8_t> tuple(n, 0);
    for (size_t j = 0; j < n; ++j) {
      if (mask & (size_t{1} << j)) {
        key[j] = '1';
        tuple[j] = 1;
      }
    }
    if (nu_doc.contains(key)) {
      z.nu[tuple] = make_decision_set(decisions_of(nu_doc.at(key)));
    } else if (nu_doc.contains("default")) {
      z.nu[tuple] = make_decision_set(decisions_of(nu_doc.at("default")));
    } else {
      throw ParseError(nu_path, 0, "nu misses tuple '" + key + "'");
    }
  }

  GeneratedTable gen = table_of_problem(sys, z, name);
  if (!gen.saturated) {
    err << "warning: universe bound " << sys.universe_bound
        << " is below the saturation bound";
    if (gen.saturation_bound) err << " (" << *gen.saturation_bound << ")";
    err << "\n";
  }

  std::string text = print_dtab(gen.table);
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
    out << "wrote " << out_path << " (" << gen.table.row_count() << " rows)\n";
  }
  return 0;
}

int cmd_paper_suite(const std::string& out_dir, int workers, unsigned seed,
                    std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_paper_suite(workers, seed);
  fs::create_directories(out_dir);
  write_text_file(fs::path(out_dir) / "report.json", suite_report_json(rep));
  write_text_file(fs::path(out_dir) / "report.md", suite_report_markdown(rep));
  for (const auto& c : rep.criteria) {
    out << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " - "
        << c.detail << "\n";
  }
  out << rep.pass_count << "/" << rep.criteria.size() << " criteria pass\n";
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream time_line;
  time_line.setf(std::ios::fixed);
  time_line.precision(1);
  time_line << "wall time: " << secs << "s (workers=" << workers
            << ", seed=" << seed << ")";
  out << time_line.str() << "\n";
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision tables, closures, cost solvers, and class typing"};
  app.require_subcommand(1);

  auto* s_inspect = app.add_subcommand("inspect", "print table shape parameters");
  std::string inspect_path;
  s_inspect->add_option("file", inspect_path, "table file (.dtab)")->required();

  auto* s_solve = app.add_subcommand("solve", "compute one of the three costs");
  std::string solve_table, solve_measure = "h", solve_param, solve_witness;
  long long solve_budget = 1000000;
  s_solve->add_option("--table", solve_table, "table file")->required();
  s_solve->add_option("--measure", solve_measure,
                      "h|depth, pi|zero, mu, or a .dmeas path");
  s_solve->add_option("--param", solve_param, "i, d, or a")
      ->required()
      ->check(CLI::IsMember({"i", "d", "a"}));
  s_solve->add_option("--witness", solve_witness, "write the witness tree here");
  s_solve->add_option("--budget", solve_budget, "search budget for brute force");

  auto* s_validate = app.add_subcommand("validate-tree",
                                        "check a tree against a table");
  std::string validate_table, validate_tree;
  bool validate_det = false;
  s_validate->add_option("--table", validate_table, "table file")->required();
  s_validate->add_option("--tree", validate_tree, "tree file (.dtree)")->required();
  s_validate->add_flag("--deterministic", validate_det,
                       "require a deterministic tree");

  auto* s_closure = app.add_subcommand("closure",
                                       "enumerate the closure of generators");
  std::vector<std::string> closure_generators;
  std::string closure_out;
  ClosureConfig closure_cfg;
  s_closure->add_option("generators", closure_generators, "generator tables")
      ->required();
  s_closure->add_option("--out", closure_out, "output directory")->required();
  s_closure->add_option("--max-columns", closure_cfg.max_columns,
                        "duplication column bound");
  s_closure->add_option("--decision-universe", closure_cfg.decision_universe,
                        "decisions sweep over {0..D}");
  s_closure->add_option("--max-tables", closure_cfg.max_tables, "enumeration cap");
  s_closure->add_flag("--include-duplication", closure_cfg.include_duplication,
                      "also apply column duplication");

  auto* s_typ = app.add_subcommand("typ", "classify a sampled function window");
  std::string typ_window, typ_certify;
  int typ_nmax = -1;
  s_typ->add_option("--window", typ_window, "two-column '<point> <value|inf>' file")
      ->required();
  s_typ->add_option("--certify", typ_certify,
                    "comma list: infinite|finite, bounded|unbounded, "
                    "domplus-finite|domplus-infinite, domminus-finite|domminus-infinite");
  s_typ->add_option("--nmax", typ_nmax, "extend the window to this endpoint");

  auto* s_lab = app.add_subcommand("lab", "assemble the type tables of a class");
  std::string lab_spec, lab_out;
  int lab_nmax = 8;
  ClosureConfig lab_cfg;
  s_lab->add_option("--tpair", lab_spec, "spec file (label, generators, measure)")
      ->required();
  s_lab->add_option("--nmax", lab_nmax, "window endpoint");
  s_lab->add_option("--max-columns", lab_cfg.max_columns, "duplication column bound");
  s_lab->add_option("--decision-universe", lab_cfg.decision_universe,
                    "decisions sweep over {0..D}");
  s_lab->add_option("--max-tables", lab_cfg.max_tables, "enumeration cap");
  s_lab->add_option("--out", lab_out, "write the JSON report here");

  auto* s_gen = app.add_subcommand("gen",
                                   "tabulate a problem over a built-in family");
  std::string gen_system, gen_attrs, gen_nu, gen_name = "generated", gen_out;
  int gen_max_index = 0, gen_universe = -1;
  s_gen->add_option("--system", gen_system, "U1..U7")->required();
  s_gen->add_option("--max-index", gen_max_index, "largest attribute subscript")
      ->required();
  s_gen->add_option("--attrs", gen_attrs, "comma list of attribute names")
      ->required();
  s_gen->add_option("--nu", gen_nu, "JSON map: value tuple -> decisions")
      ->required();
  s_gen->add_option("--universe", gen_universe,
                    "inclusive point bound (default max index + 2)");
  s_gen->add_option("--name", gen_name, "name of the generated table");
  s_gen->add_option("--out", gen_out, "write the table here");

  auto* s_suite = app.add_subcommand("paper-suite", "run the verification battery");
  std::string suite_out;
  int suite_workers = 1;
  unsigned suite_seed = kSuiteDefaultSeed;
  s_suite->add_option("--out", suite_out, "report directory")->required();
  s_suite->add_option("--workers", suite_workers, "worker pool size");
  s_suite->add_option("--seed", suite_seed, "job order seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s_inspect->parsed()) return cmd_inspect(inspect_path, out);
    if (s_solve->parsed()) {
      return cmd_solve(solve_table, solve_measure, solve_param, solve_witness,
                       solve_budget, out, err);
    }
    if (s_validate->parsed()) {
      return cmd_validate_tree(validate_table, validate_tree, validate_det, out);
    }
    if (s_closure->parsed()) {
      return cmd_closure(closure_generators, closure_out, closure_cfg, out);
    }
    if (s_typ->parsed()) return cmd_typ(typ_window, typ_certify, typ_nmax, out);
    if (s_lab->parsed()) return cmd_lab(lab_spec, lab_nmax, lab_cfg, lab_out, out);
    if (s_gen->parsed()) {
      return cmd_gen(gen_system, gen_max_index, gen_attrs, gen_nu, gen_universe,
                     gen_name, gen_out, out, err);
    }
    if (s_suite->parsed()) {
      return cmd_paper_suite(suite_out, suite_workers, suite_seed, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace dectab
