/**
 * @file cli_commands.cpp
 * @brief Implementations of the CLI commands and their report formats.
 */
#include "pidtensor/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "pidtensor/fixtures.hpp"
#include "pidtensor/info.hpp"
#include "pidtensor/io.hpp"
#include "pidtensor/pid.hpp"

namespace pidtensor {

namespace {

using nlohmann::json;

/// Run a command body, mapping the error taxonomy onto exit codes.
template <typename F>
int run_guarded(std::ostream& err, F&& body) {
  try {
    return std::forward<F>(body)();
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << "\n";
    return 3;
  }
}

struct LoadedInput {
  std::shared_ptr<const JointDistribution> joint;
  const Fixture* fix = nullptr;  ///< set when the input is a built-in fixture
};

LoadedInput load_input(const InputChoice& choice) {
  const bool has_file = !choice.input_path.empty();
  const bool has_fixture = !choice.fixture_name.empty();
  if (has_file == has_fixture) {
    throw FormatError("choose exactly one of --input and --fixture");
  }
  if (has_fixture) {
    const Fixture& f = fixture(choice.fixture_name);
    return {f.joint, &f};
  }
  return {std::make_shared<JointDistribution>(load_distribution(choice.input_path)), nullptr};
}

void check_format(const std::string& format) {
  if (format != "table" && format != "json") {
    throw FormatError("unknown format '" + format + "' (use table or json)");
  }
}

/// Fixed-point rendering; negative zero normalizes to plain zero.
std::string fixed_str(double v, int prec) {
  if (v == 0.0) v = 0.0;  // fold -0.0
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  std::string s = os.str();
  if (s.size() > 1 && s[0] == '-' &&
      s.find_first_not_of("0.", 1) == std::string::npos) {
    s.erase(0, 1);  // "-0.000000" from a sub-epsilon negative
  }
  return s;
}

std::string edges_str(const EdgeSet& edges) {
  if (edges.empty()) return "(no edges)";
  std::string s;
  for (const auto& e : edges) {
    if (!s.empty()) s += " ";
    s += "{" + e.first + "," + e.second + "}";
  }
  return s;
}

json edges_json(const EdgeSet& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back({e.first, e.second});
  return arr;
}

std::string prob_str(const Prob& p) {
  if (p.exact()) return p.str();
  return fixed_str(p.to_double(), 6);
}

VarSet singleton(const std::string& name) { return VarSet{name}; }

std::vector<VarSet> singleton_sources(const std::vector<std::string>& names) {
  std::vector<VarSet> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(singleton(n));
  return out;
}

/// Presentation order for lattice atoms: top of the lattice first within
/// each collection size (so the two-source table reads {12},{2},{1},{1}{2}).
std::vector<std::size_t> presentation_order(const std::vector<PidAtom>& atoms) {
  std::vector<std::size_t> idx(atoms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const std::size_t sa = atoms[a].node.elements.size();
    const std::size_t sb = atoms[b].node.elements.size();
    if (sa != sb) return sa < sb;
    return b < a;  // reverse canonical order within one size class
  });
  return idx;
}

std::string flags_str(const PidFlags& f) {
  std::string s;
  auto add = [&](const char* name) {
    if (!s.empty()) s += ", ";
    s += name;
  };
  if (f.negative_atom) add("negative_atom");
  if (f.hidden_cause_warning) add("hidden_cause_warning");
  if (f.structural_ambiguity) add("structural_ambiguity");
  return s.empty() ? "(none)" : s;
}

void warn_ambiguity(std::ostream& err, const PidResult& result) {
  if (!result.flags.structural_ambiguity) return;
  err << "warning: structure inference is ambiguous; candidates:\n";
  for (const auto& cand : result.structure_candidates) {
    err << "  " << edges_str(cand) << "\n";
  }
  err << "proceeding with: " << edges_str(result.structure_used) << "\n";
}

const char* kind_str(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Direct: return "direct";
    case EdgeKind::Indirect: return "indirect";
    case EdgeKind::NoInformation: return "no_information";
  }
  return "?";
}

}  // namespace

double resolve_tolerance(const std::optional<double>& flag_value) {
  if (flag_value) {
    if (*flag_value <= 0) throw FormatError("tolerance must be positive");
    return *flag_value;
  }
  if (const char* env = std::getenv("PIDTENSOR_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) {
      throw FormatError(std::string("invalid PIDTENSOR_TOLERANCE value: '") + env + "'");
    }
    return v;
  }
  return kDefaultTolerance;
}

int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    check_format(opt.format);
    const double tol = resolve_tolerance(opt.tolerance);
    LoadedInput in = load_input(opt.input);

    std::optional<Structure> structure;
    std::string structure_origin = "inferred";
    if (!opt.structure_path.empty()) {
      structure = structure_from_retained(in.joint, load_structure_edges(opt.structure_path), tol);
      structure_origin = "from file";
    } else if (in.fix != nullptr && in.fix->pinned_edges) {
      structure = structure_from_retained(in.joint, *in.fix->pinned_edges, tol);
      structure_origin = "fixture default";
    }

    PidResult result = decompose(in.joint, singleton(opt.target),
                                 singleton_sources(opt.sources), structure, tol);
    warn_ambiguity(err, result);

    if (opt.format == "json") {
      json atoms = json::array();
      for (std::size_t i : presentation_order(result.atoms)) {
        const PidAtom& a = result.atoms[i];
        atoms.push_back({{"node", a.label}, {"atom", a.atom}, {"cumulative", a.cumulative}});
      }
      json uniq = json::object();
      for (std::size_t k = 0; k < result.sources.size(); ++k) {
        uniq[varset_label(result.sources[k])] = result.unique[k];
      }
      json cands = json::array();
      for (const auto& c : result.structure_candidates) cands.push_back(edges_json(c));
      json doc{{"target", varset_label(result.target)},
               {"sources", [&] {
                  json arr = json::array();
                  for (const auto& s : result.sources) arr.push_back(varset_label(s));
                  return arr;
                }()},
               {"total", result.total},
               {"redundancy", result.redundancy},
               {"unique", std::move(uniq)},
               {"synergy", result.synergy},
               {"atoms", std::move(atoms)},
               {"flags",
                {{"negative_atom", result.flags.negative_atom},
                 {"hidden_cause_warning", result.flags.hidden_cause_warning},
                 {"structural_ambiguity", result.flags.structural_ambiguity}}},
               {"structure",
                {{"origin", structure_origin},
                 {"retained_edges", edges_json(result.structure_used)},
                 {"candidates", std::move(cands)}}}};
      out << doc.dump(2) << "\n";
      return 0;
    }

    out << "decomposition of " << opt.target << " from " << result.sources.size()
        << " sources\n";
    for (std::size_t k = 0; k < result.sources.size(); ++k) {
      out << "  " << (k + 1) << " = " << varset_label(result.sources[k]) << "\n";
    }
    out << "structure (" << structure_origin << "): " << edges_str(result.structure_used)
        << "\n\n";
    out << std::left << std::setw(14) << "node" << std::right << std::setw(12) << "partial"
        << std::setw(13) << "cumulative" << "\n";
    for (std::size_t i : presentation_order(result.atoms)) {
      const PidAtom& a = result.atoms[i];
      out << std::left << std::setw(14) << a.label << std::right << std::setw(12)
          << fixed_str(a.atom, 6) << std::setw(13) << fixed_str(a.cumulative, 6) << "\n";
    }
    out << "\n";
    auto summary = [&](const std::string& name, double value) {
      out << std::left << std::setw(22) << (name + ":") << fixed_str(value, 6) << " bits\n";
    };
    summary("total information", result.total);
    summary("redundancy", result.redundancy);
    for (std::size_t k = 0; k < result.sources.size(); ++k) {
      summary("unique " + std::to_string(k + 1) + " " + varset_label(result.sources[k]),
              result.unique[k]);
    }
    summary("synergy", result.synergy);
    out << "flags: " << flags_str(result.flags) << "\n";
    return 0;
  });
}

int cmd_infer(const InferOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    check_format(opt.format);
    const double tol = resolve_tolerance(opt.tolerance);
    LoadedInput in = load_input(opt.input);

    std::vector<Structure> candidates = infer_structures(in.joint, tol);
    Structure canonical = canonical_structure(candidates);
    const bool ambiguous = candidates.size() > 1;

    if (opt.format == "json") {
      json pairs = json::array();
      for (const auto& [edge, status] : canonical.edges()) {
        pairs.push_back({{"a", edge.first},
                         {"b", edge.second},
                         {"kind", kind_str(status.kind)},
                         {"witness", status.witness}});
      }
      json cands = json::array();
      for (const auto& c : candidates) cands.push_back(edges_json(c.retained_edges()));
      json doc{{"pairs", std::move(pairs)},
               {"candidates", std::move(cands)},
               {"canonical", edges_json(canonical.retained_edges())},
               {"ambiguous", ambiguous}};
      out << doc.dump(2) << "\n";
      return 0;
    }

    out << "pairwise edge classification:\n";
    for (const auto& [edge, status] : canonical.edges()) {
      out << "  " << edge.first << "-" << edge.second << ": " << kind_str(status.kind);
      if (status.kind == EdgeKind::Indirect) {
        out << " via";
        for (const auto& w : status.witness) out << " " << w;
      }
      out << "\n";
    }
    out << "consistent structures (" << candidates.size()
        << (ambiguous ? ", ambiguous" : "") << "):\n";
    for (const auto& c : candidates) out << "  " << edges_str(c.retained_edges()) << "\n";
    out << "canonical: " << edges_str(canonical.retained_edges()) << "\n";
    if (ambiguous) {
      err << "warning: " << candidates.size()
          << " structures explain the data equally well; pass --structure to pin one\n";
    }
    return 0;
  });
}

int cmd_path_mi(const PathMiOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    check_format(opt.format);
    resolve_tolerance(opt.tolerance);  // validates the env/flag value
    LoadedInput in = load_input(opt.input);

    std::vector<VarSet> vertices;
    std::size_t start = 0;
    const std::string& spec = opt.path;
    while (start <= spec.size()) {
      std::size_t comma = spec.find(',', start);
      std::string name = spec.substr(start, comma - start);
      if (name.empty()) throw FormatError("path contains an empty variable name");
      vertices.push_back(singleton(name));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    Path path = Path::of(std::move(vertices));

    CausalTensor tensor = path_tensor(*in.joint, path);
    const double mi = path_mutual_information(*in.joint, path);

    if (opt.format == "json") {
      json matrix = json::array();
      for (std::size_t i = 0; i < tensor.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < tensor.cols(); ++j) {
          row.push_back(prob_str(tensor.matrix(static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(j))));
        }
        matrix.push_back(std::move(row));
      }
      json doc{{"path", path.label()},
               {"rows", tensor.source_alphabet.symbols()},
               {"cols", tensor.destination_alphabet.symbols()},
               {"matrix", std::move(matrix)},
               {"row_support", tensor.row_support},
               {"mi_bits", mi}};
      out << doc.dump(2) << "\n";
      return 0;
    }

    out << "path: " << path.label() << "\n";
    out << "composed tensor (rows: " << varset_label(tensor.source)
        << ", cols: " << varset_label(tensor.destination) << "):\n";
    std::size_t row_width = 4;
    for (const auto& s : tensor.source_alphabet.symbols()) {
      row_width = std::max(row_width, s.size() + 2);
    }
    out << std::setw(static_cast<int>(row_width)) << "";
    for (const auto& s : tensor.destination_alphabet.symbols()) {
      out << std::setw(10) << s;
    }
    out << "\n";
    for (std::size_t i = 0; i < tensor.rows(); ++i) {
      out << std::setw(static_cast<int>(row_width)) << tensor.source_alphabet.symbol(i);
      for (std::size_t j = 0; j < tensor.cols(); ++j) {
        out << std::setw(10)
            << prob_str(tensor.matrix(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j)));
      }
      if (!tensor.row_support[i]) out << "  (unsupported)";
      out << "\n";
    }
    out << "path mutual information: " << fixed_str(mi, 6) << " bits\n";
    return 0;
  });
}

int cmd_te(const TeOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    check_format(opt.format);
    if (opt.input_path.empty()) throw FormatError("--input CSV file is required");
    TimeSeries series = load_time_series_csv(opt.input_path);
    TeConfig cfg{opt.history_length, opt.window_length};
    JointDistribution embedded = embed(series, opt.cause, opt.effect, cfg);
    MultiplexTensor mux = te_tensor(embedded);
    const double te = transfer_entropy(mux, embedded);

    const std::size_t windows = series.length() - std::max(cfg.history_length, cfg.window_length);
    std::size_t supported = 0;
    for (bool s : mux.subchannel_support) supported += s ? 1 : 0;

    if (opt.format == "json") {
      json doc{{"cause", opt.cause},
               {"effect", opt.effect},
               {"history_length", cfg.history_length},
               {"window_length", cfg.window_length},
               {"windows", windows},
               {"subchannels", mux.subchannel_count()},
               {"supported_subchannels", supported},
               {"transfer_entropy_bits", te}};
      out << doc.dump(2) << "\n";
      return 0;
    }

    out << "transfer entropy " << opt.cause << " -> " << opt.effect << ": "
        << fixed_str(te, 6) << " bits\n";
    out << "windows: " << windows << " (history " << cfg.history_length << ", window "
        << cfg.window_length << ")\n";
    out << "subchannels: " << mux.subchannel_count() << " (" << supported
        << " supported)\n";
    return 0;
  });
}

int cmd_detect_hidden(const DetectHiddenOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    check_format(opt.format);
    const double tol = resolve_tolerance(opt.tolerance);
    LoadedInput in = load_input(opt.input);
    if (opt.vars.size() != 3) {
      throw FormatError("--vars needs exactly three names: two sources, then the target");
    }
    const VarSet x = singleton(opt.vars[0]);
    const VarSet y = singleton(opt.vars[1]);
    const VarSet z = singleton(opt.vars[2]);

    HiddenCauseReport report = check_hidden_variable(*in.joint, x, y, z, tol);
    const double ii = interaction_information(*in.joint, x, y, z);
    const double through_y = path_mutual_information(*in.joint, Path::of({x, y, z}));
    const double through_x = path_mutual_information(*in.joint, Path::of({y, x, z}));

    if (opt.format == "json") {
      json doc{{"vars", opt.vars},
               {"flagged", report.flagged},
               {"margin", report.margin},
               {"interaction_information", ii},
               {"path_mi", {{Path::of({x, y, z}).label(), through_y},
                            {Path::of({y, x, z}).label(), through_x}}}};
      out << doc.dump(2) << "\n";
      return 0;
    }

    out << "hidden-cause test for (" << opt.vars[0] << ", " << opt.vars[1] << ") -> "
        << opt.vars[2] << "\n";
    out << "interaction information: " << fixed_str(ii, 6) << " bits\n";
    out << "path " << Path::of({x, y, z}).label() << ": " << fixed_str(through_y, 6)
        << " bits\n";
    out << "path " << Path::of({y, x, z}).label() << ": " << fixed_str(through_x, 6)
        << " bits\n";
    out << "margin: " << fixed_str(report.margin, 6) << "\n";
    out << "verdict: "
        << (report.flagged ? "hidden common cause indicated"
                           : "no hidden common cause indicated")
        << "\n";
    return 0;
  });
}

namespace {

/// One numeric reproduction check.
struct Check {
  std::string label;
  double computed;
  double expected;

  bool ok() const { return std::abs(computed - expected) <= 0.005; }
};

/// Expected two-source decomposition row: atoms {12}, {2}, {1}, {1}{2}.
struct TableRow {
  const char* fixture;
  double s12, u2, u1, r;
};

PidResult decompose_fixture(const Fixture& f, const std::string& target,
                            const std::vector<std::string>& sources, double tol) {
  std::optional<Structure> structure;
  if (f.pinned_edges) structure = structure_from_retained(f.joint, *f.pinned_edges, tol);
  return decompose(f.joint, singleton(target), singleton_sources(sources), structure, tol);
}

void run_table(int number, const std::vector<TableRow>& rows, double tol, std::ostream& out,
               std::vector<Check>& checks) {
  out << "table " << number << ": two-source decomposition atoms\n";
  out << std::left << std::setw(10) << "fixture" << std::right << std::setw(8) << "{12}"
      << std::setw(8) << "{2}" << std::setw(8) << "{1}" << std::setw(8) << "{1}{2}" << "\n";
  for (const TableRow& row : rows) {
    PidResult res = decompose_fixture(fixture(row.fixture), "Z", {"X", "Y"}, tol);
    const double got[4] = {res.synergy, res.unique[1], res.unique[0], res.redundancy};
    const double want[4] = {row.s12, row.u2, row.u1, row.r};
    static const char* cell[4] = {"{12}", "{2}", "{1}", "{1}{2}"};
    out << std::left << std::setw(10) << row.fixture << std::right;
    for (int k = 0; k < 4; ++k) {
      out << std::setw(8) << fixed_str(got[k], 2);
      checks.push_back({std::string("table ") + std::to_string(number) + " " + row.fixture +
                            " " + cell[k],
                        got[k], want[k]});
    }
    out << "\n";
  }
  out << "\n";
}

}  // namespace

int cmd_reproduce(const ReproduceOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const double tol = resolve_tolerance(opt.tolerance);
    if (opt.table && *opt.table != 5 && *opt.table != 10 && *opt.table != 12) {
      throw FormatError("unknown table " + std::to_string(*opt.table) +
                        " (available: 5, 10, 12)");
    }
    std::vector<Check> checks;

    if (!opt.table || *opt.table == 5) {
      run_table(5,
                {{"pwunq", 0.0, 0.5, 0.5, 0.0},
                 {"rnderr", 0.0, 0.0, 0.811, 0.189},
                 {"unq", 0.0, 0.0, 1.0, 0.0},
                 {"and", 0.19, 0.31, 0.31, 0.0},
                 {"tbc", 0.0, 1.0, 1.0, 0.0}},
                tol, out, checks);
    }
    if (!opt.table || *opt.table == 10) {
      run_table(10, {{"xor", 1.0, 0.0, 0.0, 0.0}}, tol, out, checks);
    }
    if (!opt.table || *opt.table == 12) {
      run_table(12, {{"sum", 0.5, 0.5, 0.5, 0.0}}, tol, out, checks);
    }

    if (!opt.table) {
      out << "narrative values\n";
      auto narrative = [&](const std::string& label, double computed, double expected) {
        checks.push_back({label, computed, expected});
        out << "  " << label << ": " << fixed_str(computed, 6) << " (expected "
            << fixed_str(expected, 4) << ")\n";
      };
      const Fixture& tbc = fixture("tbc");
      narrative("tbc path {X}{Y}{Z} information",
                path_mutual_information(*tbc.joint,
                                        Path::of({singleton("X"), singleton("Y"),
                                                  singleton("Z")})),
                0.0);
      const Fixture& ns = fixture("neg-synergy");
      narrative("neg-synergy path {X}{Y}{Z} information",
                path_mutual_information(*ns.joint,
                                        Path::of({singleton("X"), singleton("Y"),
                                                  singleton("Z")})),
                0.0271);
      narrative("neg-synergy interaction information",
                interaction_information(*ns.joint, singleton("X"), singleton("Y"),
                                        singleton("Z")),
                -0.1226);
      narrative("neg-synergy synergy (pinned triangle)",
                decompose_fixture(ns, "Z", {"X", "Y"}, tol).synergy, -0.0954);
      narrative("dyadic redundancy",
                decompose_fixture(fixture("dyadic"), "Z", {"X", "Y"}, tol).redundancy, 0.0);
      narrative("triadic redundancy",
                decompose_fixture(fixture("triadic"), "Z", {"X", "Y"}, tol).redundancy, 1.0);
      out << "\n";
    }

    std::size_t bad = 0;
    for (const Check& c : checks) {
      if (c.ok()) continue;
      ++bad;
      out << "FAIL " << c.label << ": computed " << fixed_str(c.computed, 6)
          << ", expected " << fixed_str(c.expected, 4) << " (diff "
          << fixed_str(std::abs(c.computed - c.expected), 6) << " > 0.005)\n";
    }
    out << "reproduction check: " << checks.size() << " values compared, " << bad
        << " mismatch" << (bad == 1 ? "" : "es") << "\n";
    return bad == 0 ? 0 : 4;
  });
}

}  // namespace pidtensor
