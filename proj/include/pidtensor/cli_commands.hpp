/**
 * @file cli_commands.hpp
 * @brief Command implementations behind the pidtensor CLI.
 *
 * Each command takes a plain options struct, writes its report to `out`
 * (warnings and errors to `err`), and returns the process exit code:
 *   0  success
 *   2  input problem (bad file, unknown name, shape mismatch, ...)
 *   3  internal invariant violation (a library bug or inconsistent pin)
 *   4  reproduction mismatch (cmd_reproduce only)
 * Commands never throw; the argv front end only parses flags.
 *
 * Every command that takes a distribution accepts it either as a JSON file
 * (--input) or as a built-in fixture name (--fixture).  Fixture-driven
 * decompositions apply the fixture's pinned analysis structure when one
 * ships; an explicit --structure file overrides both.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pidtensor {

/// Distribution source: exactly one of `input_path` / `fixture_name`.
struct InputChoice {
  std::string input_path;    ///< JSON distribution file, or empty
  std::string fixture_name;  ///< built-in fixture name, or empty
};

/// Tolerance for the run: explicit flag, else PIDTENSOR_TOLERANCE, else default.
double resolve_tolerance(const std::optional<double>& flag_value);

struct DecomposeOptions {
  InputChoice input;
  std::string target;
  std::vector<std::string> sources;
  std::string structure_path;  ///< retained-edge override file, or empty
  std::optional<double> tolerance;
  std::string format = "table";  ///< "table" or "json"
};
int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err);

struct InferOptions {
  InputChoice input;
  std::optional<double> tolerance;
  std::string format = "table";
};
int cmd_infer(const InferOptions& opt, std::ostream& out, std::ostream& err);

struct PathMiOptions {
  InputChoice input;
  std::string path;  ///< comma-separated variable names, e.g. "X,Y,Z"
  std::optional<double> tolerance;
  std::string format = "table";
};
int cmd_path_mi(const PathMiOptions& opt, std::ostream& out, std::ostream& err);

struct TeOptions {
  std::string input_path;  ///< CSV time series
  std::string cause;
  std::string effect;
  std::size_t history_length = 1;  ///< effect-past order (l)
  std::size_t window_length = 1;   ///< cause-window order (m)
  std::string format = "table";
};
int cmd_te(const TeOptions& opt, std::ostream& out, std::ostream& err);

struct DetectHiddenOptions {
  InputChoice input;
  std::vector<std::string> vars;  ///< exactly three: two sources, target
  std::optional<double> tolerance;
  std::string format = "table";
};
int cmd_detect_hidden(const DetectHiddenOptions& opt, std::ostream& out, std::ostream& err);

struct ReproduceOptions {
  std::optional<int> table;  ///< 5, 10, or 12; unset runs everything
  std::optional<double> tolerance;
};
int cmd_reproduce(const ReproduceOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace pidtensor
