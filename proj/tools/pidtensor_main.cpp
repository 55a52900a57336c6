/**
 * @file pidtensor_main.cpp
 * @brief argv front end: flag parsing and dispatch to the command layer.
 *
 * Exit codes: 0 success, 2 input problem (including bad flags), 3 internal
 * invariant violation, 4 reproduction mismatch.
 */
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pidtensor/cli_commands.hpp"

namespace {

void add_input_flags(CLI::App* cmd, pidtensor::InputChoice& input) {
  auto* in = cmd->add_option("--input", input.input_path, "distribution JSON file");
  auto* fx = cmd->add_option("--fixture", input.fixture_name, "built-in fixture name");
  in->excludes(fx);
  fx->excludes(in);
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "causal-tensor information decomposition: structure inference, "
      "path information, redundancy lattices, and transfer entropy for "
      "discrete multivariate systems"};
  app.require_subcommand(1);

  pidtensor::DecomposeOptions dec;
  std::optional<double> dec_tol;
  auto* cmd_dec = app.add_subcommand(
      "decompose", "partial information decomposition of a target from sources");
  add_input_flags(cmd_dec, dec.input);
  cmd_dec->add_option("--target", dec.target, "target variable")->required();
  cmd_dec->add_option("--sources", dec.sources, "comma-separated source variables")
      ->required()
      ->delimiter(',');
  cmd_dec->add_option("--structure", dec.structure_path,
                      "retained-edge override JSON file");
  cmd_dec->add_option("--tolerance", dec_tol, "numeric tolerance (default 1e-9)");
  add_format_flag(cmd_dec, dec.format);

  pidtensor::InferOptions inf;
  std::optional<double> inf_tol;
  auto* cmd_inf = app.add_subcommand("infer", "infer which pairwise edges carry information");
  add_input_flags(cmd_inf, inf.input);
  cmd_inf->add_option("--tolerance", inf_tol, "numeric tolerance (default 1e-9)");
  add_format_flag(cmd_inf, inf.format);

  pidtensor::PathMiOptions pmi;
  std::optional<double> pmi_tol;
  auto* cmd_pmi = app.add_subcommand(
      "path-mi", "composed tensor and mutual information of a transmission path");
  add_input_flags(cmd_pmi, pmi.input);
  cmd_pmi->add_option("--path", pmi.path, "comma-separated variables, e.g. X,Y,Z")
      ->required();
  cmd_pmi->add_option("--tolerance", pmi_tol, "numeric tolerance (default 1e-9)");
  add_format_flag(cmd_pmi, pmi.format);

  pidtensor::TeOptions te;
  auto* cmd_te = app.add_subcommand("te", "transfer entropy from a CSV time series");
  cmd_te->add_option("--input", te.input_path, "CSV time-series file")->required();
  cmd_te->add_option("--cause", te.cause, "cause variable")->required();
  cmd_te->add_option("--effect", te.effect, "effect variable")->required();
  cmd_te->add_option("--l", te.history_length, "effect-history order (default 1)");
  cmd_te->add_option("--m", te.window_length, "cause-window order (default 1)");
  add_format_flag(cmd_te, te.format);

  pidtensor::DetectHiddenOptions dh;
  std::optional<double> dh_tol;
  auto* cmd_dh = app.add_subcommand(
      "detect-hidden", "test a source pair and target for an unobserved common cause");
  add_input_flags(cmd_dh, dh.input);
  cmd_dh->add_option("--vars", dh.vars, "three variables: two sources, then the target")
      ->required()
      ->delimiter(',');
  cmd_dh->add_option("--tolerance", dh_tol, "numeric tolerance (default 1e-9)");
  add_format_flag(cmd_dh, dh.format);

  pidtensor::ReproduceOptions rep;
  std::optional<int> rep_table;
  std::optional<double> rep_tol;
  auto* cmd_rep = app.add_subcommand(
      "reproduce", "recompute the stored reference tables and diff against them");
  cmd_rep->add_option("--table", rep_table, "table number: 5, 10, or 12");
  cmd_rep->add_option("--tolerance", rep_tol, "numeric tolerance (default 1e-9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; flag problems are input errors
  }

  dec.tolerance = dec_tol;
  inf.tolerance = inf_tol;
  pmi.tolerance = pmi_tol;
  dh.tolerance = dh_tol;
  rep.table = rep_table;
  rep.tolerance = rep_tol;

  if (cmd_dec->parsed()) return pidtensor::cmd_decompose(dec, std::cout, std::cerr);
  if (cmd_inf->parsed()) return pidtensor::cmd_infer(inf, std::cout, std::cerr);
  if (cmd_pmi->parsed()) return pidtensor::cmd_path_mi(pmi, std::cout, std::cerr);
  if (cmd_te->parsed()) return pidtensor::cmd_te(te, std::cout, std::cerr);
  if (cmd_dh->parsed()) return pidtensor::cmd_detect_hidden(dh, std::cout, std::cerr);
  if (cmd_rep->parsed()) return pidtensor::cmd_reproduce(rep, std::cout, std::cerr);
  return 2;
}
