#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

using namespace alphafix;
using namespace alphafix::cli;

namespace {

struct RawOptions {
  std::string alpha;
  std::vector<std::string> semantics;
  std::string format = "table";
  std::string base = "occurring";
  bool reverse_model_orientation = false;
};

void add_common(CLI::App* cmd, CliConfig& config, RawOptions& raw) {
  cmd->add_option("input", config.input, "Program file (.blp), or - for stdin");
  cmd->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"table", "tsv", "json"}));
  cmd->add_option("--base", raw.base, "Herbrand base: occurring atoms or full")
      ->check(CLI::IsMember({"full", "occurring"}));
  cmd->add_option("--const", config.constants, "Extra domain constants")->delimiter(',')->allow_extra_args(false);
  cmd->add_flag("--strict-conventional", config.strict_conventional,
                "Reject programs whose bodies are not conjunctions of literals");
}

void add_alpha(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--alpha", raw.alpha, "Default value of atoms without rules")
      ->check(CLI::IsMember({"F", "T", "U", "I"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized fixpoint semantics of logic programs over FOUR"};
  app.require_subcommand(1);
  CliConfig config;
  RawOptions raw;

  auto* eval = app.add_subcommand("eval", "Compute one or more semantics");
  add_common(eval, config, raw);
  add_alpha(eval, raw);
  eval->add_option("--semantics", raw.semantics, "fixU, fixI, fixF, fixT, consensus, wfs, kk, "
                                                 "stable-enum")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->check(CLI::IsMember({"fixU", "fixI", "fixF", "fixT", "consensus", "wfs", "kk",
                             "stable-enum"}));

  auto* compare = app.add_subcommand("compare", "Compare fixU under every alpha and consensus");
  add_common(compare, config, raw);

  auto* check = app.add_subcommand("check", "Check a candidate valuation");
  add_common(check, config, raw);
  add_alpha(check, raw);
  check->add_option("--model", config.model_path, "Valuation file (atom value lines or JSON)")
      ->required();
  check->add_flag("--reverse-model-orientation", raw.reverse_model_orientation,
                  "Check body <=t head instead of head <=t body");

  auto* ground_cmd = app.add_subcommand("ground", "Print the ground program");
  add_common(ground_cmd, config, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::UserError);
  }

  if (!raw.alpha.empty()) config.alpha = truth_value_from_char(raw.alpha[0]);
  if (!raw.semantics.empty()) {
    config.semantics.clear();
    for (const std::string& s : raw.semantics) config.semantics.push_back(*semantics_from_name(s));
  }
  config.format = raw.format == "json"  ? OutputFormat::Json
                  : raw.format == "tsv" ? OutputFormat::Tsv
                                        : OutputFormat::Table;
  config.base = raw.base == "full" ? BaseMode::Full : BaseMode::Occurring;
  if (raw.reverse_model_orientation) config.orientation = ModelOrientation::BodyBelowHead;

  ExitCode code = ExitCode::Ok;
  if (*eval) code = cmd_eval(config, std::cin, std::cout, std::cerr);
  else if (*compare) code = cmd_compare(config, std::cin, std::cout, std::cerr);
  else if (*check) code = cmd_check(config, std::cin, std::cout, std::cerr);
  else if (*ground_cmd) code = cmd_ground(config, std::cin, std::cout, std::cerr);
  return static_cast<int>(code);
}
