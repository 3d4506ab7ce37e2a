// Subcommands of the alphafix tool, callable in-process.

#ifndef ALPHAFIX_TOOLS_CLI_HPP_
#define ALPHAFIX_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alphafix/engine.hpp"
#include "alphafix/four.hpp"
#include "alphafix/ground.hpp"

namespace alphafix::cli {

enum class ExitCode : int { Ok = 0, UserError = 1, InternalFailure = 2 };

enum class OutputFormat { Table, Tsv, Json };

enum class Semantics { FixU, FixI, FixF, FixT, Consensus, WellFounded, KripkeKleene, StableEnum };

struct CliConfig {
  std::string input = "-";  // path, or "-" for the input stream
  std::optional<TruthValue> alpha;
  std::vector<Semantics> semantics{Semantics::FixU};
  OutputFormat format = OutputFormat::Table;
  BaseMode base = BaseMode::Occurring;
  std::vector<std::string> constants;
  bool strict_conventional = false;
  std::string model_path;  // check only
  ModelOrientation orientation = ModelOrientation::HeadBelowBody;
};

std::optional<Semantics> semantics_from_name(const std::string& name);
std::string semantics_name(Semantics s);

ExitCode cmd_eval(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
ExitCode cmd_compare(const CliConfig& config, std::istream& in, std::ostream& out,
                     std::ostream& err);
ExitCode cmd_check(const CliConfig& config, std::istream& in, std::ostream& out,
                   std::ostream& err);
ExitCode cmd_ground(const CliConfig& config, std::istream& in, std::ostream& out,
                    std::ostream& err);

}  // namespace alphafix::cli

#endif  // ALPHAFIX_TOOLS_CLI_HPP_
