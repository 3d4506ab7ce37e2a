#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <map>
#include <sstream>

#include "alphafix/oracles.hpp"
#include "alphafix/syntax.hpp"
#include "alphafix/valuation_io.hpp"

namespace alphafix::cli {

namespace {

struct Failure {
  ExitCode code;
  std::string message;
};

struct Column {
  std::string name;
  Valuation value;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{ExitCode::UserError, "cannot read " + path};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

GroundProgram load(const CliConfig& config, std::istream& in) {
  const std::string text = read_input(config.input, in);
  Program program;
  try {
    program = parse_program(text);
  } catch (const ParseError& e) {
    throw Failure{ExitCode::UserError, source_name(config.input) + ":" + e.what()};
  }
  if (config.strict_conventional && !is_conventional(program, true)) {
    throw Failure{ExitCode::UserError,
                  source_name(config.input) + ": program is not conventional"};
  }
  GroundOptions options;
  options.base = config.base;
  options.extra_constants = config.constants;
  return ground(program, options);
}

TruthValue require_alpha(const CliConfig& config, const std::string& what) {
  if (!config.alpha) throw Failure{ExitCode::UserError, "--alpha is required for " + what};
  return *config.alpha;
}

void print_columns(const AtomTable& base, const std::vector<Column>& columns, OutputFormat format,
                   std::ostream& out) {
  const bool single = columns.size() == 1;
  if (format == OutputFormat::Json) {
    if (single) {
      out << to_json(columns.front().value) << '\n';
      return;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const Column& c : columns) j[c.name] = nlohmann::ordered_json::parse(to_json(c.value));
    out << j.dump() << '\n';
    return;
  }
  if (format == OutputFormat::Tsv) {
    if (single) {
      out << to_tsv(columns.front().value);
      return;
    }
    out << "atom";
    for (const Column& c : columns) out << '\t' << c.name;
    out << '\n';
    for (AtomId a = 0; a < base.size(); ++a) {
      out << base.name(a);
      for (const Column& c : columns) out << '\t' << to_char(c.value[a]);
      out << '\n';
    }
    return;
  }

  // A single column is printed as plain "atom value" lines.
  std::size_t width = 0;
  if (!single) {
    width = 4;
    for (AtomId a = 0; a < base.size(); ++a) width = std::max(width, base.name(a).size());
  }
  auto pad = [&](const std::string& s) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
  };
  if (!single) {
    out << pad("atom");
    for (const Column& c : columns) out << ' ' << c.name;
    out << '\n';
  }
  for (AtomId a = 0; a < base.size(); ++a) {
    out << pad(base.name(a));
    for (std::size_t k = 0; k < columns.size(); ++k) {
      out << ' ' << to_char(columns[k].value[a]);
      if (k + 1 < columns.size()) out << std::string(columns[k].name.size() - 1, ' ');
    }
    out << '\n';
  }
}

template <typename Body>
ExitCode guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::InternalFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::UserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::InternalFailure;
  }
}

void report_violations(const SemanticsResult& r) {
  if (r.ok()) return;
  std::string msg = std::string("fixpoint identities violated for alpha ") + to_char(r.alpha) + ":";
  for (const std::string& v : r.violations) msg += " [" + v + "]";
  throw Failure{ExitCode::InternalFailure, msg};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::optional<Semantics> semantics_from_name(const std::string& name) {
  static const std::map<std::string, Semantics> names = {
      {"fixU", Semantics::FixU},
      {"fixI", Semantics::FixI},
      {"fixF", Semantics::FixF},
      {"fixT", Semantics::FixT},
      {"consensus", Semantics::Consensus},
      {"wfs", Semantics::WellFounded},
      {"kk", Semantics::KripkeKleene},
      {"stable-enum", Semantics::StableEnum},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string semantics_name(Semantics s) {
  switch (s) {
    case Semantics::FixU: return "fixU";
    case Semantics::FixI: return "fixI";
    case Semantics::FixF: return "fixF";
    case Semantics::FixT: return "fixT";
    case Semantics::Consensus: return "consensus";
    case Semantics::WellFounded: return "wfs";
    case Semantics::KripkeKleene: return "kk";
    case Semantics::StableEnum: return "stable-enum";
  }
  return "?";
}

ExitCode cmd_eval(const CliConfig& config, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const GroundProgram gp = load(config, in);
    std::optional<SemanticsResult> solved;
    auto fixpoints = [&](Semantics s) -> const SemanticsResult& {
      if (!solved) {
        solved = solve(gp, require_alpha(config, semantics_name(s)));
        report_violations(*solved);
      }
      return *solved;
    };

    std::vector<Column> columns;
    for (Semantics s : config.semantics) {
      const std::string name = semantics_name(s);
      switch (s) {
        case Semantics::FixU: columns.push_back({name, fixpoints(s).fix_u}); break;
        case Semantics::FixI: columns.push_back({name, fixpoints(s).fix_i}); break;
        case Semantics::FixF: columns.push_back({name, fixpoints(s).fix_f}); break;
        case Semantics::FixT: columns.push_back({name, fixpoints(s).fix_t}); break;
        case Semantics::Consensus: columns.push_back({name, consensus_semantics(gp).value}); break;
        case Semantics::WellFounded: {
          Valuation v = to_valuation(gp, well_founded(gp));
          if (!(v == fix_u(gp, TruthValue::False)))
            throw Failure{ExitCode::InternalFailure, "well-founded model differs from fixU under F"};
          columns.push_back({name, std::move(v)});
          break;
        }
        case Semantics::KripkeKleene: {
          Valuation v = to_valuation(gp, kripke_kleene(gp));
          if (!(v == fix_u(gp, TruthValue::Unknown)))
            throw Failure{ExitCode::InternalFailure,
                          "Kripke-Kleene model differs from fixU under U"};
          columns.push_back({name, std::move(v)});
          break;
        }
        case Semantics::StableEnum: {
          std::size_t k = 0;
          for (const ThreeValuation& m : enumerate_stable_models(gp)) {
            Valuation v = to_valuation(gp, m);
            if (!is_alpha_fixed_model(gp, TruthValue::False, v))
              throw Failure{ExitCode::InternalFailure,
                            "stable model is not a fixed model under F"};
            columns.push_back({"stable" + std::to_string(++k), std::move(v)});
          }
          break;
        }
      }
    }
    print_columns(gp.base(), columns, config.format, out);
    return ExitCode::Ok;
  });
}

ExitCode cmd_compare(const CliConfig& config, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const GroundProgram gp = load(config, in);
    for (TruthValue a : kAllTruthValues) report_violations(solve(gp, a));
    const ComparisonReport report = compare_semantics(gp);
    std::vector<Column> columns;
    for (TruthValue a : kAllTruthValues) columns.push_back({std::string(1, to_char(a)), report.fix_u(a)});
    columns.push_back({"consensus", report.consensus.value});
    print_columns(gp.base(), columns, config.format, out);
    if (config.format == OutputFormat::Table) {
      out << '\n';
      for (const Relation& r : report.relations) out << r.lhs << " <=" << r.order << ' ' << r.rhs << '\n';
      out << "consensus fixed under F: " << yes_no(report.consensus.fixpoint_pessimistic) << '\n'
          << "consensus fixed under T: " << yes_no(report.consensus.fixpoint_optimistic) << '\n'
          << "consensus satisfies model inequality: " << yes_no(report.consensus.model) << '\n';
    }
    if (!report.skeptical_below_pessimistic || !report.skeptical_below_optimistic ||
        !report.skeptical_below_consensus) {
      throw Failure{ExitCode::InternalFailure,
                    "skeptical semantics is not below the pessimistic, optimistic or consensus "
                    "semantics"};
    }
    return ExitCode::Ok;
  });
}

ExitCode cmd_check(const CliConfig& config, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const TruthValue alpha = require_alpha(config, "check");
    const GroundProgram gp = load(config, in);
    if (config.model_path.empty()) throw Failure{ExitCode::UserError, "--model is required"};
    std::ifstream file(config.model_path, std::ios::binary);
    if (!file) throw Failure{ExitCode::UserError, "cannot read " + config.model_path};
    const std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    const Valuation v = parse_valuation(text, gp.base_ptr());

    const bool fixed = is_alpha_fixed_model(gp, alpha, v);
    const bool psi_fixed = is_psi_fixpoint(gp, alpha, v);
    const bool inequality = satisfies_model_inequality(gp, v, config.orientation);
    std::optional<bool> stable;
    if (is_conventional_ground(gp)) {
      const bool three_valued = std::none_of(v.values().begin(), v.values().end(), [](TruthValue x) {
        return x == TruthValue::Inconsistent;
      });
      stable = three_valued && gl_transform(gp, to_three_valuation(v)) == to_three_valuation(v);
      if (*stable && !is_alpha_fixed_model(gp, TruthValue::False, v)) {
        throw Failure{ExitCode::InternalFailure, "stable model is not a fixed model under F"};
      }
    }

    if (config.format == OutputFormat::Json) {
      nlohmann::ordered_json j;
      j["alpha_fixed_model"] = fixed;
      j["psi_fixpoint"] = psi_fixed;
      j["model_inequality"] = inequality;
      j["stable_model"] = stable ? nlohmann::ordered_json(*stable) : nlohmann::ordered_json();
      out << j.dump() << '\n';
    } else {
      const char sep = config.format == OutputFormat::Tsv ? '\t' : ' ';
      out << "alpha-fixed-model" << sep << yes_no(fixed) << '\n'
          << "psi-fixpoint" << sep << yes_no(psi_fixed) << '\n'
          << "model-inequality" << sep << yes_no(inequality) << '\n'
          << "stable-model" << sep << (stable ? yes_no(*stable) : "n/a") << '\n';
    }
    return ExitCode::Ok;
  });
}

ExitCode cmd_ground(const CliConfig& config, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const GroundProgram gp = load(config, in);
    out << render_ground_program(gp);
    for (AtomId a : gp.not_heads()) out << "% " << gp.base().name(a) << " has no rule\n";
    return ExitCode::Ok;
  });
}

}  // namespace alphafix::cli
