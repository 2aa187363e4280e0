// singspec: multiplier ideals, V-filtrations and spectra from resolution data.
//
//   singspec <command> --input FILE [--alpha p/q] [--max p/q] [--json|--table]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "singspec/cli.hpp"

namespace cli = singspec::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact singularity invariants from combinatorial resolution data"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string alpha_text;
  std::string max_text = "1";
  bool as_table = false;

  for (const auto& name : cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", input, "input document (JSON)")->required();
    sub->add_option("--alpha", alpha_text, "exact rational p/q");
    sub->add_option("--max", max_text, "upper bound p/q for listings (default 1)");
    auto* json_flag = sub->add_flag("--json", "emit JSON (default)");
    sub->add_flag("--table", as_table, "emit a plain-text table")->excludes(json_flag);
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  cli::Result result;
  try {
    cli::Flags flags;
    if (!alpha_text.empty()) flags.alpha = singspec::parse_rational(alpha_text);
    flags.max = singspec::parse_rational(max_text);
    result = cli::run(command, singspec::load_document(input), flags);
  } catch (const std::exception& e) {
    result.exit_code = cli::kExitInvalid;
    result.output = cli::Json{{"error", "input"}, {"message", e.what()}};
  }

  auto& stream = result.exit_code == cli::kExitOk ? std::cout : std::cerr;
  if (as_table) {
    stream << cli::render_table(result.output);
  } else {
    stream << result.output.dump() << "\n";
  }
  return result.exit_code;
}
