// semistable-gate: emptiness thresholds and lemma checks as JSON certificates.
//
//   semistable-gate <command> [--input FILE] [--json] [--min-ell] [--ell N ...] [--budget N]
//
// The document is read from --input or standard input, the certificate goes
// to standard output and diagnostics to standard error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semistable/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = semistable::cli;

  CLI::App app{"Exact non-existence thresholds for semistable Galois representations"};
  app.set_version_flag("--version", std::string(cli::kToolVersion));

  std::string command;
  std::string input_path;
  cli::Flags flags;
  std::uint64_t budget = 0;

  std::string names;
  for (auto name : cli::commands()) names += (names.empty() ? "" : ", ") + std::string(name);
  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("--input", input_path, "Input document (default: standard input)");
  app.add_flag("--json", flags.compact, "Emit the certificate on a single line");
  app.add_flag("--min-ell", flags.min_ell, "Also report the least certified prime ell");
  app.add_option("--ell", flags.ells, "Prime ell to decide (repeatable)");
  auto* budget_opt = app.add_option("--budget", budget, "Instance budget for gate-search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitSchema;
  }
  if (budget_opt->count() > 0) flags.budget = budget;

  std::string text;
  if (input_path.empty() || input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "schema error: cannot open input file '" << input_path << "'\n";
      return cli::kExitSchema;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  const cli::Outcome outcome = cli::run(command, text, flags);
  std::cout << outcome.output;
  std::cerr << outcome.diagnostics;
  return outcome.exit_code;
}
