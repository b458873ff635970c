#include "dfsl/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct CliArgs {
  std::string config_path;
  std::string out_dir = ".";
  bool strict = false;
};

void add_command(CLI::App& app, const std::string& name, const std::string& desc, CliArgs& args,
                 dfsl::Command command, dfsl::Command* chosen) {
  CLI::App* sub = app.add_subcommand(name, desc);
  sub->add_option("--config", args.config_path, "path to the JSON configuration")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", args.out_dir, "output directory (default: current directory)");
  sub->add_flag("--strict", args.strict, "exit 1 when the hypothesis is unmet or a verdict is violated");
  sub->callback([command, chosen] { *chosen = command; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete fractional Sturm-Liouville operators, eigensolves, and comparison experiments"};
  app.require_subcommand(1);

  CliArgs args;
  dfsl::Command chosen = dfsl::Command::Kernels;
  add_command(app, "kernels", "dump kernel coefficient sequences as CSV", args,
              dfsl::Command::Kernels, &chosen);
  add_command(app, "opmat", "dump an operator matrix as CSV", args, dfsl::Command::Opmat, &chosen);
  add_command(app, "verify", "tabulate by-parts and symmetry discrepancies", args,
              dfsl::Command::Verify, &chosen);
  add_command(app, "eig", "solve the weighted eigenproblem and dump eigenvalues", args,
              dfsl::Command::Eig, &chosen);
  add_command(app, "compare", "run one comparison experiment and write its JSON report", args,
              dfsl::Command::Compare, &chosen);
  add_command(app, "sweep", "run the comparison over a list of orders", args, dfsl::Command::Sweep,
              &chosen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ifstream in(args.config_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << args.config_path << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const dfsl::RunConfig config = dfsl::parse_config(buf.str());
    if (config.command != chosen) {
      std::cerr << "error: config declares command '" << dfsl::command_name(config.command)
                << "' but '" << dfsl::command_name(chosen) << "' was invoked\n";
      return 2;
    }
    dfsl::RunOptions options;
    options.strict = args.strict;
    options.out_dir = args.out_dir;
    return dfsl::run(config, options);
  } catch (const dfsl::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
