#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "solvcohom/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Twisted de Rham and Dolbeault cohomology of solvmanifolds in exact arithmetic"};
  app.require_subcommand(1, 1);

  std::string instance;
  std::string json_out;
  bool representatives = false;

  const std::map<std::string, std::string> help{
      {"validate", "run every validator on the instance"},
      {"derham", "Betti numbers of the lattice-selected de Rham complex"},
      {"dolbeault", "H^q of the lattice-selected Dolbeault complex and the h^{p,q} table"},
      {"conditions", "evaluate the diamond1, diamond2, star and box conditions"},
      {"oracle", "compare each weight sector with the full CE complex"},
      {"nilshadow", "structure constants of the nilshadow"},
  };
  for (const auto& name : solvcohom::cli::command_names()) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("instance", instance, "instance file (JSON)")->required();
    sub->add_option("--json", json_out, "write the machine-readable result to this file ('-' for stdout)");
    sub->add_flag("--representatives", representatives, "print cocycle representatives");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : solvcohom::cli::exit_parse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  solvcohom::cli::Options opts;
  opts.representatives = representatives;
  auto out = solvcohom::cli::run_command_on_file(command, instance, opts);

  const std::string machine = out.machine.dump(2) + "\n";
  if (json_out == "-") {
    std::cout << machine;
  } else {
    (out.exit_code == solvcohom::cli::exit_ok ? std::cout : std::cerr) << out.text;
    if (!json_out.empty()) {
      std::ofstream file(json_out);
      if (!file) {
        std::cerr << "cannot write " << json_out << "\n";
        return solvcohom::cli::exit_invalid;
      }
      file << machine;
    }
  }
  return out.exit_code;
}
