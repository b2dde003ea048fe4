#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catsize/reproduce.hpp"
#include "catsize/scenario.hpp"

namespace {

using namespace catsize;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int run_files(const std::vector<std::string>& files, const std::string& format) {
  const cli::RenderFormat fmt = cli::parse_format(format);
  const est::MaterialRegistry registry = est::MaterialRegistry::from_environment();
  std::vector<cli::Report> reports;
  for (const std::string& file : files) {
    try {
      reports.push_back(cli::run_scenario(cli::parse_scenario(read_file(file), registry)));
    } catch (const ScenarioError& e) {
      throw ScenarioError(file + ": " + e.what());
    }
  }
  std::cout << cli::render_many(reports, fmt) << "\n";
  return 0;
}

int run_reproduce(const std::string& format) {
  const cli::RenderFormat fmt = cli::parse_format(format);
  std::cout << cli::render(cli::reproduce_paper(), fmt) << "\n";
  return 0;
}

int run_exact(const std::string& path_a, const std::string& path_b, const std::string& format) {
  const cli::RenderFormat fmt = cli::parse_format(format);
  try {
    cli::Scenario scenario =
        cli::exact_from_state_documents(read_file(path_a), read_file(path_b));
    std::cout << cli::render(cli::run_scenario(scenario), fmt) << "\n";
  } catch (const ScenarioError& e) {
    throw ScenarioError(path_a + ", " + path_b + ": " + e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cat-size calculator: exact mode-occupation comparisons and "
               "order-of-magnitude estimates for superposition states"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string run_format = "table";
  CLI::App* run = app.add_subcommand("run", "evaluate scenario files");
  run->add_option("files", files, "scenario TOML files")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--format", run_format, "output format: table or json");

  std::string reproduce_format = "table";
  CLI::App* reproduce =
      app.add_subcommand("reproduce-paper", "run the built-in scenario battery and compare "
                                            "against the published figures");
  reproduce->add_option("--format", reproduce_format, "output format: table or json");

  std::string state_a;
  std::string state_b;
  std::string exact_format = "table";
  CLI::App* exact = app.add_subcommand("exact", "compare two second-quantized states");
  exact->add_option("--state-a", state_a, "state TOML file for branch A")
      ->required()
      ->check(CLI::ExistingFile);
  exact->add_option("--state-b", state_b, "state TOML file for branch B")
      ->required()
      ->check(CLI::ExistingFile);
  exact->add_option("--format", exact_format, "output format: table or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return run_files(files, run_format);
    if (reproduce->parsed()) return run_reproduce(reproduce_format);
    return run_exact(state_a, state_b, exact_format);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
