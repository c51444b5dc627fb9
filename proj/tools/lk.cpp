#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "lk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for Leonard systems and their descendents"};
  app.require_subcommand(1);
  std::string config_path;
  bool json_out = false;
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check the defining conditions of a parameter array"},
      {"descend", "decide or search the descendent relation"},
      {"form", "build and check balanced bilinear pairings"},
      {"ortho", "orthogonality sums of the dual polynomial families"},
  };
  for (const auto& [name, blurb] : commands) {
    CLI::App* sub = app.add_subcommand(name, blurb);
    sub->add_option("--config", config_path, "path to the JSON job config")->required();
    sub->add_flag("--json", json_out, "machine readable report");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  std::ifstream in(config_path);
  if (!in) {
    std::cout << "error: ConfigParse: cannot read config file '" << config_path << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const lk::Report report =
      lk::run_command(app.get_subcommands().front()->get_name(), buffer.str());
  std::cout << (json_out ? lk::render_json(report) : lk::render_text(report));
  return report.exit_code;
}
