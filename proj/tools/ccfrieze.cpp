// ccfrieze: compute and verify the modified Caldero-Chapoton frieze of a
// polygon configuration.
#include "ccfrieze/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Modified Caldero-Chapoton friezes on the type A polygon model"};
  std::string config_path, mode, out_dir, emit;
  bool verify = false, seed = false;
  app.add_option("--config", config_path, "run configuration (JSON)");
  app.add_option("--mode", mode, "override the mode: modified, original or integer");
  app.add_option("--out", out_dir, "write outputs into this directory");
  app.add_option("--emit", emit, "comma-separated outputs: text,json,tikz,dot,report");
  app.add_flag("--verify", verify, "print the frieze report; exit 2 if it fails");
  app.add_flag("--seed-examples", seed, "write the two shipped A5 configurations");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ccfrieze::kExitInputError;
  }

  if (seed) {
    try {
      for (const auto& p : ccfrieze::seed_examples(out_dir.empty() ? "." : out_dir)) std::cout << p << '\n';
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return ccfrieze::kExitInputError;
    }
    if (config_path.empty()) return ccfrieze::kExitPass;
  }
  if (config_path.empty()) {
    std::cerr << "error: --config is required\n";
    return ccfrieze::kExitInputError;
  }

  ccfrieze::RunConfig config;
  ccfrieze::RunOptions options;
  try {
    config = ccfrieze::load_config(config_path);
    if (!mode.empty()) config.mode = ccfrieze::parse_mode(mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ccfrieze::kExitInputError;
  }
  if (!out_dir.empty()) options.out_dir = out_dir;
  std::stringstream list(emit);
  for (std::string item; std::getline(list, item, ',');)
    if (!item.empty()) options.emit.push_back(item);
  options.verify = verify;
  return ccfrieze::run(config, options, std::cout, std::cerr);
}
