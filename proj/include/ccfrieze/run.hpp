// Run orchestration shared by the command-line tool and the tests.
#pragma once

#include "ccfrieze/config.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ccfrieze {

enum ExitCode { kExitPass = 0, kExitInputError = 1, kExitVerifyFailed = 2 };

struct RunOptions {
  std::optional<std::string> out_dir;  // files are written here; stdout otherwise
  std::vector<std::string> emit;       // overrides config.outputs when non-empty
  bool verify = false;                 // always print the report to `out`
};

// File names used under out_dir.
std::string output_file_name(const std::string& kind);

// Exit 0 iff the frieze check passes, 2 if it fails, 1 on any input error.
int run(const RunConfig& config, const RunOptions& options, std::ostream& out, std::ostream& err);

// Writes the two shipped configurations into dir; returns the paths written.
std::vector<std::string> seed_examples(const std::string& dir);

}  // namespace ccfrieze
