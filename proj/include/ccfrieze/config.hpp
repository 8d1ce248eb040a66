// Run configuration: a flat JSON document, e.g.
//
//   {
//     "polygon_size": 8,
//     "R": [[2,5],[2,7]],
//     "T": [[1,7],[2,4],[2,5],[2,7],[5,7]],
//     "mode": "modified",
//     "epsilon": {"{1,7}": "u", "{2,4}": "v", "{5,7}": "z", "{2,5}": "1", "{2,7}": "1"},
//     "outputs": ["text", "json", "report"]
//   }
//
// "epsilon" may also be "auto"; "variables" optionally names the variables.
#pragma once

#include "ccfrieze/cc_map.hpp"
#include "ccfrieze/polygon.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccfrieze {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int polygon_size = 0;
  DiagonalSet rigid;
  DiagonalSet tilting;
  Mode mode = Mode::Modified;
  bool epsilon_auto = true;
  std::map<Diagonal, std::string> epsilon;
  std::vector<std::string> variables;
  std::vector<std::string> outputs;
};

inline const std::vector<std::string>& known_outputs() {
  static const std::vector<std::string> names{"text", "json", "tikz", "dot", "report"};
  return names;
}

// Throws ConfigError naming the offending field (or line, for syntax errors).
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);
std::string config_to_json(const RunConfig& config);

// Parses "{i,j}" (spaces allowed) into a validated diagonal of the m-gon.
Diagonal parse_diagonal(std::string_view text, const Polygon& poly);

// Builds the context for the configured mode; validation failures surface
// as std::invalid_argument / EpsilonError / IndexError.
CCContext build_context(const RunConfig& config);

// The two shipped configurations reproducing the worked A_5 example.
RunConfig a5_modified_config();
RunConfig a5_original_config();

}  // namespace ccfrieze
