#include "ccfrieze/run.hpp"

#include "ccfrieze/emit.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace ccfrieze {

namespace fs = std::filesystem;

std::string output_file_name(const std::string& kind) {
  if (kind == "text") return "frieze.txt";
  if (kind == "json") return "frieze.json";
  if (kind == "tikz") return "frieze.tex";
  if (kind == "dot") return "quiver.dot";
  if (kind == "report") return "report.txt";
  throw std::invalid_argument("unknown output '" + kind + "'");
}

namespace {

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

}  // namespace

int run(const RunConfig& config, const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<std::string> kinds = options.emit.empty() ? config.outputs : options.emit;
  if (kinds.empty()) kinds = {"text"};
  for (const auto& k : kinds) {
    try {
      output_file_name(k);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }
  }

  std::optional<CCContext> ctx;
  try {
    ctx.emplace(build_context(config));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  FriezeReport report = ctx->frieze_check();

  try {
    if (options.out_dir) fs::create_directories(*options.out_dir);
    for (const auto& k : kinds) {
      std::string text;
      if (k == "text") text = emit_text_grid(*ctx);
      else if (k == "json") text = emit_json(*ctx, report);
      else if (k == "tikz") text = emit_tikz(*ctx, report);
      else if (k == "dot") text = emit_dot(*ctx, report);
      else text = emit_report(*ctx, report);
      if (options.out_dir) write_file(fs::path(*options.out_dir) / output_file_name(k), text);
      else out << text;
    }
    bool report_shown = !options.out_dir && std::find(kinds.begin(), kinds.end(), "report") != kinds.end();
    if (options.verify && !report_shown) out << emit_report(*ctx, report);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  for (const auto& w : ctx->warnings()) err << "warning: " << w << '\n';
  if (!report.pass) {
    err << "verification failed: some mesh defect disagrees with its classification\n";
    return kExitVerifyFailed;
  }
  return kExitPass;
}

std::vector<std::string> seed_examples(const std::string& dir) {
  fs::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& [name, cfg] : {std::pair{"a5_figure3.cfg", a5_modified_config()}, std::pair{"a5_figure2.cfg", a5_original_config()}}) {
    fs::path p = fs::path(dir) / name;
    write_file(p, config_to_json(cfg));
    written.push_back(p.string());
  }
  return written;
}

}  // namespace ccfrieze
