#include "ccfrieze/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ccfrieze {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

Diagonal diagonal_from_pair(const json& v, const Polygon& poly, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw ConfigError(where + ": expected a two-element integer array");
  int a = v[0].get<int>(), b = v[1].get<int>();
  if (a < 1 || a > poly.size() || b < 1 || b > poly.size())
    throw ConfigError(where + ": vertex out of range 1.." + std::to_string(poly.size()));
  if (!poly.is_diagonal(a, b))
    throw ConfigError(where + ": degenerate diagonal {" + std::to_string(a) + "," + std::to_string(b) + "}");
  return poly.make(a, b);
}

DiagonalSet diagonal_list(const json& doc, const char* field, const Polygon& poly) {
  if (!doc.contains(field)) throw ConfigError(std::string("missing field '") + field + "'");
  const json& arr = doc.at(field);
  if (!arr.is_array()) throw ConfigError(std::string("field '") + field + "': expected an array of diagonals");
  std::vector<Diagonal> out;
  for (std::size_t k = 0; k < arr.size(); ++k)
    out.push_back(diagonal_from_pair(arr[k], poly, std::string("field '") + field + "'[" + std::to_string(k) + "]"));
  return make_set(std::move(out));
}

}  // namespace

Diagonal parse_diagonal(std::string_view text, const Polygon& poly) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  int a = 0, b = 0, used = -1;
  if (std::sscanf(s.c_str(), "{%d,%d}%n", &a, &b, &used) != 2 || used != static_cast<int>(s.size()))
    throw ConfigError("malformed diagonal '" + std::string(text) + "'");
  if (a < 1 || a > poly.size() || b < 1 || b > poly.size())
    throw ConfigError("diagonal '" + std::string(text) + "' has a vertex out of range");
  if (!poly.is_diagonal(a, b))
    throw ConfigError("degenerate diagonal {" + std::to_string(a) + "," + std::to_string(b) + "}");
  return poly.make(a, b);
}

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("syntax error on line " + std::to_string(line_of(json_text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");

  static const std::vector<std::string> allowed{"polygon_size", "R", "T", "mode", "epsilon", "variables", "outputs"};
  for (const auto& [key, value] : doc.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("unknown field '" + key + "'");

  RunConfig cfg;
  if (!doc.contains("polygon_size") || !doc["polygon_size"].is_number_integer())
    throw ConfigError("field 'polygon_size': expected an integer");
  cfg.polygon_size = doc["polygon_size"].get<int>();
  if (cfg.polygon_size < 4) throw ConfigError("field 'polygon_size': need at least 4 vertices");
  Polygon poly(cfg.polygon_size);

  cfg.rigid = doc.contains("R") ? diagonal_list(doc, "R", poly) : DiagonalSet{};
  cfg.tilting = diagonal_list(doc, "T", poly);

  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ConfigError("field 'mode': expected a string");
    try {
      cfg.mode = parse_mode(doc["mode"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("field 'mode': ") + e.what());
    }
  }

  if (doc.contains("epsilon")) {
    const json& eps = doc["epsilon"];
    if (eps.is_string()) {
      if (eps.get<std::string>() != "auto") throw ConfigError("field 'epsilon': expected \"auto\" or an object");
    } else if (eps.is_object()) {
      cfg.epsilon_auto = false;
      for (const auto& [key, value] : eps.items()) {
        Diagonal d;
        try {
          d = parse_diagonal(key, poly);
        } catch (const ConfigError& e) {
          throw ConfigError(std::string("field 'epsilon': ") + e.what());
        }
        if (!value.is_string()) throw ConfigError("field 'epsilon'[\"" + key + "\"]: expected a string");
        cfg.epsilon[d] = value.get<std::string>();
      }
    } else {
      throw ConfigError("field 'epsilon': expected \"auto\" or an object");
    }
  }

  if (doc.contains("variables")) {
    if (!doc["variables"].is_array()) throw ConfigError("field 'variables': expected an array of names");
    for (const auto& v : doc["variables"]) {
      if (!v.is_string()) throw ConfigError("field 'variables': names must be strings");
      cfg.variables.push_back(v.get<std::string>());
    }
  }

  if (doc.contains("outputs")) {
    if (!doc["outputs"].is_array()) throw ConfigError("field 'outputs': expected an array");
    for (const auto& v : doc["outputs"]) {
      if (!v.is_string()) throw ConfigError("field 'outputs': entries must be strings");
      std::string name = v.get<std::string>();
      if (std::find(known_outputs().begin(), known_outputs().end(), name) == known_outputs().end())
        throw ConfigError("field 'outputs': unknown output '" + name + "'");
      cfg.outputs.push_back(name);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string config_to_json(const RunConfig& config) {
  auto pairs = [](const DiagonalSet& set) {
    json arr = json::array();
    for (const auto& d : set) arr.push_back({d.i, d.j});
    return arr;
  };
  std::ostringstream os;
  os << "{\n";
  os << "  \"polygon_size\": " << config.polygon_size << ",\n";
  os << "  \"R\": " << pairs(config.rigid).dump() << ",\n";
  os << "  \"T\": " << pairs(config.tilting).dump() << ",\n";
  os << "  \"mode\": \"" << to_string(config.mode) << "\",\n";
  if (config.epsilon_auto) {
    os << "  \"epsilon\": \"auto\"";
  } else {
    json eps = json::object();
    for (const auto& [d, v] : config.epsilon) eps[d.to_string()] = v;
    os << "  \"epsilon\": " << eps.dump();
  }
  if (!config.variables.empty()) os << ",\n  \"variables\": " << json(config.variables).dump();
  if (!config.outputs.empty()) os << ",\n  \"outputs\": " << json(config.outputs).dump();
  os << "\n}\n";
  return os.str();
}

CCContext build_context(const RunConfig& config) {
  auto engine = mesh_engine_for(config.polygon_size);
  switch (config.mode) {
    case Mode::Integer:
      return CCContext::integer(engine, config.rigid, config.tilting);
    case Mode::Original: {
      std::map<Diagonal, std::string> names;
      if (!config.epsilon_auto) {
        for (const auto& [d, v] : config.epsilon) names[d] = v;
      } else if (!config.variables.empty()) {
        if (config.variables.size() != config.tilting.size())
          throw std::invalid_argument("original mode needs one variable per member of T");
        for (std::size_t k = 0; k < config.tilting.size(); ++k) names[config.tilting[k]] = config.variables[k];
      }
      return CCContext::original(engine, config.tilting, names);
    }
    case Mode::Modified:
      if (config.epsilon_auto) return CCContext::modified_auto(engine, config.rigid, config.tilting, config.variables);
      return CCContext::modified(engine, config.rigid, config.tilting, config.epsilon, config.variables);
  }
  throw std::logic_error("unhandled mode");
}

RunConfig a5_modified_config() {
  RunConfig c;
  c.polygon_size = 8;
  c.rigid = {{2, 5}, {2, 7}};
  c.tilting = {{1, 7}, {2, 4}, {2, 5}, {2, 7}, {5, 7}};
  c.mode = Mode::Modified;
  c.epsilon_auto = false;
  c.epsilon = {{{1, 7}, "u"}, {{2, 4}, "v"}, {{5, 7}, "z"}, {{2, 5}, "1"}, {{2, 7}, "1"}};
  c.variables = {"u", "v", "z"};
  c.outputs = {"text", "json", "report"};
  return c;
}

RunConfig a5_original_config() {
  RunConfig c;
  c.polygon_size = 8;
  c.rigid = {{1, 7}, {2, 4}, {2, 5}, {2, 7}, {5, 7}};
  c.tilting = c.rigid;
  c.mode = Mode::Original;
  c.epsilon_auto = false;
  c.epsilon = {{{1, 7}, "u"}, {{2, 4}, "v"}, {{2, 5}, "x"}, {{2, 7}, "y"}, {{5, 7}, "z"}};
  c.outputs = {"text", "json", "report"};
  return c;
}

}  // namespace ccfrieze
