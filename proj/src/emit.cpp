#include "ccfrieze/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace ccfrieze {

using nlohmann::json;

std::vector<GridCell> grid_layout(const Polygon& poly) {
  const int m = poly.size();
  const int n = poly.rank();
  std::vector<GridCell> cells;
  for (int h = 0; h < n; ++h) {
    for (int c = 0; c <= m; ++c) {
      if ((c - h) % 2 != 0) continue;
      int a = 1 + (c - h) / 2;
      cells.push_back({h, c, poly.make(a, a + h + 2), c == m});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const GridCell& x, const GridCell& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });
  return cells;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Rows from the top, as in the usual drawing of the AR quiver.
std::string grid_block(const Polygon& poly, const std::vector<GridCell>& cells,
                       const std::map<Diagonal, std::string>& label) {
  std::size_t width = 1;
  for (const auto& cell : cells) width = std::max(width, label.at(cell.object).size());
  width += 2;
  const int m = poly.size();
  std::ostringstream os;
  for (int h = poly.rank() - 1; h >= 0; --h) {
    std::string line;
    for (int c = 0; c <= m; ++c) {
      auto it = std::find_if(cells.begin(), cells.end(),
                             [&](const GridCell& g) { return g.row == h && g.col == c; });
      std::string text = it == cells.end() ? "" : label.at(it->object);
      if (c == m) line += "| ";
      line += pad(text, width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

bool is_defect_one(const FriezeReport& report, const Diagonal& c) {
  for (const auto& r : report.meshes)
    if (r.mesh.end == c) return r.defect.equals_constant(1);
  return false;
}

std::string pair_text(const Diagonal& d) { return std::to_string(d.i) + "," + std::to_string(d.j); }

}  // namespace

std::string emit_text_grid(const CCContext& ctx) {
  const Polygon& poly = ctx.polygon();
  auto cells = grid_layout(poly);
  std::map<Diagonal, std::string> names, values;
  for (const auto& [c, v] : ctx.values()) {
    names[c] = c.to_string();
    values[c] = v.to_string();
  }
  std::ostringstream os;
  os << "# m = " << poly.size() << ", mode " << to_string(ctx.mode()) << ", variables";
  for (const auto& v : ctx.vars()->names()) os << ' ' << v;
  os << "\n# objects\n" << grid_block(poly, cells, names);
  os << "# values\n" << grid_block(poly, cells, values);
  return os.str();
}

std::string emit_json(const CCContext& ctx, const FriezeReport& report) {
  const Polygon& poly = ctx.polygon();
  std::ostringstream os;
  os << "{\n";
  os << "\"polygon_size\":" << poly.size() << ",\n";
  os << "\"mode\":\"" << to_string(ctx.mode()) << "\",\n";
  os << "\"variables\":" << json(ctx.vars()->names()).dump() << ",\n";
  os << "\"values\":[\n";
  bool first = true;
  for (const auto& [c, v] : ctx.values()) {
    json entry = {{"object", c.to_string()}, {"value", v.to_string()}};
    os << (first ? "" : ",\n") << entry.dump();
    first = false;
  }
  os << "\n],\n\"defect_meshes\":[\n";
  first = true;
  for (const auto& r : report.meshes) {
    if (!r.defect.equals_constant(1)) continue;
    json middles = json::array();
    for (const auto& b : r.mesh.middles) middles.push_back(b.to_string());
    json entry = {{"end", r.mesh.end.to_string()},
                  {"start", r.mesh.start.to_string()},
                  {"middles", middles},
                  {"classification", to_string(r.classification)}};
    os << (first ? "" : ",\n") << entry.dump();
    first = false;
  }
  os << "\n],\n\"grid\":[\n";
  first = true;
  for (const auto& cell : grid_layout(poly)) {
    json entry = {{"row", cell.row}, {"col", cell.col}, {"object", cell.object.to_string()}, {"seam", cell.seam}};
    os << (first ? "" : ",\n") << entry.dump();
    first = false;
  }
  os << "\n],\n\"pass\":" << (report.pass ? "true" : "false") << "\n}\n";
  return os.str();
}

std::string latex(const LaurentPoly& p) {
  auto plain = [](const std::string& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '*') continue;
      if (s[k] == '^') {
        std::size_t e = k + 1;
        if (e < s.size() && s[e] == '-') ++e;
        while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        out += "^{" + s.substr(k + 1, e - k - 1) + "}";
        k = e - 1;
        continue;
      }
      out += s[k];
    }
    return out;
  };
  std::string s = p.to_string();
  std::string num, den;
  if (!s.empty() && s.front() == '(') {
    auto close = s.rfind(")/");
    num = s.substr(1, close - 1);
    den = s.substr(close + 2);
  } else if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  } else {
    return plain(s);
  }
  return "\\frac{" + plain(num) + "}{" + plain(den) + "}";
}

std::string emit_tikz(const CCContext& ctx, const FriezeReport& report) {
  const Polygon& poly = ctx.polygon();
  const int m = poly.size();
  auto cells = grid_layout(poly);
  std::ostringstream os;
  os << "% rows: diagonals {a, a+k} for k = 2.." << m - 2 << "; the last column repeats the first (seam)\n";
  os << "\\begin{tikzpicture}[x=1.6cm, y=1.1cm]\n";
  for (const auto& cell : cells) {
    if (cell.seam || !is_defect_one(report, cell.object)) continue;
    // grey diamond between the start and the end of the mesh; meshes ending
    // in the first two columns are drawn across the seam instead
    int x = cell.col - 1, y = cell.row;
    if (cell.col < 2) {
      x += m;
      y = poly.rank() - 1 - y;
    }
    os << "  \\fill[gray!30] (" << x - 1 << "," << y << ") -- (" << x << "," << y - 1 << ") -- (" << x + 1 << ","
       << y << ") -- (" << x << "," << y + 1 << ") -- cycle;\n";
  }
  for (int h = 0; h < poly.rank(); ++h)
    os << "  \\node[anchor=east, gray] at (-0.8," << h << ") {$" << h + 2 << "$};\n";
  for (const auto& cell : cells) {
    os << "  \\node" << (cell.seam ? "[gray]" : "") << " (n" << cell.row << "_" << cell.col << ") at (" << cell.col
       << "," << cell.row << ") {$" << latex(ctx.rho_indec(cell.object)) << "$};\n";
  }
  for (const auto& a : cells) {
    for (const auto& b : cells) {
      if (b.col != a.col + 1 || std::abs(b.row - a.row) != 1) continue;
      os << "  \\draw[->" << (b.seam ? ", dotted" : "") << "] (n" << a.row << "_" << a.col << ") -- (n" << b.row
         << "_" << b.col << ");\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string emit_dot(const CCContext& ctx, const FriezeReport& report) {
  const Polygon& poly = ctx.polygon();
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& [c, v] : ctx.values()) {
    os << "  \"" << pair_text(c) << "\" [label=\"" << c.to_string() << "\\n" << v.to_string() << "\"";
    if (is_defect_one(report, c)) os << ", style=filled, fillcolor=gray85";
    os << "];\n";
  }
  auto arrows = poly.arrows();
  std::sort(arrows.begin(), arrows.end());
  for (const auto& [x, y] : arrows) os << "  \"" << pair_text(x) << "\" -> \"" << pair_text(y) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string emit_report(const CCContext& ctx, const FriezeReport& report) {
  const Polygon& poly = ctx.polygon();
  std::ostringstream os;
  auto set_text = [](const DiagonalSet& s) {
    std::string out;
    for (const auto& d : s) out += (out.empty() ? "" : " ") + d.to_string();
    return out.empty() ? std::string("(none)") : out;
  };
  os << "m = " << poly.size() << ", mode " << to_string(ctx.mode()) << '\n';
  os << "R: " << set_text(ctx.rigid()) << '\n';
  os << "T: " << set_text(ctx.tilting()) << '\n';
  os << "N generators:";
  if (ctx.n_generators().empty()) os << " (none)";
  for (const auto& g : ctx.n_generators()) os << "  " << to_string(g, ctx.tilting());
  os << '\n';
  const auto& q = ctx.quotient();
  os << "quotient: free rank " << q.free_rank;
  if (!q.torsion_invariants.empty()) {
    os << ", torsion";
    for (auto d : q.torsion_invariants) os << " Z/" << d;
  }
  os << '\n';
  os << "epsilon:";
  for (const auto& t : ctx.tilting()) os << "  " << t << " -> " << ctx.epsilon().image(t);
  os << '\n';
  for (const auto& w : ctx.warnings()) os << "warning: " << w << '\n';
  os << report.to_text();
  return os.str();
}

ValueTable load_values_json(const std::string& text) {
  json doc = json::parse(text);
  ValueTable table;
  table.polygon_size = doc.at("polygon_size").get<int>();
  table.vars = make_vars(doc.at("variables").get<std::vector<std::string>>());
  Polygon poly(table.polygon_size);
  for (const auto& entry : doc.at("values")) {
    std::string obj = entry.at("object").get<std::string>();
    int a = 0, b = 0;
    if (std::sscanf(obj.c_str(), "{%d,%d}", &a, &b) != 2) throw std::invalid_argument("bad object '" + obj + "'");
    table.values.emplace(poly.make(a, b), LaurentPoly::parse(entry.at("value").get<std::string>(), table.vars));
  }
  return table;
}

}  // namespace ccfrieze
