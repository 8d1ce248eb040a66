// Emission of friezes: text grid, JSON, TikZ, DOT and the verification report.
// All emitters are deterministic: identical contexts give identical bytes.
#pragma once

#include "ccfrieze/cc_map.hpp"
#include "ccfrieze/polygon.hpp"

#include <map>
#include <string>
#include <vector>

namespace ccfrieze {

// One cell of the AR-quiver layout.  Row h (from the bottom) holds the
// diagonals {a, a+h+2}; column c is the rotation.  Columns 0..m-1 show every
// object once; column m repeats column 0 flipped upside down (the seam of the
// Moebius strip) and is flagged.
struct GridCell {
  int row;
  int col;
  Diagonal object;
  bool seam;
};

std::vector<GridCell> grid_layout(const Polygon& poly);

std::string emit_text_grid(const CCContext& ctx);
std::string emit_json(const CCContext& ctx, const FriezeReport& report);
std::string emit_tikz(const CCContext& ctx, const FriezeReport& report);
std::string emit_dot(const CCContext& ctx, const FriezeReport& report);
std::string emit_report(const CCContext& ctx, const FriezeReport& report);

// "(1+u*v)/u*v" -> "\frac{1+uv}{uv}"
std::string latex(const LaurentPoly& p);

// Reloads the value table written by emit_json.
struct ValueTable {
  int polygon_size = 0;
  VarTablePtr vars;
  std::map<Diagonal, LaurentPoly> values;
};
ValueTable load_values_json(const std::string& text);

}  // namespace ccfrieze
