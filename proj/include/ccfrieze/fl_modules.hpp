// The modules  G c = C(-, Sigma c)|_R  (and the T-version) as thin modules.
//
// Every graded piece of G c is 0- or 1-dimensional, so a submodule is fixed
// by its support: the submodules are exactly the arrow-closed subsets of the
// support, and each Grassmannian of submodules is a finite set of points.
#pragma once

#include "ccfrieze/mesh_engine.hpp"
#include "ccfrieze/polygon.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ccfrieze {

using Subset = std::uint64_t;  // bit k stands for base[k]

struct ThinModule {
  std::vector<Diagonal> base;
  Subset support = 0;
  // (k, k2): the action of the morphism base[k2] -> base[k] sends the
  // base[k]-component of the module onto its base[k2]-component.
  std::vector<std::pair<int, int>> arrows;

  bool is_zero() const { return support == 0; }
  bool in_support(std::size_t k) const { return (support >> k) & 1U; }
  std::vector<Diagonal> support_list() const;
  std::vector<Diagonal> subset_list(Subset s) const;

  // {"support": ["{2,5}", ...], "arrows": [["{2,7}", "{2,5}"], ...]}
  std::string to_json() const;
};

// Integer coordinates over base in the basis of simple modules.
using FlClass = std::vector<int>;

enum class MeshImageClass { SplitSES, NonSplitSES, ProjCase, InjCase };

std::string to_string(MeshImageClass c);

// Throws std::invalid_argument if base is not rigid.
ThinModule compute_G(const MeshEngine& engine, const Diagonal& c, const std::vector<Diagonal>& base);

std::vector<Subset> closed_subsets(const ThinModule& m);
FlClass subset_class(const ThinModule& m, Subset s);
FlClass module_class(const ThinModule& m);

// Euler characteristic of the Grassmannian of submodules of class e.
std::uint64_t grassmannian_euler(const ThinModule& m, const FlClass& e);
// All nonzero Euler characteristics at once, keyed by class.
std::map<FlClass, std::uint64_t> grassmannian_euler_table(const ThinModule& m);

// Connected components of the action graph on the support.
std::vector<ThinModule> components(const ThinModule& m);

// Isomorphism of direct sums of thin modules over the same base: equal
// multisets of indecomposable components, compared by (support, arrows).
bool isomorphic(const std::vector<ThinModule>& lhs, const std::vector<ThinModule>& rhs);

// Shape of G applied to the AR triangle ending at mesh.end.
MeshImageClass classify_mesh_image(const MeshEngine& engine, const ARMesh& mesh, const DiagonalSet& rigid);

}  // namespace ccfrieze
