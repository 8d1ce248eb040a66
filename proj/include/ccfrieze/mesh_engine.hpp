// Morphisms of the cluster category of type A_n via its mesh category.
//
// For every source object x the engine knits the graded pieces
//   Hom_l(x, y) = coker( Hom_{l-2}(x, tau y) -> (+)_{b -> y} Hom_{l-1}(x, b) )
// of the path category of the AR quiver modulo the mesh relations, over Q.
// Everything is computed in the constructor; queries are lookups plus a few
// scalar multiplications.
#pragma once

#include "ccfrieze/linalg.hpp"
#include "ccfrieze/polygon.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ccfrieze {

class MeshEngine {
 public:
  explicit MeshEngine(Polygon polygon);

  const Polygon& polygon() const { return polygon_; }

  // Total dimension of Hom(x, y) in the mesh category (0 or 1).
  int hom_dim(const Diagonal& x, const Diagonal& y) const;
  // Path length at which Hom(x, y) lives, or -1 when it is zero.
  int hom_degree(const Diagonal& x, const Diagonal& y) const;

  // Every nonzero Hom(x, y) has a basis morphism: the class of a fixed path
  // of irreducible maps, returned here as the list of objects visited.
  std::vector<Diagonal> basis_path(const Diagonal& x, const Diagonal& y) const;

  // Coordinate of  basis(y,z) o basis(x,y)  in the basis of Hom(x, z).
  // Throws std::invalid_argument unless Hom(x,y) and Hom(y,z) are nonzero.
  Rational compose(const Diagonal& x, const Diagonal& y, const Diagonal& z) const;
  bool composite_nonzero(const Diagonal& x, const Diagonal& y, const Diagonal& z) const;

  // Hom-dimension matrix, rows = source, columns = target, in object order.
  std::string hom_matrix_csv() const;

 private:
  struct Level {
    std::vector<int> dim;                     // per object
    std::vector<linalg::Matrix> arrow_map;    // per arrow: Hom_{l-1}(x,src) -> Hom_l(x,dst)
  };
  struct Knit {
    std::vector<Level> levels;
    std::vector<int> degree;                  // per object, -1 if Hom(x, y) = 0
    std::vector<std::vector<int>> path;       // per object, arrow ids of the basis path
  };

  void knit_from(std::size_t source);
  // Image of id_x after following the arrows, as a vector in the final level.
  linalg::Matrix push(std::size_t source, const std::vector<int>& arrow_ids) const;
  std::size_t idx(const Diagonal& d) const { return polygon_.index_of(d); }

  Polygon polygon_;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;  // (from, to) object indices
  std::vector<std::vector<int>> incoming_;                   // arrow ids into each object
  std::map<std::pair<std::size_t, std::size_t>, int> arrow_id_;
  std::vector<Knit> knits_;
};

}  // namespace ccfrieze
