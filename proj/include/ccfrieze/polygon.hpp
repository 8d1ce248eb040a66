// Polygon model of the cluster category of type A_n.
//
// Indecomposable objects are the diagonals of an m-gon (m = n + 3) with
// vertices numbered 1..m anticlockwise.  Suspension rotates a diagonal one
// step clockwise, and it is also the AR translation.
#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ccfrieze {

struct Diagonal {
  int i = 0;  // i < j always
  int j = 0;

  auto operator<=>(const Diagonal&) const = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Diagonal& d);

// Sorted, duplicate-free list of diagonals (a subcategory "add{...}").
using DiagonalSet = std::vector<Diagonal>;

DiagonalSet make_set(std::vector<Diagonal> diagonals);
bool contains(const DiagonalSet& set, const Diagonal& d);

// AR triangle  start -> middles -> end  with start = suspend(end).
struct ARMesh {
  Diagonal start;
  std::vector<Diagonal> middles;  // one or two entries
  Diagonal end;
};

// Exchange triangles  t_star -> a -> t  and  t -> a_prime -> t_star.
struct ExchangePair {
  Diagonal t;
  Diagonal t_star;
  std::vector<Diagonal> a;
  std::vector<Diagonal> a_prime;
};

struct Violation {
  enum class Kind { Crossing, NotMaximal, NotContained, NotInPolygon };
  Kind kind;
  std::string message;
  std::optional<std::pair<Diagonal, Diagonal>> pair;  // for Kind::Crossing
};

class Polygon {
 public:
  // Requires m >= 4.
  explicit Polygon(int m);

  int size() const { return m_; }
  int rank() const { return m_ - 3; }

  // All diagonals, lexicographically sorted; count m(m-3)/2.
  const std::vector<Diagonal>& objects() const { return objects_; }
  std::size_t index_of(const Diagonal& d) const;

  // Vertex arithmetic is taken mod m into 1..m.
  int wrap(int v) const;
  // Whether {a,b} is a proper diagonal (not an edge, not a point).
  bool is_diagonal(int a, int b) const;
  // Normalised diagonal or nullopt for the degenerate pairs {a,a}, {a,a+-1}.
  std::optional<Diagonal> try_make(int a, int b) const;
  // Throws std::invalid_argument naming the degenerate pair.
  Diagonal make(int a, int b) const;

  bool crossing(const Diagonal& x, const Diagonal& y) const;
  Diagonal suspend(const Diagonal& x) const;
  Diagonal suspend_inverse(const Diagonal& x) const;
  Diagonal suspend(const Diagonal& x, int times) const;

  // dim C(x, y) by the crossing rule: x crosses suspend_inverse(y).
  int hom_dim(const Diagonal& x, const Diagonal& y) const;

  ARMesh ar_mesh(const Diagonal& c) const;
  // Irreducible morphisms: {i,j} -> {i,j+1} and {i,j} -> {i+1,j}.
  std::vector<std::pair<Diagonal, Diagonal>> arrows() const;

  // Throws std::invalid_argument if t is not in T or T is not a triangulation.
  ExchangePair exchange_pair(const Diagonal& t, const DiagonalSet& triangulation) const;

  std::optional<Violation> validate_rigid(const DiagonalSet& rigid) const;
  std::optional<Violation> validate_cluster_tilting(const DiagonalSet& tilting,
                                                    const DiagonalSet& rigid) const;

 private:
  // Whether v lies strictly inside the anticlockwise arc from a to b.
  bool strictly_between(int a, int v, int b) const;
  bool is_side(int a, int b, const DiagonalSet& triangulation) const;

  int m_;
  std::vector<Diagonal> objects_;
};

}  // namespace ccfrieze
