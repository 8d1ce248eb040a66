#include "ccfrieze/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccfrieze {

std::string Diagonal::to_string() const {
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::ostream& operator<<(std::ostream& os, const Diagonal& d) { return os << d.to_string(); }

DiagonalSet make_set(std::vector<Diagonal> diagonals) {
  std::sort(diagonals.begin(), diagonals.end());
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
  return diagonals;
}

bool contains(const DiagonalSet& set, const Diagonal& d) {
  return std::binary_search(set.begin(), set.end(), d);
}

Polygon::Polygon(int m) : m_(m) {
  if (m < 4) throw std::invalid_argument("polygon needs at least 4 vertices, got " + std::to_string(m));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      if (is_diagonal(i, j)) objects_.push_back({i, j});
}

std::size_t Polygon::index_of(const Diagonal& d) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), d);
  if (it == objects_.end() || *it != d)
    throw std::invalid_argument(d.to_string() + " is not a diagonal of the " + std::to_string(m_) + "-gon");
  return static_cast<std::size_t>(it - objects_.begin());
}

int Polygon::wrap(int v) const { return ((v - 1) % m_ + m_) % m_ + 1; }

bool Polygon::is_diagonal(int a, int b) const {
  a = wrap(a);
  b = wrap(b);
  if (a == b) return false;
  int d = std::abs(a - b);
  return d != 1 && d != m_ - 1;
}

std::optional<Diagonal> Polygon::try_make(int a, int b) const {
  if (!is_diagonal(a, b)) return std::nullopt;
  a = wrap(a);
  b = wrap(b);
  return Diagonal{std::min(a, b), std::max(a, b)};
}

Diagonal Polygon::make(int a, int b) const {
  if (auto d = try_make(a, b)) return *d;
  throw std::invalid_argument("degenerate diagonal {" + std::to_string(a) + "," + std::to_string(b) + "}");
}

bool Polygon::strictly_between(int a, int v, int b) const {
  int span = (b - a + m_) % m_;
  int off = (v - a + m_) % m_;
  return off > 0 && off < span;
}

bool Polygon::crossing(const Diagonal& x, const Diagonal& y) const {
  if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j) return false;
  return strictly_between(x.i, y.i, x.j) != strictly_between(x.i, y.j, x.j);
}

Diagonal Polygon::suspend(const Diagonal& x) const { return make(x.i - 1, x.j - 1); }

Diagonal Polygon::suspend_inverse(const Diagonal& x) const { return make(x.i + 1, x.j + 1); }

Diagonal Polygon::suspend(const Diagonal& x, int times) const { return make(x.i - times, x.j - times); }

int Polygon::hom_dim(const Diagonal& x, const Diagonal& y) const {
  return crossing(x, suspend_inverse(y)) ? 1 : 0;
}

ARMesh Polygon::ar_mesh(const Diagonal& c) const {
  ARMesh mesh{suspend(c), {}, c};
  for (auto mid : {try_make(c.i - 1, c.j), try_make(c.i, c.j - 1)})
    if (mid) mesh.middles.push_back(*mid);
  std::sort(mesh.middles.begin(), mesh.middles.end());
  return mesh;
}

std::vector<std::pair<Diagonal, Diagonal>> Polygon::arrows() const {
  std::vector<std::pair<Diagonal, Diagonal>> out;
  for (const auto& x : objects_) {
    for (auto target : {try_make(x.i, x.j + 1), try_make(x.i + 1, x.j)})
      if (target) out.emplace_back(x, *target);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Polygon::is_side(int a, int b, const DiagonalSet& triangulation) const {
  a = wrap(a);
  b = wrap(b);
  if (a == b) return false;
  if (!is_diagonal(a, b)) return true;  // polygon edge
  return contains(triangulation, *try_make(a, b));
}

ExchangePair Polygon::exchange_pair(const Diagonal& t, const DiagonalSet& triangulation) const {
  if (!contains(triangulation, t))
    throw std::invalid_argument(t.to_string() + " is not in the triangulation");
  if (auto v = validate_cluster_tilting(triangulation, {}))
    throw std::invalid_argument("not a triangulation: " + v->message);

  // The triangles on each side of t = {i,j}: apex k on the anticlockwise arc
  // i -> j, apex l on the arc j -> i.  Vertices i, k, j, l are anticlockwise.
  auto apex = [&](int from, int to) {
    for (int v = from + 1; wrap(v) != wrap(to); ++v)
      if (is_side(from, v, triangulation) && is_side(v, to, triangulation)) return wrap(v);
    throw std::invalid_argument("no triangle adjacent to " + t.to_string());
  };
  const int i = t.i, j = t.j;
  const int k = apex(i, j);
  const int l = apex(j, i + m_);

  ExchangePair ex{t, make(k, l), {}, {}};
  for (auto d : {try_make(i, k), try_make(j, l)})
    if (d) ex.a.push_back(*d);
  for (auto d : {try_make(i, l), try_make(j, k)})
    if (d) ex.a_prime.push_back(*d);
  std::sort(ex.a.begin(), ex.a.end());
  std::sort(ex.a_prime.begin(), ex.a_prime.end());
  return ex;
}

std::optional<Violation> Polygon::validate_rigid(const DiagonalSet& rigid) const {
  for (const auto& d : rigid)
    if (!is_diagonal(d.i, d.j) || d.i < 1 || d.j > m_ || d.i >= d.j)
      return Violation{Violation::Kind::NotInPolygon, d.to_string() + " is not a diagonal of the polygon", {}};
  for (std::size_t a = 0; a < rigid.size(); ++a)
    for (std::size_t b = a + 1; b < rigid.size(); ++b)
      if (crossing(rigid[a], rigid[b]))
        return Violation{Violation::Kind::Crossing,
                         rigid[a].to_string() + " crosses " + rigid[b].to_string(),
                         std::make_pair(rigid[a], rigid[b])};
  return std::nullopt;
}

std::optional<Violation> Polygon::validate_cluster_tilting(const DiagonalSet& tilting,
                                                           const DiagonalSet& rigid) const {
  if (auto v = validate_rigid(tilting)) return v;
  if (static_cast<int>(tilting.size()) != m_ - 3)
    return Violation{Violation::Kind::NotMaximal,
                     "not maximal: " + std::to_string(tilting.size()) + " diagonals, a triangulation of the " +
                         std::to_string(m_) + "-gon has " + std::to_string(m_ - 3),
                     {}};
  for (const auto& r : rigid)
    if (!contains(tilting, r))
      return Violation{Violation::Kind::NotContained, r.to_string() + " is in R but not in T", {}};
  return std::nullopt;
}

}  // namespace ccfrieze
