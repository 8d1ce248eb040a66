#include "ccfrieze/mesh_engine.hpp"

#include <sstream>
#include <stdexcept>

namespace ccfrieze {

using linalg::Matrix;

MeshEngine::MeshEngine(Polygon polygon) : polygon_(std::move(polygon)) {
  const auto& objs = polygon_.objects();
  incoming_.resize(objs.size());
  for (const auto& [from, to] : polygon_.arrows()) {
    int id = static_cast<int>(arrows_.size());
    arrows_.emplace_back(idx(from), idx(to));
    incoming_[idx(to)].push_back(id);
    arrow_id_[{idx(from), idx(to)}] = id;
  }
  knits_.resize(objs.size());
  for (std::size_t x = 0; x < objs.size(); ++x) knit_from(x);
}

void MeshEngine::knit_from(std::size_t source) {
  const auto& objs = polygon_.objects();
  const std::size_t n = objs.size();
  Knit& k = knits_[source];
  k.degree.assign(n, -1);
  k.path.assign(n, {});

  Level zero;
  zero.dim.assign(n, 0);
  zero.dim[source] = 1;
  zero.arrow_map.resize(arrows_.size());
  k.levels.push_back(std::move(zero));

  const std::size_t max_levels = 4 * static_cast<std::size_t>(polygon_.size()) + 4;
  for (std::size_t l = 1;; ++l) {
    if (l > max_levels) throw std::logic_error("knitting did not terminate");
    const Level& prev = k.levels[l - 1];
    Level cur;
    cur.dim.assign(n, 0);
    cur.arrow_map.resize(arrows_.size());
    bool any = false;
    for (std::size_t y = 0; y < n; ++y) {
      // Generators: (+) over incoming arrows b -> y of Hom_{l-1}(x, b).
      std::vector<std::size_t> offset;
      std::size_t gens = 0;
      for (int a : incoming_[y]) {
        offset.push_back(gens);
        gens += static_cast<std::size_t>(prev.dim[arrows_[a].first]);
      }
      // Relations: the mesh ending at y applied to Hom_{l-2}(x, tau y).
      Matrix rel(gens, 0);
      if (l >= 2) {
        const Level& pp = k.levels[l - 2];
        std::size_t ty = idx(polygon_.suspend(objs[y]));
        std::size_t cols = static_cast<std::size_t>(pp.dim[ty]);
        rel = Matrix(gens, cols);
        for (std::size_t slot = 0; slot < incoming_[y].size(); ++slot) {
          std::size_t b = arrows_[incoming_[y][slot]].first;
          const Matrix& into_b = prev.arrow_map[arrow_id_.at({ty, b})];
          for (std::size_t r = 0; r < into_b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) rel(offset[slot] + r, c) = into_b(r, c);
        }
      }
      Matrix proj = linalg::cokernel_projection(rel);
      cur.dim[y] = static_cast<int>(proj.rows());
      for (std::size_t slot = 0; slot < incoming_[y].size(); ++slot) {
        int a = incoming_[y][slot];
        std::size_t b = arrows_[a].first;
        cur.arrow_map[a] = proj.column_block(offset[slot], static_cast<std::size_t>(prev.dim[b]));
      }
      if (cur.dim[y] > 0) any = true;
    }
    if (!any) break;
    k.levels.push_back(std::move(cur));
  }

  for (std::size_t l = 0; l < k.levels.size(); ++l)
    for (std::size_t y = 0; y < n; ++y) {
      int d = k.levels[l].dim[y];
      if (d == 0) continue;
      if (d > 1 || k.degree[y] != -1)
        throw std::logic_error("Hom(" + objs[source].to_string() + ", " + objs[y].to_string() +
                               ") has dimension >= 2 in the mesh category");
      k.degree[y] = static_cast<int>(l);
    }

  // Basis paths: walk back from each nonzero Hom_l(x, y) through an incoming
  // arrow whose induced map hits the previous basis path's image.
  for (std::size_t y = 0; y < n; ++y) {
    if (k.degree[y] <= 0) continue;
    std::vector<int> rev;
    std::size_t cur = y;
    for (int l = k.degree[y]; l > 0; --l) {
      int chosen = -1;
      for (int a : incoming_[cur]) {
        std::size_t b = arrows_[a].first;
        if (k.levels[l - 1].dim[b] == 1 && !k.levels[l].arrow_map[a].is_zero()) {
          chosen = a;
          break;
        }
      }
      if (chosen < 0) throw std::logic_error("no basis path in knitting");
      rev.push_back(chosen);
      cur = arrows_[chosen].first;
    }
    if (cur != source) throw std::logic_error("basis path does not start at the source");
    k.path[y].assign(rev.rbegin(), rev.rend());
  }
}

Matrix MeshEngine::push(std::size_t source, const std::vector<int>& arrow_ids) const {
  const Knit& k = knits_[source];
  Matrix v(1, 1);
  v(0, 0) = 1;
  for (std::size_t step = 0; step < arrow_ids.size(); ++step) {
    std::size_t l = step + 1;
    if (l >= k.levels.size()) return Matrix(0, 1);
    const Matrix& f = k.levels[l].arrow_map[arrow_ids[step]];
    if (f.cols() != v.rows()) return Matrix(0, 1);
    v = f * v;
    if (v.rows() == 0) return v;
  }
  return v;
}

int MeshEngine::hom_degree(const Diagonal& x, const Diagonal& y) const {
  return knits_[idx(x)].degree[idx(y)];
}

int MeshEngine::hom_dim(const Diagonal& x, const Diagonal& y) const {
  return hom_degree(x, y) >= 0 ? 1 : 0;
}

std::vector<Diagonal> MeshEngine::basis_path(const Diagonal& x, const Diagonal& y) const {
  if (hom_dim(x, y) == 0)
    throw std::invalid_argument("Hom(" + x.to_string() + ", " + y.to_string() + ") is zero");
  std::vector<Diagonal> out{x};
  for (int a : knits_[idx(x)].path[idx(y)]) out.push_back(polygon_.objects()[arrows_[a].second]);
  return out;
}

Rational MeshEngine::compose(const Diagonal& x, const Diagonal& y, const Diagonal& z) const {
  if (hom_dim(x, y) == 0 || hom_dim(y, z) == 0)
    throw std::invalid_argument("composite " + x.to_string() + " -> " + y.to_string() + " -> " +
                                z.to_string() + " has a zero factor");
  if (hom_dim(x, z) == 0) return 0;
  const std::size_t sx = idx(x), sy = idx(y), sz = idx(z);
  std::vector<int> route = knits_[sx].path[sy];
  const auto& tail = knits_[sy].path[sz];
  route.insert(route.end(), tail.begin(), tail.end());
  if (static_cast<int>(route.size()) != knits_[sx].degree[sz]) return 0;
  Matrix v = push(sx, route);
  Matrix w = push(sx, knits_[sx].path[sz]);
  if (v.rows() != 1 || w.rows() != 1 || w(0, 0) == 0) throw std::logic_error("inconsistent basis vectors");
  return v(0, 0) / w(0, 0);
}

bool MeshEngine::composite_nonzero(const Diagonal& x, const Diagonal& y, const Diagonal& z) const {
  return compose(x, y, z) != 0;
}

std::string MeshEngine::hom_matrix_csv() const {
  const auto& objs = polygon_.objects();
  std::ostringstream os;
  os << "source";
  for (const auto& d : objs) os << ",\"" << d.to_string() << '"';
  os << '\n';
  for (const auto& x : objs) {
    os << '"' << x.to_string() << '"';
    for (const auto& y : objs) os << ',' << hom_dim(x, y);
    os << '\n';
  }
  return os.str();
}

}  // namespace ccfrieze
