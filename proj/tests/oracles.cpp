#include "oracles.hpp"

#include <functional>

namespace oracle {

Rep zero_rep(const MeshEngine& engine, const std::vector<Diagonal>& base) {
  Rep rep;
  rep.dim.assign(base.size(), 0);
  for (std::size_t k = 0; k < base.size(); ++k)
    for (std::size_t k2 = 0; k2 < base.size(); ++k2)
      if (engine.hom_dim(base[k2], base[k]) != 0)
        rep.action[{static_cast<int>(k), static_cast<int>(k2)}] = linalg::Matrix(0, 0);
  return rep;
}

Rep rep_of_G(const MeshEngine& engine, const Diagonal& c, const std::vector<Diagonal>& base) {
  const Diagonal target = engine.polygon().suspend(c);
  Rep rep = zero_rep(engine, base);
  for (std::size_t k = 0; k < base.size(); ++k) rep.dim[k] = engine.hom_dim(base[k], target);
  for (auto& [key, mat] : rep.action) {
    auto [k, k2] = key;
    mat = linalg::Matrix(rep.dim[k2], rep.dim[k]);
    if (rep.dim[k] && rep.dim[k2]) mat(0, 0) = engine.compose(base[k2], base[k], target);
  }
  return rep;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  Rep out;
  for (std::size_t k = 0; k < a.dim.size(); ++k) out.dim.push_back(a.dim[k] + b.dim[k]);
  for (const auto& [key, ma] : a.action) {
    const auto& mb = b.action.at(key);
    linalg::Matrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (std::size_t r = 0; r < ma.rows(); ++r)
      for (std::size_t c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
    for (std::size_t r = 0; r < mb.rows(); ++r)
      for (std::size_t c = 0; c < mb.cols(); ++c) m(ma.rows() + r, ma.cols() + c) = mb(r, c);
    out.action[key] = m;
  }
  return out;
}

std::map<FlClass, std::uint64_t> brute_force_submodules(const Rep& rep) {
  const std::size_t n = rep.dim.size();
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < n; ++k) {
    if (rep.dim[k] > 1) throw std::logic_error("brute force expects thin representations");
    if (rep.dim[k] == 1) live.push_back(k);
  }
  std::map<FlClass, std::uint64_t> counts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << live.size()); ++mask) {
    // W(k) is the whole line when selected, 0 otherwise
    std::vector<int> w(n, 0);
    for (std::size_t b = 0; b < live.size(); ++b)
      if ((mask >> b) & 1U) w[live[b]] = 1;
    bool invariant = true;
    for (const auto& [key, mat] : rep.action) {
      auto [k, k2] = key;
      if (!w[k] || w[k2] || mat.rows() == 0 || mat.cols() == 0) continue;
      // image of the line W(k) must lie in W(k2) = 0
      if (mat(0, 0) != 0) invariant = false;
    }
    if (!invariant) continue;
    counts[FlClass(w.begin(), w.end())]++;
  }
  return counts;
}

bool isomorphic_random(const Rep& a, const Rep& b, std::mt19937_64& rng) {
  if (a.dim != b.dim) return false;
  const std::size_t n = a.dim.size();
  // unknowns: the entries of phi_k : A(k) -> B(k), row-major, concatenated
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) offset[k + 1] = offset[k] + a.dim[k] * b.dim[k];
  const std::size_t unknowns = offset[n];
  if (unknowns == 0) return true;

  std::vector<std::vector<Rational>> eqs;
  for (const auto& [key, ma] : a.action) {
    auto [k, k2] = key;
    const auto& mb = b.action.at(key);
    // phi_k2 * A(g) - B(g) * phi_k = 0, a matrix of size b.dim[k2] x a.dim[k]
    for (std::size_t r = 0; r < b.dim[k2]; ++r) {
      for (std::size_t c = 0; c < a.dim[k]; ++c) {
        std::vector<Rational> row(unknowns);
        for (std::size_t s = 0; s < a.dim[k2]; ++s) row[offset[k2] + r * a.dim[k2] + s] += ma(s, c);
        for (std::size_t s = 0; s < b.dim[k]; ++s) row[offset[k] + s * a.dim[k] + c] -= mb(r, s);
        eqs.push_back(std::move(row));
      }
    }
  }
  linalg::Matrix sys(eqs.size(), unknowns);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys(r, c) = eqs[r][c];
  linalg::Matrix basis = eqs.empty() ? linalg::Matrix::identity(unknowns) : linalg::null_space(sys);
  if (basis.cols() == 0) return false;

  std::uniform_int_distribution<int> coef(-1000, 1000);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> phi(unknowns);
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      Rational t = coef(rng);
      for (std::size_t u = 0; u < unknowns; ++u) phi[u] += t * basis(u, j);
    }
    bool all = true;
    for (std::size_t k = 0; k < n && all; ++k) {
      linalg::Matrix block(b.dim[k], a.dim[k]);
      for (std::size_t r = 0; r < b.dim[k]; ++r)
        for (std::size_t c = 0; c < a.dim[k]; ++c) block(r, c) = phi[offset[k] + r * a.dim[k] + c];
      all = linalg::is_invertible(block);
    }
    if (all) return true;
  }
  return false;
}

DiagonalSet random_triangulation(const Polygon& poly, std::mt19937_64& rng) {
  std::vector<Diagonal> out;
  // triangulate the sub-polygon on the vertices a..b (a < b) with side {a,b}
  std::function<void(int, int)> split = [&](int a, int b) {
    if (b - a < 2) return;
    int k = std::uniform_int_distribution<int>(a + 1, b - 1)(rng);
    if (auto d = poly.try_make(a, k)) out.push_back(*d);
    if (auto d = poly.try_make(k, b)) out.push_back(*d);
    split(a, k);
    split(k, b);
  };
  split(1, poly.size());
  return make_set(out);
}

std::pair<DiagonalSet, DiagonalSet> random_config(const Polygon& poly, std::mt19937_64& rng) {
  DiagonalSet t = random_triangulation(poly, rng);
  std::vector<Diagonal> r;
  for (const auto& d : t)
    if (rng() % 2) r.push_back(d);
  return {make_set(r), t};
}

}  // namespace oracle
