#include "ccfrieze/ktheory.hpp"

#include "ccfrieze/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ccfrieze {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in normal form");
  return r;
}

std::size_t position(const DiagonalSet& set, const Diagonal& d) {
  auto it = std::lower_bound(set.begin(), set.end(), d);
  if (it == set.end() || *it != d) throw std::invalid_argument(d.to_string() + " is not in the subcategory");
  return static_cast<std::size_t>(it - set.begin());
}

}  // namespace

K0Class unit_class(const DiagonalSet& tilting, const Diagonal& t) {
  K0Class x(tilting.size(), 0);
  x[position(tilting, t)] = 1;
  return x;
}

K0Class operator+(K0Class a, const K0Class& b) {
  if (a.size() != b.size()) throw std::invalid_argument("K0 class length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

K0Class operator-(K0Class a) {
  for (auto& x : a) x = -x;
  return a;
}

K0Class operator-(K0Class a, const K0Class& b) { return std::move(a) + (-b); }

K0Class operator*(std::int64_t k, K0Class a) {
  for (auto& x : a) x = checked_mul(k, x);
  return a;
}

std::string to_string(const K0Class& x, const DiagonalSet& tilting) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    std::string gen = "[" + std::to_string(tilting[k].i) + "," + std::to_string(tilting[k].j) + "]";
    if (x[k] < 0)
      out += out.empty() ? "-" : " - ";
    else if (!out.empty())
      out += " + ";
    if (std::abs(x[k]) != 1) out += std::to_string(std::abs(x[k]));
    out += gen;
  }
  return out.empty() ? "0" : out;
}

K0Class theta_bar(const Polygon& poly, const DiagonalSet& tilting, const Diagonal& t) {
  ExchangePair ex = poly.exchange_pair(t, tilting);
  K0Class x(tilting.size(), 0);
  for (const auto& d : ex.a) x[position(tilting, d)] += 1;
  for (const auto& d : ex.a_prime) x[position(tilting, d)] -= 1;
  return x;
}

K0Class theta_bar(const Polygon& poly, const DiagonalSet& tilting, const FlClass& e) {
  if (e.size() != tilting.size()) throw std::invalid_argument("class over fl T has wrong length");
  K0Class x(tilting.size(), 0);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0) x = x + static_cast<std::int64_t>(e[k]) * theta_bar(poly, tilting, tilting[k]);
  return x;
}

FlClass gbar_class(const Polygon& poly, const DiagonalSet& tilting, const Diagonal& c) {
  FlClass e(tilting.size(), 0);
  for (std::size_t k = 0; k < tilting.size(); ++k)
    if (poly.crossing(tilting[k], c)) e[k] = 1;
  return e;
}

std::vector<K0Class> subgroup_N(const Polygon& poly, const DiagonalSet& rigid, const DiagonalSet& tilting) {
  if (auto v = poly.validate_rigid(rigid)) throw std::invalid_argument("R: " + v->message);
  if (auto v = poly.validate_cluster_tilting(tilting, rigid)) throw std::invalid_argument("T: " + v->message);
  std::vector<K0Class> gens;
  for (const auto& s : tilting)
    if (!contains(rigid, s)) gens.push_back(theta_bar(poly, tilting, s));
  return gens;
}

// --------------------------------------------------------------------------
// Smith normal form

bool QuotientCoords::is_zero() const {
  return std::all_of(free.begin(), free.end(), [](auto v) { return v == 0; }) &&
         std::all_of(torsion.begin(), torsion.end(), [](auto v) { return v == 0; });
}

namespace {

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = checked_sub(m[dst][j], checked_mul(k, m[src][j]));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (auto& row : m) row[dst] = checked_sub(row[dst], checked_mul(k, row[src]));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

std::vector<std::int64_t> mat_vec(const IntMatrix& m, const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += checked_mul(m[i][j], x[j]);
  return y;
}

}  // namespace

QuotientPresentation quotient_presentation(const std::vector<K0Class>& generators, std::size_t ambient_rank) {
  const std::size_t rows = ambient_rank, cols = generators.size();
  QuotientPresentation q;
  q.ambient_rank = ambient_rank;
  q.relations.assign(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    if (generators[j].size() != rows) throw std::invalid_argument("generator has wrong length");
    for (std::size_t i = 0; i < rows; ++i) q.relations[i][j] = generators[j][i];
  }

  IntMatrix d = q.relations;
  IntMatrix u = identity(rows), v = identity(cols);
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: the entry of least absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (pi == rows || std::abs(d[i][j]) < std::abs(d[pi][pj]))) pi = i, pj = j;
      if (pi == rows) break;
      std::swap(d[t], d[pi]);
      std::swap(u[t], u[pi]);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t k = d[i][t] / d[t][t];
        if (k) add_row(d, i, t, k), add_row(u, i, t, k);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t k = d[t][j] / d[t][t];
        if (k) add_col(d, j, t, k), add_col(v, j, t, k);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            add_row(d, t, i, -1);
            add_row(u, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[t][t] == 0) break;
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
    q.invariant_factors.push_back(d[t][t]);
  }
  q.U = std::move(u);
  q.V = std::move(v);
  q.free_rank = rows - q.invariant_factors.size();
  for (auto f : q.invariant_factors)
    if (f > 1) q.torsion_invariants.push_back(f);
  return q;
}

QuotientCoords QuotientPresentation::project(const K0Class& x) const {
  if (x.size() != ambient_rank) throw std::invalid_argument("class has wrong length for the quotient");
  auto y = mat_vec(U, x);
  QuotientCoords c;
  for (std::size_t k = 0; k < invariant_factors.size(); ++k) {
    std::int64_t f = invariant_factors[k];
    if (f > 1) c.torsion.push_back(((y[k] % f) + f) % f);
  }
  for (std::size_t k = invariant_factors.size(); k < ambient_rank; ++k) c.free.push_back(y[k]);
  return c;
}

std::vector<std::int64_t> QuotientPresentation::free_part(const K0Class& x) const { return project(x).free; }

// --------------------------------------------------------------------------

FlClass kappa(const FlClass& e_over_tilting, const DiagonalSet& tilting, const DiagonalSet& rigid) {
  if (e_over_tilting.size() != tilting.size()) throw std::invalid_argument("class over fl T has wrong length");
  FlClass out(rigid.size(), 0);
  for (std::size_t k = 0; k < rigid.size(); ++k) out[k] = e_over_tilting[position(tilting, rigid[k])];
  return out;
}

FlClass kappa_lift(const FlClass& e_over_rigid, const DiagonalSet& tilting, const DiagonalSet& rigid) {
  if (e_over_rigid.size() != rigid.size()) throw std::invalid_argument("class over fl R has wrong length");
  FlClass out(tilting.size(), 0);
  for (std::size_t k = 0; k < rigid.size(); ++k) out[position(tilting, rigid[k])] = e_over_rigid[k];
  return out;
}

QuotientCoords theta(const Polygon& poly, const DiagonalSet& rigid, const DiagonalSet& tilting,
                     const QuotientPresentation& q, const FlClass& e_over_rigid) {
  FlClass lift = kappa_lift(e_over_rigid, tilting, rigid);
  QuotientCoords value = q.project(theta_bar(poly, tilting, lift));
  // A second preimage differing by every simple outside R.
  FlClass other = lift;
  for (std::size_t k = 0; k < tilting.size(); ++k)
    if (!contains(rigid, tilting[k])) other[k] += 1;
  if (!(q.project(theta_bar(poly, tilting, other)) == value))
    throw std::logic_error("theta depends on the choice of kappa-preimage");
  return value;
}

// --------------------------------------------------------------------------
// Index

std::map<Diagonal, K0Class> solve_index(const Polygon& poly, const DiagonalSet& tilting) {
  if (auto v = poly.validate_cluster_tilting(tilting, {})) throw std::invalid_argument("T: " + v->message);
  const auto& objs = poly.objects();
  const std::size_t n = objs.size();
  std::vector<std::optional<K0Class>> ind(n);

  std::vector<K0Class> orbit_rhs(n), mesh_rhs(n);  // -theta_bar(Gbar c), and the mesh value
  for (std::size_t k = 0; k < n; ++k) {
    const Diagonal& c = objs[k];
    orbit_rhs[k] = -theta_bar(poly, tilting, gbar_class(poly, tilting, c));
    mesh_rhs[k] = contains(tilting, c) ? theta_bar(poly, tilting, c) : orbit_rhs[k];
  }

  for (const auto& t : tilting) {
    ind[poly.index_of(t)] = unit_class(tilting, t);
    ind[poly.index_of(poly.suspend(t))] = -unit_class(tilting, t);
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      const Diagonal& c = objs[k];
      const std::size_t s = poly.index_of(poly.suspend(c));
      // ind c + ind Sigma c = -theta_bar(Gbar c)
      if (ind[k] && !ind[s]) ind[s] = orbit_rhs[k] - *ind[k], changed = true;
      if (!ind[k] && ind[s]) ind[k] = orbit_rhs[k] - *ind[s], changed = true;

      // Sum of the middle terms' indices.
      ARMesh mesh = poly.ar_mesh(c);
      std::vector<std::size_t> unknown;
      K0Class known(tilting.size(), 0);
      for (const auto& b : mesh.middles) {
        std::size_t bi = poly.index_of(b);
        if (ind[bi])
          known = known + *ind[bi];
        else
          unknown.push_back(bi);
      }
      if (unknown.size() == 1) {
        ind[unknown[0]] = mesh_rhs[k] - known;
        changed = true;
      }
    }
  }

  std::map<Diagonal, K0Class> table;
  for (std::size_t k = 0; k < n; ++k) {
    if (!ind[k]) throw IndexError("index propagation did not reach " + objs[k].to_string());
    table.emplace(objs[k], *ind[k]);
  }
  return table;
}

std::vector<std::string> check_index_identities(const Polygon& poly, const DiagonalSet& tilting,
                                                const std::map<Diagonal, K0Class>& index) {
  std::vector<std::string> failures;
  for (const auto& c : poly.objects()) {
    const K0Class tb = theta_bar(poly, tilting, gbar_class(poly, tilting, c));
    const K0Class& ic = index.at(c);
    const K0Class& is = index.at(poly.suspend(c));
    if (tb != -(ic + is)) failures.push_back("orbit identity fails at " + c.to_string());

    ARMesh mesh = poly.ar_mesh(c);
    K0Class ib(tilting.size(), 0);
    for (const auto& b : mesh.middles) ib = ib + index.at(b);
    const K0Class expected = contains(tilting, c) ? theta_bar(poly, tilting, c) : -tb;
    if (ib != expected) failures.push_back("mesh identity fails at " + c.to_string());
  }
  return failures;
}

// --------------------------------------------------------------------------
// Epsilon

Epsilon::Epsilon(VarTablePtr vars, DiagonalSet tilting, std::vector<LaurentPoly> images)
    : vars_(std::move(vars)), tilting_(std::move(tilting)), images_(std::move(images)) {
  if (images_.size() != tilting_.size()) throw std::invalid_argument("one epsilon image per member of T");
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (!images_[k].is_unit())
      throw EpsilonError("epsilon image of " + tilting_[k].to_string() + " is not a unit: " + images_[k].to_string());
}

const LaurentPoly& Epsilon::image(const Diagonal& t) const { return images_.at(position(tilting_, t)); }

LaurentPoly Epsilon::apply(const K0Class& x) const {
  if (x.size() != images_.size()) throw std::invalid_argument("class has wrong length for epsilon");
  Monomial e(vars_->size(), 0);
  bool negative = false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    const auto& [exps, coeff] = *images_[k].terms().begin();
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += static_cast<int>(x[k]) * exps[v];
    if (coeff < 0 && (x[k] % 2 != 0)) negative = !negative;
  }
  return LaurentPoly::monomial(vars_, e, negative ? -1 : 1);
}

Epsilon epsilon_from_assignment(const std::map<Diagonal, LaurentPoly>& images, const DiagonalSet& tilting,
                                const std::vector<K0Class>& n_generators) {
  if (images.empty()) throw EpsilonError("empty epsilon assignment");
  VarTablePtr vars = images.begin()->second.vars_ptr();
  std::vector<LaurentPoly> ordered;
  for (const auto& t : tilting) {
    auto it = images.find(t);
    if (it == images.end()) throw EpsilonError("no epsilon image for " + t.to_string());
    ordered.push_back(it->second);
  }
  for (const auto& [d, img] : images)
    if (!contains(tilting, d)) throw EpsilonError("epsilon image given for " + d.to_string() + ", which is not in T");
  Epsilon eps(vars, tilting, std::move(ordered));
  for (const auto& g : n_generators) {
    LaurentPoly v = eps.apply(g);
    if (!v.equals_constant(1))
      throw EpsilonError("epsilon is not well defined on the quotient: generator " + to_string(g, tilting) +
                         " of N maps to " + v.to_string());
  }
  return eps;
}

namespace {

// Integer inverse of a unimodular matrix, or nullopt.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& b) {
  const std::size_t n = b.size();
  linalg::Matrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = b[i][j];
    m(i, n + i) = 1;
  }
  if (linalg::rank(m.column_block(0, n)) != n) return std::nullopt;
  // Invert by solving B X = I column by column via the null space of [B | -e_j].
  IntMatrix inv(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    linalg::Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) aug(i, k) = b[i][k];
      aug(i, n) = (i == j) ? -1 : 0;
    }
    linalg::Matrix ns = linalg::null_space(aug);
    if (ns.cols() != 1 || ns(n, 0) == 0) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = ns(i, 0) / ns(n, 0);
      if (denominator(x) != 1) return std::nullopt;
      inv[i][j] = numerator(x).convert_to<std::int64_t>();
    }
  }
  return inv;
}

}  // namespace

Epsilon default_epsilon(const QuotientPresentation& q, VarTablePtr vars, const DiagonalSet& tilting,
                        const DiagonalSet& rigid) {
  if (vars->size() != q.free_rank)
    throw EpsilonError("need " + std::to_string(q.free_rank) + " variable names for the free quotient, got " +
                       std::to_string(vars->size()));
  const std::size_t n = tilting.size(), f = q.free_rank;

  std::vector<std::vector<std::int64_t>> free_of(n);
  for (std::size_t k = 0; k < n; ++k) free_of[k] = q.free_part(unit_class(tilting, tilting[k]));

  // Change of basis on the free part: coordinates g = B^{-1} (free coords),
  // where the columns of B are the free parts of the chosen [t].
  IntMatrix change = identity(f);
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < n; ++k)
    if (!contains(rigid, tilting[k])) order.push_back(k);
  for (std::size_t k = 0; k < n; ++k)
    if (contains(rigid, tilting[k])) order.push_back(k);
  if (f > 0 && f <= n) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(f), true);
    do {
      IntMatrix b(f, std::vector<std::int64_t>(f, 0));
      std::size_t col = 0;
      for (std::size_t p = 0; p < n; ++p)
        if (pick[p]) {
          for (std::size_t r = 0; r < f; ++r) b[r][col] = free_of[order[p]][r];
          ++col;
        }
      if (auto inv = unimodular_inverse(b)) {
        change = *inv;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  std::vector<LaurentPoly> images;
  for (std::size_t k = 0; k < n; ++k) {
    Monomial e(f, 0);
    auto g = mat_vec(change, free_of[k]);
    for (std::size_t r = 0; r < f; ++r) e[r] = static_cast<int>(g[r]);
    images.push_back(LaurentPoly::monomial(vars, e, 1));
  }
  Epsilon eps(vars, tilting, std::move(images));
  if (!q.torsion_invariants.empty()) {
    std::ostringstream os;
    os << "quotient has torsion (invariant factors";
    for (auto d : q.torsion_invariants) os << ' ' << d;
    os << "); torsion part sent to 1";
    eps.warnings.push_back(os.str());
  }
  return eps;
}

}  // namespace ccfrieze
