// Integer K-theory attached to a triangulation T and a rigid R inside it.
//
// Classes in the split Grothendieck group of T are integer vectors indexed
// by the (sorted) diagonals of T.  Classes over fl T and fl R are FlClass
// vectors indexed the same way by T, respectively R.
#pragma once

#include "ccfrieze/fl_modules.hpp"
#include "ccfrieze/laurent.hpp"
#include "ccfrieze/polygon.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccfrieze {

using K0Class = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;  // row-major

K0Class unit_class(const DiagonalSet& tilting, const Diagonal& t);
K0Class operator+(K0Class a, const K0Class& b);
K0Class operator-(K0Class a, const K0Class& b);
K0Class operator-(K0Class a);
K0Class operator*(std::int64_t k, K0Class a);
std::string to_string(const K0Class& x, const DiagonalSet& tilting);

// [a] - [a'] from the exchange triangles of t in T.
K0Class theta_bar(const Polygon& poly, const DiagonalSet& tilting, const Diagonal& t);
// Additive extension to a class over fl T.
K0Class theta_bar(const Polygon& poly, const DiagonalSet& tilting, const FlClass& e);

// Class of  C(-, Sigma c)|_T : the simples at the members of T crossing c.
FlClass gbar_class(const Polygon& poly, const DiagonalSet& tilting, const Diagonal& c);

// Generators theta_bar(s) for s in T \ R; throws on invalid (R, T).
std::vector<K0Class> subgroup_N(const Polygon& poly, const DiagonalSet& rigid, const DiagonalSet& tilting);

// Coordinates of a class in  Z^|T| / N  ~  Z^free (+) (+)_i Z/d_i.
struct QuotientCoords {
  std::vector<std::int64_t> free;
  std::vector<std::int64_t> torsion;  // reduced into [0, d_i)
  bool operator==(const QuotientCoords&) const = default;
  bool is_zero() const;
};

// Smith normal form  D = U A V  of the relation matrix A (columns = generators).
struct QuotientPresentation {
  IntMatrix relations;
  IntMatrix U, V;
  std::vector<std::int64_t> invariant_factors;  // nonzero diagonal of D
  std::size_t ambient_rank = 0;
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion_invariants;  // the factors > 1

  QuotientCoords project(const K0Class& x) const;
  // Free coordinates only: (U x) restricted to the free rows.
  std::vector<std::int64_t> free_part(const K0Class& x) const;
  bool same_class(const K0Class& a, const K0Class& b) const { return project(a - b).is_zero(); }
};

QuotientPresentation quotient_presentation(const std::vector<K0Class>& generators, std::size_t ambient_rank);

// Keep the R-coordinates of a class over T.
FlClass kappa(const FlClass& e_over_tilting, const DiagonalSet& tilting, const DiagonalSet& rigid);
// The kappa-preimage supported on R.
FlClass kappa_lift(const FlClass& e_over_rigid, const DiagonalSet& tilting, const DiagonalSet& rigid);

// theta(e) = Q(theta_bar(lift)), checked against a second preimage.
QuotientCoords theta(const Polygon& poly, const DiagonalSet& rigid, const DiagonalSet& tilting,
                     const QuotientPresentation& q, const FlClass& e_over_rigid);

class IndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index of every diagonal with respect to T, by propagating the seeds
// ind t = [t], ind Sigma t = -[t] through the orbit identity
//   theta_bar([Gbar c]) = -(ind c + ind Sigma c)
// and the mesh identity for AR triangles Sigma c -> b -> c
//   ind b = -theta_bar([Gbar c])  (c not in T),  theta_bar([S_t])  (c = t in T).
// Throws IndexError if some orbit is never reached.
std::map<Diagonal, K0Class> solve_index(const Polygon& poly, const DiagonalSet& tilting);

// Re-checks both identities for every object and every mesh; returns the
// list of failures (empty when consistent).
std::vector<std::string> check_index_identities(const Polygon& poly, const DiagonalSet& tilting,
                                                const std::map<Diagonal, K0Class>& index);

class EpsilonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponential map  K0split(T)/N -> Laurent units, stored by its values on
// the basis classes [t].
class Epsilon {
 public:
  Epsilon(VarTablePtr vars, DiagonalSet tilting, std::vector<LaurentPoly> images);

  const VarTablePtr& vars() const { return vars_; }
  const DiagonalSet& tilting() const { return tilting_; }
  const LaurentPoly& image(const Diagonal& t) const;
  const std::vector<LaurentPoly>& images() const { return images_; }

  LaurentPoly apply(const K0Class& x) const;

  std::vector<std::string> warnings;

 private:
  VarTablePtr vars_;
  DiagonalSet tilting_;
  std::vector<LaurentPoly> images_;  // signed monomials, one per t
};

// Throws EpsilonError if an image is not a unit or some generator of N is
// not sent to 1; the message names the offending generator.
Epsilon epsilon_from_assignment(const std::map<Diagonal, LaurentPoly>& images, const DiagonalSet& tilting,
                                const std::vector<K0Class>& n_generators);

// Free basis of the quotient -> the given variables; torsion -> 1.  When
// possible the free basis is taken to be classes [t] + N, preferring t
// outside R, so that epsilon([t]) is a single variable.
Epsilon default_epsilon(const QuotientPresentation& q, VarTablePtr vars, const DiagonalSet& tilting,
                        const DiagonalSet& rigid);

}  // namespace ccfrieze
