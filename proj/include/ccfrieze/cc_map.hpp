// The modified Caldero-Chapoton map
//
//   rho(c) = alpha(c) * sum_e chi(Gr_e(G c)) * beta(e),
//   alpha(c) = epsilon Q(ind c),   beta(e) = epsilon theta(e),
//
// on the polygon model, together with the generalised-frieze verifier.
#pragma once

#include "ccfrieze/fl_modules.hpp"
#include "ccfrieze/ktheory.hpp"
#include "ccfrieze/laurent.hpp"
#include "ccfrieze/mesh_engine.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ccfrieze {

enum class Mode { Modified, Original, Integer };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

// Shared, lazily built engine per polygon size.
std::shared_ptr<const MeshEngine> mesh_engine_for(int m);

struct MeshReport {
  ARMesh mesh;
  LaurentPoly defect;
  MeshImageClass classification;
  bool agrees;  // defect is 0 on split meshes and 1 on all others
};

struct FriezeReport {
  std::vector<MeshReport> meshes;  // ordered by end diagonal
  bool pass = true;

  std::vector<Diagonal> defect_one_ends() const;
  std::string to_text() const;
};

class CCContext {
 public:
  CCContext(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting, Epsilon epsilon,
            Mode mode = Mode::Modified);

  // Explicit epsilon: images given as Laurent text over var_names (inferred
  // from the images, sorted, when var_names is empty).
  static CCContext modified(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting,
                            const std::map<Diagonal, std::string>& images, std::vector<std::string> var_names = {});
  // Free part of the quotient sent to fresh variables (x1, x2, ... by default).
  static CCContext modified_auto(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting,
                                 std::vector<std::string> var_names = {});
  // R = T and epsilon([t]) = x_t.  Missing names default to x1, x2, ... in T order.
  static CCContext original(std::shared_ptr<const MeshEngine> engine, DiagonalSet tilting,
                            const std::map<Diagonal, std::string>& names = {});
  // epsilon = 1, so alpha = beta = 1 and rho counts submodules.
  static CCContext integer(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting);

  const Polygon& polygon() const { return engine_->polygon(); }
  const MeshEngine& engine() const { return *engine_; }
  const DiagonalSet& rigid() const { return rigid_; }
  const DiagonalSet& tilting() const { return tilting_; }
  Mode mode() const { return mode_; }
  const Epsilon& epsilon() const { return epsilon_; }
  const VarTablePtr& vars() const { return epsilon_.vars(); }
  const std::vector<K0Class>& n_generators() const { return n_generators_; }
  const QuotientPresentation& quotient() const { return quotient_; }
  const std::map<Diagonal, K0Class>& index_table() const { return index_; }
  const K0Class& index(const Diagonal& c) const { return index_.at(c); }
  const ThinModule& G(const Diagonal& c) const;
  std::vector<std::string> warnings() const { return epsilon_.warnings; }

  LaurentPoly one() const { return LaurentPoly::constant(vars(), 1); }

  LaurentPoly alpha(const Diagonal& c) const;
  LaurentPoly alpha(const std::vector<Diagonal>& summands) const;
  LaurentPoly beta(const FlClass& e) const;
  QuotientCoords theta(const FlClass& e) const;

  const LaurentPoly& rho_indec(const Diagonal& c) const;
  // Multiplicative over the summands; the empty list is the zero object.
  LaurentPoly rho(const std::vector<Diagonal>& summands) const;

  // rho on every indecomposable, in object order.
  const std::map<Diagonal, LaurentPoly>& values() const { return rho_; }

  FriezeReport frieze_check() const;

 private:
  std::shared_ptr<const MeshEngine> engine_;
  DiagonalSet rigid_, tilting_;
  Epsilon epsilon_;
  Mode mode_;
  std::vector<K0Class> n_generators_;
  QuotientPresentation quotient_;
  std::map<Diagonal, K0Class> index_;
  std::map<Diagonal, ThinModule> g_;
  std::map<Diagonal, LaurentPoly> rho_;
};

}  // namespace ccfrieze
