#include "ccfrieze/cc_map.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

namespace ccfrieze {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Modified: return "modified";
    case Mode::Original: return "original";
    case Mode::Integer: return "integer";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "modified") return Mode::Modified;
  if (text == "original") return Mode::Original;
  if (text == "integer") return Mode::Integer;
  throw std::invalid_argument("unknown mode '" + text + "' (expected modified, original or integer)");
}

std::shared_ptr<const MeshEngine> mesh_engine_for(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const MeshEngine>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const MeshEngine>(Polygon(m));
  return slot;
}

// --------------------------------------------------------------------------

std::vector<Diagonal> FriezeReport::defect_one_ends() const {
  std::vector<Diagonal> out;
  for (const auto& r : meshes)
    if (r.defect.equals_constant(1)) out.push_back(r.mesh.end);
  return out;
}

std::string FriezeReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : meshes) {
    os << r.mesh.start << " -> ";
    for (std::size_t k = 0; k < r.mesh.middles.size(); ++k) os << (k ? " + " : "") << r.mesh.middles[k];
    os << " -> " << r.mesh.end << "  defect " << r.defect << "  " << to_string(r.classification)
       << (r.agrees ? "" : "  MISMATCH") << '\n';
  }
  os << "defect-1 meshes: " << defect_one_ends().size() << " of " << meshes.size() << '\n';
  os << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

// --------------------------------------------------------------------------

CCContext::CCContext(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting,
                     Epsilon epsilon, Mode mode)
    : engine_(std::move(engine)),
      rigid_(make_set(std::move(rigid))),
      tilting_(make_set(std::move(tilting))),
      epsilon_(std::move(epsilon)),
      mode_(mode) {
  const Polygon& poly = engine_->polygon();
  if (auto v = poly.validate_rigid(rigid_)) throw std::invalid_argument("R is not rigid: " + v->message);
  if (auto v = poly.validate_cluster_tilting(tilting_, rigid_))
    throw std::invalid_argument("T is not cluster tilting over R: " + v->message);
  if (epsilon_.tilting() != tilting_) throw std::invalid_argument("epsilon is defined over a different T");

  n_generators_ = subgroup_N(poly, rigid_, tilting_);
  quotient_ = quotient_presentation(n_generators_, tilting_.size());
  for (const auto& g : n_generators_)
    if (!epsilon_.apply(g).equals_constant(1))
      throw EpsilonError("epsilon does not kill the generator " + to_string(g, tilting_) + " of N");

  index_ = solve_index(poly, tilting_);
  auto failures = check_index_identities(poly, tilting_, index_);
  if (!failures.empty()) throw IndexError("index table inconsistent: " + failures.front());

  std::vector<Diagonal> base(rigid_.begin(), rigid_.end());
  for (const auto& c : poly.objects()) g_.emplace(c, compute_G(*engine_, c, base));
  for (const auto& c : poly.objects()) {
    LaurentPoly sum(vars());
    for (const auto& [e, chi] : grassmannian_euler_table(g_.at(c)))
      sum += LaurentPoly::constant(vars(), chi) * beta(e);
    rho_.emplace(c, alpha(c) * sum);
  }
}

namespace {

std::vector<std::string> identifiers_in(const std::map<Diagonal, std::string>& images) {
  std::set<std::string> names;
  for (const auto& [d, text] : images) {
    for (std::size_t k = 0; k < text.size();) {
      if (std::isalpha(static_cast<unsigned char>(text[k])) || text[k] == '_') {
        std::size_t start = k;
        while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
        names.insert(text.substr(start, k - start));
      } else {
        ++k;
      }
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace

CCContext CCContext::modified(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting,
                              const std::map<Diagonal, std::string>& images, std::vector<std::string> var_names) {
  rigid = make_set(std::move(rigid));
  tilting = make_set(std::move(tilting));
  if (var_names.empty()) var_names = identifiers_in(images);
  VarTablePtr vars = make_vars(std::move(var_names));
  std::map<Diagonal, LaurentPoly> parsed;
  for (const auto& [d, text] : images) parsed.emplace(d, LaurentPoly::parse(text, vars));
  auto gens = subgroup_N(engine->polygon(), rigid, tilting);
  Epsilon eps = epsilon_from_assignment(parsed, tilting, gens);
  return CCContext(std::move(engine), std::move(rigid), std::move(tilting), std::move(eps), Mode::Modified);
}

CCContext CCContext::modified_auto(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting,
                                   std::vector<std::string> var_names) {
  rigid = make_set(std::move(rigid));
  tilting = make_set(std::move(tilting));
  auto gens = subgroup_N(engine->polygon(), rigid, tilting);
  auto q = quotient_presentation(gens, tilting.size());
  if (var_names.empty())
    for (std::size_t k = 1; k <= q.free_rank; ++k) var_names.push_back("x" + std::to_string(k));
  Epsilon eps = default_epsilon(q, make_vars(std::move(var_names)), tilting, rigid);
  return CCContext(std::move(engine), std::move(rigid), std::move(tilting), std::move(eps), Mode::Modified);
}

CCContext CCContext::original(std::shared_ptr<const MeshEngine> engine, DiagonalSet tilting,
                              const std::map<Diagonal, std::string>& names) {
  tilting = make_set(std::move(tilting));
  std::vector<std::string> var_names;
  for (std::size_t k = 0; k < tilting.size(); ++k) {
    auto it = names.find(tilting[k]);
    var_names.push_back(it != names.end() ? it->second : "x" + std::to_string(k + 1));
  }
  for (const auto& [d, n] : names)
    if (!contains(tilting, d)) throw std::invalid_argument("variable name given for " + d.to_string() + ", not in T");
  VarTablePtr vars = make_vars(var_names);
  std::vector<LaurentPoly> images;
  for (const auto& n : var_names) images.push_back(LaurentPoly::variable(vars, n));
  Epsilon eps(vars, tilting, std::move(images));
  DiagonalSet rigid = tilting;
  return CCContext(std::move(engine), std::move(rigid), std::move(tilting), std::move(eps), Mode::Original);
}

CCContext CCContext::integer(std::shared_ptr<const MeshEngine> engine, DiagonalSet rigid, DiagonalSet tilting) {
  tilting = make_set(std::move(tilting));
  VarTablePtr vars = make_vars({});
  std::vector<LaurentPoly> images(tilting.size(), LaurentPoly::constant(vars, 1));
  Epsilon eps(vars, tilting, std::move(images));
  return CCContext(std::move(engine), std::move(rigid), std::move(tilting), std::move(eps), Mode::Integer);
}

const ThinModule& CCContext::G(const Diagonal& c) const { return g_.at(c); }

LaurentPoly CCContext::alpha(const Diagonal& c) const { return epsilon_.apply(index_.at(c)); }

LaurentPoly CCContext::alpha(const std::vector<Diagonal>& summands) const {
  LaurentPoly out = one();
  for (const auto& c : summands) out *= alpha(c);
  return out;
}

LaurentPoly CCContext::beta(const FlClass& e) const {
  return epsilon_.apply(theta_bar(polygon(), tilting_, kappa_lift(e, tilting_, rigid_)));
}

QuotientCoords CCContext::theta(const FlClass& e) const {
  return ccfrieze::theta(polygon(), rigid_, tilting_, quotient_, e);
}

const LaurentPoly& CCContext::rho_indec(const Diagonal& c) const { return rho_.at(c); }

LaurentPoly CCContext::rho(const std::vector<Diagonal>& summands) const {
  LaurentPoly out = one();
  for (const auto& c : summands) out *= rho_indec(c);
  return out;
}

FriezeReport CCContext::frieze_check() const {
  FriezeReport report;
  const Polygon& poly = polygon();
  for (const auto& c : poly.objects()) {
    ARMesh mesh = poly.ar_mesh(c);
    LaurentPoly defect = rho_indec(mesh.start) * rho_indec(c) - rho(mesh.middles);
    MeshImageClass cls = classify_mesh_image(*engine_, mesh, rigid_);
    bool split = cls == MeshImageClass::SplitSES;
    bool agrees = split ? defect.is_zero() : defect.equals_constant(1);
    report.pass = report.pass && agrees;
    report.meshes.push_back({std::move(mesh), std::move(defect), cls, agrees});
  }
  return report;
}

}  // namespace ccfrieze
