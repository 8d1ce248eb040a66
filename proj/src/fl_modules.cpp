#include "ccfrieze/fl_modules.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ccfrieze {

std::vector<Diagonal> ThinModule::subset_list(Subset s) const {
  std::vector<Diagonal> out;
  for (std::size_t k = 0; k < base.size(); ++k)
    if ((s >> k) & 1U) out.push_back(base[k]);
  return out;
}

std::vector<Diagonal> ThinModule::support_list() const { return subset_list(support); }

std::string ThinModule::to_json() const {
  std::string out = "{\"support\": [";
  bool first = true;
  for (const auto& d : support_list()) {
    if (!first) out += ", ";
    first = false;
    out += '"' + d.to_string() + '"';
  }
  out += "], \"arrows\": [";
  first = true;
  for (const auto& [k, k2] : arrows) {
    if (!first) out += ", ";
    first = false;
    out += "[\"" + base[k].to_string() + "\", \"" + base[k2].to_string() + "\"]";
  }
  return out + "]}";
}

std::string to_string(MeshImageClass c) {
  switch (c) {
    case MeshImageClass::SplitSES: return "split";
    case MeshImageClass::NonSplitSES: return "non-split";
    case MeshImageClass::ProjCase: return "projective";
    case MeshImageClass::InjCase: return "injective";
  }
  return "?";
}

ThinModule compute_G(const MeshEngine& engine, const Diagonal& c, const std::vector<Diagonal>& base) {
  const Polygon& poly = engine.polygon();
  if (base.size() > 64) throw std::invalid_argument("base too large for a thin module");
  if (auto v = poly.validate_rigid(make_set(base))) throw std::invalid_argument("base is not rigid: " + v->message);

  ThinModule m;
  m.base = base;
  for (std::size_t k = 0; k < base.size(); ++k)
    if (poly.crossing(base[k], c)) m.support |= Subset{1} << k;

  const Diagonal target = poly.suspend(c);
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (!m.in_support(k)) continue;
    for (std::size_t k2 = 0; k2 < base.size(); ++k2) {
      if (k2 == k || !m.in_support(k2)) continue;
      if (engine.hom_dim(base[k2], base[k]) == 0) continue;
      if (engine.composite_nonzero(base[k2], base[k], target))
        m.arrows.emplace_back(static_cast<int>(k), static_cast<int>(k2));
    }
  }
  return m;
}

namespace {

// need[k]: components forced into a submodule containing component k.
std::vector<Subset> closure_masks(const ThinModule& m) {
  std::vector<Subset> need(m.base.size(), 0);
  for (const auto& [k, k2] : m.arrows) need[k] |= Subset{1} << k2;
  return need;
}

}  // namespace

std::vector<Subset> closed_subsets(const ThinModule& m) {
  const auto need = closure_masks(m);
  std::vector<Subset> out;
  // Enumerate submasks of the support in increasing order.
  Subset s = 0;
  for (;;) {
    bool closed = true;
    for (std::size_t k = 0; k < m.base.size() && closed; ++k)
      if (((s >> k) & 1U) && (need[k] & ~s)) closed = false;
    if (closed) out.push_back(s);
    if (s == m.support) break;
    s = (s - m.support) & m.support;
  }
  return out;
}

FlClass subset_class(const ThinModule& m, Subset s) {
  FlClass e(m.base.size(), 0);
  for (std::size_t k = 0; k < m.base.size(); ++k)
    if ((s >> k) & 1U) e[k] = 1;
  return e;
}

FlClass module_class(const ThinModule& m) { return subset_class(m, m.support); }

std::uint64_t grassmannian_euler(const ThinModule& m, const FlClass& e) {
  std::uint64_t n = 0;
  for (Subset s : closed_subsets(m))
    if (subset_class(m, s) == e) ++n;
  return n;
}

std::map<FlClass, std::uint64_t> grassmannian_euler_table(const ThinModule& m) {
  std::map<FlClass, std::uint64_t> table;
  for (Subset s : closed_subsets(m)) ++table[subset_class(m, s)];
  return table;
}

std::vector<ThinModule> components(const ThinModule& m) {
  std::vector<ThinModule> out;
  Subset left = m.support;
  while (left) {
    Subset comp = Subset{1} << std::countr_zero(left);
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& [k, k2] : m.arrows) {
        Subset a = Subset{1} << k, b = Subset{1} << k2;
        if ((comp & a) && !(comp & b)) comp |= b, grew = true;
        if ((comp & b) && !(comp & a)) comp |= a, grew = true;
      }
    }
    ThinModule c;
    c.base = m.base;
    c.support = comp;
    for (const auto& arrow : m.arrows)
      if ((comp >> arrow.first) & 1U) c.arrows.push_back(arrow);
    out.push_back(std::move(c));
    left &= ~comp;
  }
  return out;
}

namespace {

using ComponentKey = std::pair<std::vector<Diagonal>, std::vector<std::pair<Diagonal, Diagonal>>>;

std::vector<ComponentKey> component_keys(const std::vector<ThinModule>& summands) {
  std::vector<ComponentKey> keys;
  for (const auto& summand : summands)
    for (const auto& comp : components(summand)) {
      ComponentKey key;
      key.first = comp.support_list();
      std::sort(key.first.begin(), key.first.end());
      for (const auto& [k, k2] : comp.arrows) key.second.emplace_back(comp.base[k], comp.base[k2]);
      std::sort(key.second.begin(), key.second.end());
      keys.push_back(std::move(key));
    }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

bool isomorphic(const std::vector<ThinModule>& lhs, const std::vector<ThinModule>& rhs) {
  return component_keys(lhs) == component_keys(rhs);
}

MeshImageClass classify_mesh_image(const MeshEngine& engine, const ARMesh& mesh, const DiagonalSet& rigid) {
  const Polygon& poly = engine.polygon();
  const Diagonal& c = mesh.end;
  if (contains(rigid, c)) return MeshImageClass::InjCase;
  if (contains(rigid, poly.suspend(c))) return MeshImageClass::ProjCase;

  std::vector<Diagonal> base(rigid.begin(), rigid.end());
  std::vector<ThinModule> middle;
  for (const auto& b : mesh.middles) middle.push_back(compute_G(engine, b, base));
  std::vector<ThinModule> ends{compute_G(engine, mesh.start, base), compute_G(engine, c, base)};
  return isomorphic(middle, ends) ? MeshImageClass::SplitSES : MeshImageClass::NonSplitSES;
}

}  // namespace ccfrieze
