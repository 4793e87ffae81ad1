#include "eqloc/orbit_classifier.hpp"

#include <algorithm>

#include "eqloc/error.hpp"

namespace eqloc {

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kFixedVertex: return "fixed";
    case ComponentKind::kBohrSommerfeld: return "bohr_sommerfeld";
    case ComponentKind::kAcyclic: return "acyclic";
  }
  return "unknown";
}

namespace {

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

std::int64_t LevelComponent::weight() const {
  if (!is_integer(level)) throw PreconditionError("acyclic component carries no weight");
  return mpz_class(level.get_num()).get_si();
}

bool is_L_acyclic(const mpq_class& level, bool at_vertex_level) {
  if (at_vertex_level) {
    throw PreconditionError("level " + level.get_str() +
                            " is a fixed component, not an orbit test");
  }
  return !is_integer(level);
}

bool is_L_gamma_acyclic(const mpq_class& level, std::int64_t gamma, bool is_fixed) {
  if (is_fixed) return false;
  return level != mpq_class(gamma);
}

LevelComponent classify_level(const DelzantPolytope& p, const CircleData& c,
                              const mpq_class& level) {
  const LevelRange r = mu_xi_range(p, c);
  if (level < r.min || level > r.max) {
    throw PreconditionError("level " + level.get_str() + " is not attained");
  }
  LevelComponent comp{level, ComponentKind::kAcyclic, std::nullopt};
  if (!is_integer(level)) return comp;
  const std::int64_t l = mpz_class(level.get_num()).get_si();
  auto it = std::find(r.critical_levels.begin(), r.critical_levels.end(), l);
  if (it != r.critical_levels.end()) {
    comp.kind = ComponentKind::kFixedVertex;
    comp.vertex = r.critical_vertex[static_cast<std::size_t>(it - r.critical_levels.begin())];
  } else {
    comp.kind = ComponentKind::kBohrSommerfeld;
  }
  return comp;
}

std::vector<LevelComponent> enumerate_components(const DelzantPolytope& p, const CircleData& c) {
  const LevelRange r = mu_xi_range(p, c);
  std::vector<LevelComponent> out;
  std::size_t next_vertex = 0;
  for (std::int64_t l = r.min; l <= r.max; ++l) {
    LevelComponent comp{mpq_class(l), ComponentKind::kBohrSommerfeld, std::nullopt};
    if (next_vertex < r.critical_levels.size() && r.critical_levels[next_vertex] == l) {
      comp.kind = ComponentKind::kFixedVertex;
      comp.vertex = r.critical_vertex[next_vertex];
      ++next_vertex;
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<LevelComponent> non_gamma_acyclic(const std::vector<LevelComponent>& comps,
                                              std::int64_t gamma) {
  std::vector<LevelComponent> out;
  for (const auto& comp : comps) {
    if (!is_L_gamma_acyclic(comp.level, gamma, comp.kind == ComponentKind::kFixedVertex)) {
      out.push_back(comp);
    }
  }
  return out;
}

}  // namespace eqloc
