#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eqloc/polytope.hpp"

namespace eqloc {

enum class ComponentKind { kFixedVertex, kBohrSommerfeld, kAcyclic };

const char* to_string(ComponentKind kind);

/// One connected level set of the normalized moment map <mu, xi> - shift.
struct LevelComponent {
  mpq_class level;
  ComponentKind kind = ComponentKind::kAcyclic;
  std::optional<std::size_t> vertex;  // set iff kind == kFixedVertex

  // Weight carried by a non-acyclic component: the level itself.
  std::int64_t weight() const;
};

/// Orbits in a free level set are L-acyclic exactly off the integer levels,
/// where the holonomy of L around the orbit is nontrivial. Throws on a vertex
/// level: a fixed point is never an orbit test case.
bool is_L_acyclic(const mpq_class& level, bool at_vertex_level = false);

/// Fixed components are never (L, gamma)-acyclic; a free level set fails
/// only when it sits exactly at gamma.
bool is_L_gamma_acyclic(const mpq_class& level, std::int64_t gamma, bool is_fixed);

/// A single level: fixed when it is a vertex level, Bohr-Sommerfeld at other
/// integers, acyclic otherwise.
LevelComponent classify_level(const DelzantPolytope& p, const CircleData& c,
                              const mpq_class& level);

/// All non-acyclic components: one per integer level in the normalized range.
std::vector<LevelComponent> enumerate_components(const DelzantPolytope& p, const CircleData& c);

/// Components that are not (L, gamma)-acyclic.
std::vector<LevelComponent> non_gamma_acyclic(const std::vector<LevelComponent>& comps,
                                              std::int64_t gamma);

}  // namespace eqloc
