#pragma once

#include <vector>

#include "eqloc/character.hpp"
#include "eqloc/orbit_classifier.hpp"
#include "eqloc/polytope.hpp"

namespace eqloc {

struct ComponentIndex {
  LevelComponent component;
  Character local;
};

struct LocalIndexReport {
  std::vector<ComponentIndex> components;
  Character global{1};
  bool localization_ok = false;
  bool vanishing_ok = false;
};

/// Equivariant local index of a non-acyclic level component: the level weight
/// with multiplicity equal to the number of lattice points on the slice.
/// Throws PreconditionError for an acyclic level.
Character local_index_at(const LevelComponent& component, const DelzantPolytope& p,
                         const CircleData& c);

LocalIndexReport localization_check(const DelzantPolytope& p, const CircleData& c);

// True iff every component character is supported on its own level only.
bool vanishing_holds(const LocalIndexReport& report);
bool vanishing_check(const DelzantPolytope& p, const CircleData& c);

// Sum of component characters; compared against `global` by localization_check.
Character sum_of_components(const LocalIndexReport& report);

/// Report of the disjoint union of two manifolds: components side by side,
/// global characters added, flags recomputed.
LocalIndexReport disjoint_union(const LocalIndexReport& a, const LocalIndexReport& b);

}  // namespace eqloc
