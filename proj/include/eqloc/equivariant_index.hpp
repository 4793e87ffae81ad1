#pragma once

#include <vector>

#include "eqloc/character.hpp"
#include "eqloc/polytope.hpp"

namespace eqloc {

// Torus-fixed point of the toric manifold: a vertex of the polytope.
struct FixedPointDatum {
  Weight vertex;
  std::vector<Weight> isotropy_weights;  // primitive edge basis at the vertex
  Weight fiber_weight_on_L;              // equals vertex under our sign convention
};

std::vector<FixedPointDatum> fixed_point_data(const DelzantPolytope& p);

/// One copy of C_a for every lattice point a of P.
Character danilov_character(const DelzantPolytope& p);

/// Circle character from vertex localization. Each vertex contributes
/// t^<v,xi> prod_e (1 - t^<e,xi>)^-1; factors with <e,xi> < 0 are flipped to
/// -t^|a| (1 - t^|a|)^-1 so that every term expands in nonnegative powers.
/// The series are summed exactly over the window [min, max] of vertex levels
/// plus a guard band above it; any nonzero coefficient in the guard band means
/// the cancellation failed and is reported as a logic error.
Character atiyah_bott_character(const DelzantPolytope& p, std::span<const std::int64_t> xi);
Character atiyah_bott_character_serial(const DelzantPolytope& p,
                                       std::span<const std::int64_t> xi);

/// Index character of the circle action with lift shift s: weights <a,xi> - s.
Character global_circle_character(const DelzantPolytope& p, const CircleData& c);

}  // namespace eqloc
