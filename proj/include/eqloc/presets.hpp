#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "eqloc/polytope.hpp"

namespace eqloc {

// A prequantized toric manifold together with the circle acting on it.
struct ToricCase {
  std::string name;
  DelzantPolytope polytope;
  CircleData circle;
};

// CP^1 with k omega_FS: the segment [0, k], xi = 1, lift shift m.
ToricCase preset_cp1(std::int64_t k, std::int64_t m);
// CP^2: k times the standard triangle, xi = (1, 2).
ToricCase preset_cp2(std::int64_t k, std::int64_t shift = 0);
// CP^1 x CP^1: [0, k1] x [0, k2], xi = (1, k2 + 1).
ToricCase preset_cp1xcp1(std::int64_t k1, std::int64_t k2, std::int64_t shift = 0);
// Hirzebruch surface: x >= 0, 0 <= y <= b, x + a y <= c with c > a b.
ToricCase preset_hirzebruch(std::int64_t a, std::int64_t b, std::int64_t c,
                            std::int64_t shift = 0);
ToricCase preset_point();

// Looks up a preset by name ("cp1", "cp2", "cp1xcp1", "hirzebruch", "point").
// Unused parameters are ignored; throws ParseError for an unknown name.
struct PresetParams {
  std::int64_t k = 3, m = 1, k2 = 2, a = 1, b = 1, c = 3;
  std::int64_t shift = 0;
};
ToricCase preset_by_name(const std::string& name, const PresetParams& params);

/// Random Delzant polytope of dimension 1..3 with at most `max_points`
/// lattice points, obtained from a product/simplex/Hirzebruch base by corner
/// blow-ups, a unimodular change of lattice basis and a translation; paired
/// with a random generic circle and shift.
ToricCase random_delzant(std::mt19937_64& rng, std::size_t max_points = 500);

/// Applies x -> g x + b to the polytope and the dual map to xi, which leaves
/// every circle-level quantity unchanged. g must be unimodular; g_inv its
/// inverse.
ToricCase transform_case(const ToricCase& base, const std::vector<Weight>& g,
                         const std::vector<Weight>& g_inv, const Weight& b);

}  // namespace eqloc
