#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eqloc/character.hpp"

namespace eqloc {

struct Facet {
  Weight normal;
  std::int64_t offset = 0;  // half-space <x, normal> >= offset
};

/// A Delzant lattice polytope: bounded, simple, with integral vertices and a
/// unimodular cone at every vertex. Built only through `build_polytope`, which
/// validates all of that and derives vertices and primitive edge bases.
class DelzantPolytope {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Weight>& vertices() const noexcept { return vertices_; }
  // vertex_edges()[v][j] is the primitive edge vector leaving vertex v along
  // which every tight facet except vertex_facets()[v][j] stays tight.
  const std::vector<std::vector<Weight>>& vertex_edges() const noexcept { return edges_; }
  const std::vector<std::vector<std::size_t>>& vertex_facets() const noexcept {
    return tight_;
  }

  bool contains(std::span<const std::int64_t> x) const;

  // Componentwise [lo, hi] box spanned by the vertices.
  std::pair<Weight, Weight> bounding_box() const;

 private:
  friend DelzantPolytope build_polytope(std::size_t dim, std::vector<Facet> facets);

  std::size_t dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<Weight> vertices_;
  std::vector<std::vector<Weight>> edges_;
  std::vector<std::vector<std::size_t>> tight_;
};

/// Throws PolytopeError with a fault code for each way the input can fail to
/// describe a Delzant polytope. dim == 0 with no facets is the point.
DelzantPolytope build_polytope(std::size_t dim, std::vector<Facet> facets);

/// Integer points of P in lexicographic order. The OpenMP version splits the
/// bounding box into slabs along the first coordinate.
std::vector<Weight> lattice_points(const DelzantPolytope& p);
std::vector<Weight> lattice_points_serial(const DelzantPolytope& p);

/// Circle subgroup generated by xi, with the lift to L twisted by `shift`.
struct CircleData {
  Weight xi;
  std::int64_t shift = 0;
};

std::int64_t pairing(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Range of the normalized moment map <x, xi> - shift over P, together with
/// the normalized level of every vertex (the fixed points), sorted ascending.
struct LevelRange {
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::vector<std::int64_t> critical_levels;
  std::vector<std::size_t> critical_vertex;  // vertex index for each critical level
};

/// Throws PreconditionError if xi has the wrong length, is not primitive, or
/// takes the same value at two vertices.
LevelRange mu_xi_range(const DelzantPolytope& p, const CircleData& c);

void require_generic(const DelzantPolytope& p, const CircleData& c);

}  // namespace eqloc
