#include <doctest.h>

#include <random>

#include "eqloc/error.hpp"
#include "eqloc/polytope.hpp"
#include "eqloc/presets.hpp"

using namespace eqloc;

namespace {

bool satisfies_all(const std::vector<Facet>& facets, const Weight& x) {
  for (const auto& f : facets) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * f.normal[i];
    if (s < f.offset) return false;
  }
  return true;
}

// Every integer point of the vertex box, in lexicographic order, with a flag
// saying whether it satisfies all facet inequalities.
std::vector<std::pair<Weight, bool>> box_scan(const DelzantPolytope& p) {
  const std::size_t n = p.dim();
  Weight lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = p.vertices()[0][i];
    for (const auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<std::pair<Weight, bool>> out;
  Weight x = lo;
  while (true) {
    out.push_back({x, satisfies_all(p.facets(), x)});
    std::size_t k = n;
    while (k > 0 && x[k - 1] == hi[k - 1]) {
      x[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

std::vector<Weight> brute_lattice_points(const DelzantPolytope& p) {
  std::vector<Weight> pts;
  for (auto& [x, in] : box_scan(p))
    if (in) pts.push_back(x);
  return pts;
}

std::int64_t det(std::vector<Weight> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

PolytopeFault fault_of(std::size_t dim, std::vector<Facet> facets) {
  try {
    build_polytope(dim, std::move(facets));
  } catch (const PolytopeError& e) {
    return e.fault();
  }
  FAIL("polytope was accepted");
  return PolytopeFault::kTooFewFacets;
}

}  // namespace

TEST_CASE("segment [0,3]") {
  const auto p = build_polytope(1, {{{1}, 0}, {{-1}, -3}});
  REQUIRE(p.vertices().size() == 2);
  CHECK(p.vertices()[0] == Weight{0});
  CHECK(p.vertices()[1] == Weight{3});
  CHECK(p.vertex_edges()[0] == std::vector<Weight>{{1}});
  CHECK(p.vertex_edges()[1] == std::vector<Weight>{{-1}});
  CHECK(lattice_points(p) == std::vector<Weight>{{0}, {1}, {2}, {3}});
}

TEST_CASE("triangle 2 Delta^2") {
  const auto p = build_polytope(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -2}});
  auto v = p.vertices();
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Weight>{{0, 0}, {0, 2}, {2, 0}});
  CHECK(lattice_points(p).size() == 6);
  CHECK(lattice_points(p) == brute_lattice_points(p));
}

TEST_CASE("point polytope") {
  const auto p = preset_point().polytope;
  CHECK(p.dim() == 0);
  CHECK(lattice_points(p) == std::vector<Weight>{Weight{}});
}

TEST_CASE("each invalid input has its own fault") {
  // x >= 0, y >= 0, x + 2y <= 2: the cone at (0,1) has determinant 2.
  CHECK(fault_of(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -2}, -2}}) ==
        PolytopeFault::kOrbifoldVertex);
  CHECK(fault_of(2, {{{1, 0}, 0}, {{0, 1}, 0}}) == PolytopeFault::kTooFewFacets);
  CHECK(fault_of(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, -1}, -1}}) == PolytopeFault::kUnbounded);
  CHECK(fault_of(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-2, -1}, -3}}) ==
        PolytopeFault::kNonIntegralVertex);
  CHECK(fault_of(2, {{{2, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -2}}) ==
        PolytopeFault::kNonPrimitiveNormal);
  CHECK(fault_of(2, {{{1, 0}, 0}, {{-1, 0}, -1}, {{0, 1}, 0}, {{0, -1}, -1}, {{1, 0}, -5}}) ==
        PolytopeFault::kRedundantFacet);
  // Square pyramid: four facets meet at the apex.
  CHECK(fault_of(3, {{{0, 0, 1}, 0},
                     {{-1, 0, -1}, -1},
                     {{1, 0, -1}, -1},
                     {{0, -1, -1}, -1},
                     {{0, 1, -1}, -1}}) == PolytopeFault::kNotSimple);
}

TEST_CASE("mu_xi_range examples") {
  const auto cp1 = preset_cp1(3, 1);
  const auto r = mu_xi_range(cp1.polytope, cp1.circle);
  CHECK(r.min == -1);
  CHECK(r.max == 2);
  CHECK(r.critical_levels == std::vector<std::int64_t>{-1, 2});

  const auto sq = preset_cp1xcp1(1, 1);
  CHECK(sq.circle.xi == Weight{1, 2});
  const auto rs = mu_xi_range(sq.polytope, sq.circle);
  CHECK(rs.critical_levels == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(mu_xi_range(sq.polytope, CircleData{{1, 1}, 0}), PreconditionError);
  CHECK_THROWS_AS(mu_xi_range(sq.polytope, CircleData{{2, 4}, 0}), PreconditionError);
  CHECK_THROWS_AS(mu_xi_range(sq.polytope, CircleData{{1}, 0}), PreconditionError);
}

TEST_CASE("random Delzant polytopes satisfy the invariants") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const ToricCase tc = random_delzant(rng);
    const auto& p = tc.polytope;
    CAPTURE(trial);
    CHECK(p.vertices().size() >= p.dim() + 1);
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      const std::int64_t d = det(p.vertex_edges()[v]);
      CHECK((d == 1 || d == -1));
    }
    const auto scan = box_scan(p);
    std::vector<Weight> in;
    for (const auto& [x, ok] : scan) {
      CHECK(p.contains(x) == ok);
      if (ok) in.push_back(x);
    }
    CHECK(lattice_points(p) == in);
    CHECK(lattice_points_serial(p) == in);
    CHECK(in.size() <= 500);
    CHECK_NOTHROW(require_generic(p, tc.circle));
  }
}

TEST_CASE("unimodular transforms preserve every level") {
  const ToricCase base = preset_hirzebruch(1, 2, 4, 1);
  const std::vector<Weight> g{{1, 1}, {0, 1}}, g_inv{{1, -1}, {0, 1}};
  const ToricCase moved = transform_case(base, g, g_inv, {2, -3});
  const auto a = mu_xi_range(base.polytope, base.circle);
  const auto b = mu_xi_range(moved.polytope, moved.circle);
  CHECK(a.critical_levels == b.critical_levels);
  CHECK(lattice_points(base.polytope).size() == lattice_points(moved.polytope).size());
  CHECK_THROWS_AS(transform_case(base, g, g, {0, 0}), PreconditionError);
}
