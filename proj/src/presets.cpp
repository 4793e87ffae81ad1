#include "eqloc/presets.hpp"

#include <algorithm>
#include <string>

#include "eqloc/error.hpp"

namespace eqloc {

ToricCase preset_cp1(std::int64_t k, std::int64_t m) {
  if (k < 1) throw PreconditionError("cp1 needs k >= 1");
  return {"cp1(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")", build_polytope(1, {{{1}, 0}, {{-1}, -k}}), {{1}, m}};
}

ToricCase preset_cp2(std::int64_t k, std::int64_t shift) {
  if (k < 1) throw PreconditionError("cp2 needs k >= 1");
  return {"cp2(k=" + std::to_string(k) + ",s=" + std::to_string(shift) + ")", build_polytope(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -k}}), {{1, 2}, shift}};
}

ToricCase preset_cp1xcp1(std::int64_t k1, std::int64_t k2, std::int64_t shift) {
  if (k1 < 1 || k2 < 1) throw PreconditionError("cp1xcp1 needs k1, k2 >= 1");
  return {"cp1xcp1(" + std::to_string(k1) + "," + std::to_string(k2) +
              ",s=" + std::to_string(shift) + ")",
          build_polytope(2, {{{1, 0}, 0}, {{-1, 0}, -k1}, {{0, 1}, 0}, {{0, -1}, -k2}}),
          {{1, k2 + 1}, shift}};
}

ToricCase preset_hirzebruch(std::int64_t a, std::int64_t b, std::int64_t c,
                            std::int64_t shift) {
  if (a < 0 || b < 1 || c <= a * b) {
    throw PreconditionError("hirzebruch needs a >= 0, b >= 1, c > a b");
  }
  return {"hirzebruch(" + std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(c) + ",s=" + std::to_string(shift) + ")",
          build_polytope(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -b}, {{-1, -a}, -c}}),
          {{1, c + 1}, shift}};
}

ToricCase preset_point() { return {"point", build_polytope(0, {}), {{}, 0}}; }

ToricCase preset_by_name(const std::string& name, const PresetParams& p) {
  if (name == "cp1") return preset_cp1(p.k, p.m);
  if (name == "cp2") return preset_cp2(p.k, p.shift);
  if (name == "cp1xcp1") return preset_cp1xcp1(p.k, p.k2, p.shift);
  if (name == "hirzebruch") return preset_hirzebruch(p.a, p.b, p.c, p.shift);
  if (name == "point") return preset_point();
  throw ParseError("unknown preset '" + name + "'");
}

namespace {

using Matrix = std::vector<Weight>;

Matrix identity(std::size_t n) {
  Matrix m(n, Weight(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), Weight(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Weight mat_t_vec(const Matrix& m, const Weight& v) {
  Weight out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[j][i] * v[j];
  return out;
}

std::vector<Facet> base_facets(std::mt19937_64& rng, std::size_t dim) {
  auto uni = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  if (dim == 1) return {{{1}, 0}, {{-1}, -uni(1, 30)}};
  if (dim == 2) {
    switch (uni(0, 2)) {
      case 0: return {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -uni(1, 25)}};
      case 1: return {{{1, 0}, 0}, {{-1, 0}, -uni(1, 18)}, {{0, 1}, 0}, {{0, -1}, -uni(1, 18)}};
      default: {
        const std::int64_t a = uni(0, 3), b = uni(1, 8);
        return {{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -b}, {{-1, -a}, -(a * b + uni(1, 12))}};
      }
    }
  }
  switch (uni(0, 2)) {
    case 0: return {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{-1, -1, -1}, -uni(1, 12)}};
    case 1:
      return {{{1, 0, 0}, 0}, {{-1, 0, 0}, -uni(1, 7)}, {{0, 1, 0}, 0},
              {{0, -1, 0}, -uni(1, 7)}, {{0, 0, 1}, 0}, {{0, 0, -1}, -uni(1, 7)}};
    default:
      return {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{-1, -1, 0}, -uni(1, 9)}, {{0, 0, 1}, 0},
              {{0, 0, -1}, -uni(1, 7)}};
  }
}

// Cuts the corner at a random vertex at lattice depth delta, which keeps the
// polytope Delzant as long as delta is shorter than every edge there.
bool blow_up(std::mt19937_64& rng, std::vector<Facet>& facets, const DelzantPolytope& p) {
  const std::size_t n = p.dim();
  const std::size_t vi =
      std::uniform_int_distribution<std::size_t>(0, p.vertices().size() - 1)(rng);
  const Weight& v = p.vertices()[vi];
  std::int64_t shortest = -1;
  for (const auto& e : p.vertex_edges()[vi]) {
    std::int64_t len = -1;
    for (const auto& f : p.facets()) {
      const std::int64_t de = pairing(e, f.normal);
      if (de >= 0) continue;
      const std::int64_t room = (pairing(v, f.normal) - f.offset) / (-de);
      if (len < 0 || room < len) len = room;
    }
    if (shortest < 0 || len < shortest) shortest = len;
  }
  if (shortest < 2) return false;
  const std::int64_t delta = std::uniform_int_distribution<std::int64_t>(1, shortest - 1)(rng);
  Weight normal(n, 0);
  for (auto fi : p.vertex_facets()[vi])
    for (std::size_t c = 0; c < n; ++c) normal[c] += p.facets()[fi].normal[c];
  facets.push_back({normal, pairing(v, normal) + delta});
  return true;
}

}  // namespace

ToricCase transform_case(const ToricCase& base, const std::vector<Weight>& g,
                         const std::vector<Weight>& g_inv, const Weight& b) {
  const std::size_t n = base.polytope.dim();
  if (g.size() != n || g_inv.size() != n || b.size() != n || mat_mul(g, g_inv) != identity(n))
    throw PreconditionError("transform_case: g and g_inv are not inverse unimodular matrices");
  std::vector<Facet> facets;
  for (const auto& f : base.polytope.facets()) {
    Weight u = mat_t_vec(g_inv, f.normal);
    facets.push_back({u, f.offset + pairing(b, u)});
  }
  Weight xi = mat_t_vec(g_inv, base.circle.xi);
  const std::int64_t shift = base.circle.shift + pairing(b, xi);
  return {base.name, build_polytope(n, std::move(facets)), {std::move(xi), shift}};
}

ToricCase random_delzant(std::mt19937_64& rng, std::size_t max_points) {
  auto uni = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto dim = static_cast<std::size_t>(uni(1, 3));
    std::vector<Facet> facets = base_facets(rng, dim);
    DelzantPolytope p = build_polytope(dim, facets);
    const int cuts = dim == 1 ? 0 : static_cast<int>(uni(0, 2));
    bool ok = true;
    for (int i = 0; i < cuts && ok; ++i) {
      if (!blow_up(rng, facets, p)) break;
      try {
        p = build_polytope(dim, facets);
      } catch (const PolytopeError&) {
        ok = false;
      }
    }
    if (!ok) continue;

    // Unimodular change of basis from a few elementary shears and swaps.
    Matrix g = identity(dim), g_inv = identity(dim);
    const int steps = static_cast<int>(uni(0, 3));
    for (int s = 0; s < steps && dim > 1; ++s) {
      const auto i = static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(dim) - 1));
      auto j = static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(dim) - 2));
      if (j >= i) ++j;
      const std::int64_t k = uni(0, 1) ? 1 : -1;
      // g <- E g with E = I + k e_i e_j^T; g_inv <- g_inv E^-1.
      for (std::size_t c = 0; c < dim; ++c) g[i][c] += k * g[j][c];
      for (std::size_t r = 0; r < dim; ++r) g_inv[r][j] -= k * g_inv[r][i];
    }
    Weight b(dim);
    for (auto& x : b) x = uni(-3, 3);

    CircleData circle;
    circle.xi.resize(dim);
    circle.shift = uni(-5, 5);
    ToricCase base{"random", p, circle};
    ToricCase out;
    try {
      out = transform_case(base, g, g_inv, b);
    } catch (const PolytopeError&) {
      continue;
    }
    if (lattice_points(out.polytope).size() > max_points) continue;
    bool generic = false;
    for (int tries = 0; tries < 200 && !generic; ++tries) {
      for (auto& x : out.circle.xi) x = uni(-4, 4);
      try {
        require_generic(out.polytope, out.circle);
        generic = true;
      } catch (const PreconditionError&) {
      }
    }
    if (!generic) continue;
    return out;
  }
  throw std::runtime_error("random_delzant: no admissible polytope found");
}

}  // namespace eqloc
