#include "eqloc/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eqloc/error.hpp"

namespace eqloc {

const char* to_string(PolytopeFault fault) {
  switch (fault) {
    case PolytopeFault::kTooFewFacets: return "too_few_facets";
    case PolytopeFault::kUnbounded: return "unbounded";
    case PolytopeFault::kNonIntegralVertex: return "non_integral_vertex";
    case PolytopeFault::kOrbifoldVertex: return "orbifold_vertex";
    case PolytopeFault::kNotSimple: return "not_simple";
    case PolytopeFault::kRedundantFacet: return "redundant_facet";
    case PolytopeFault::kNonPrimitiveNormal: return "non_primitive_normal";
  }
  return "unknown";
}

namespace {

using RatMatrix = std::vector<std::vector<mpq_class>>;

struct Inverse {
  RatMatrix inv;
  mpq_class det;
};

// Gauss-Jordan over Q. nullopt when singular.
std::optional<Inverse> invert(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    const mpq_class p = a[col][col];
    det *= p;
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return Inverse{std::move(inv), det};
}

// Scales a rational direction to the primitive integer vector on its ray.
Weight primitive_on_ray(const std::vector<mpq_class>& dir) {
  mpz_class den = 1;
  for (const auto& q : dir) den = lcm(den, mpz_class(q.get_den()));
  std::vector<mpz_class> ints;
  ints.reserve(dir.size());
  mpz_class g = 0;
  for (const auto& q : dir) {
    mpz_class v = mpz_class(q.get_num()) * (den / mpz_class(q.get_den()));
    g = gcd(g, v);
    ints.push_back(v);
  }
  Weight out;
  out.reserve(ints.size());
  for (auto& v : ints) out.push_back(mpz_class(v / g).get_si());
  return out;
}

// Visits every n-subset of {0, ..., m-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t n, F&& f) {
  if (n > m) return;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == m - n + (k - 1)) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string vec_str(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::int64_t pairing(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool DelzantPolytope::contains(std::span<const std::int64_t> x) const {
  for (const auto& f : facets_) {
    if (pairing(x, f.normal) < f.offset) return false;
  }
  return true;
}

std::pair<Weight, Weight> DelzantPolytope::bounding_box() const {
  Weight lo = vertices_.front(), hi = vertices_.front();
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  return {lo, hi};
}

DelzantPolytope build_polytope(std::size_t dim, std::vector<Facet> facets) {
  DelzantPolytope p;
  p.dim_ = dim;
  if (dim == 0) {
    if (!facets.empty()) {
      throw PolytopeError(PolytopeFault::kRedundantFacet, "a point polytope has no facets");
    }
    p.vertices_ = {Weight{}};
    p.edges_ = {{}};
    p.tight_ = {{}};
    return p;
  }
  if (facets.size() < dim + 1) {
    throw PolytopeError(PolytopeFault::kTooFewFacets,
                        "need at least " + std::to_string(dim + 1) + " facets in dimension " +
                            std::to_string(dim));
  }
  for (const auto& f : facets) {
    if (f.normal.size() != dim) {
      throw PreconditionError("facet normal " + vec_str(f.normal) + " has wrong length");
    }
    if (!is_primitive(f.normal)) {
      throw PolytopeError(PolytopeFault::kNonPrimitiveNormal,
                          "facet normal " + vec_str(f.normal) + " is not primitive");
    }
  }
  p.facets_ = std::move(facets);
  const auto& fs = p.facets_;

  // Candidate vertices: every nonsingular n-subset of facet equalities whose
  // solution satisfies all inequalities.
  std::set<std::vector<mpq_class>> seen;
  std::vector<std::vector<mpq_class>> rat_vertices;
  for_each_subset(fs.size(), dim, [&](const std::vector<std::size_t>& idx) {
    RatMatrix u(dim, std::vector<mpq_class>(dim));
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) u[r][c] = fs[idx[r]].normal[c];
    auto inv = invert(u);
    if (!inv) return;
    std::vector<mpq_class> x(dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) x[r] += inv->inv[r][c] * fs[idx[c]].offset;
    for (const auto& f : fs) {
      mpq_class val = 0;
      for (std::size_t c = 0; c < dim; ++c) val += x[c] * f.normal[c];
      if (val < f.offset) return;
    }
    if (seen.insert(x).second) rat_vertices.push_back(std::move(x));
  });
  if (rat_vertices.empty()) {
    throw PolytopeError(PolytopeFault::kUnbounded, "facet system has no vertices");
  }

  std::vector<bool> facet_used(fs.size(), false);
  for (const auto& x : rat_vertices) {
    Weight v(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      if (x[c].get_den() != 1) {
        throw PolytopeError(PolytopeFault::kNonIntegralVertex,
                            "vertex coordinate " + x[c].get_str() + " is not an integer");
      }
      v[c] = mpz_class(x[c].get_num()).get_si();
    }
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (pairing(v, fs[i].normal) == fs[i].offset) tight.push_back(i);
    }
    if (tight.size() != dim) {
      throw PolytopeError(PolytopeFault::kNotSimple,
                          "vertex " + vec_str(v) + " lies on " + std::to_string(tight.size()) +
                              " facets");
    }
    RatMatrix u(dim, std::vector<mpq_class>(dim));
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) u[r][c] = fs[tight[r]].normal[c];
    auto inv = invert(u);
    if (abs(inv->det) != 1) {
      throw PolytopeError(PolytopeFault::kOrbifoldVertex,
                          "vertex cone at " + vec_str(v) + " has determinant " +
                              inv->det.get_str() + " (orbifold point)");
    }
    std::vector<Weight> edges;
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<mpq_class> col(dim);
      for (std::size_t r = 0; r < dim; ++r) col[r] = inv->inv[r][j];
      Weight e = primitive_on_ray(col);
      bool leaves = false;
      for (const auto& f : fs) {
        if (pairing(e, f.normal) < 0) leaves = true;
      }
      if (!leaves) {
        throw PolytopeError(PolytopeFault::kUnbounded,
                            "edge " + vec_str(e) + " at vertex " + vec_str(v) +
                                " is an unbounded ray");
      }
      edges.push_back(std::move(e));
    }
    for (auto i : tight) facet_used[i] = true;
    p.vertices_.push_back(std::move(v));
    p.edges_.push_back(std::move(edges));
    p.tight_.push_back(std::move(tight));
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!facet_used[i]) {
      throw PolytopeError(PolytopeFault::kRedundantFacet,
                          "facet " + std::to_string(i) + " supports no vertex");
    }
  }
  return p;
}

namespace {

constexpr std::int64_t kMaxBoxPoints = 50'000'000;

std::int64_t box_volume(const Weight& lo, const Weight& hi) {
  std::int64_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    n *= hi[i] - lo[i] + 1;
    if (n > kMaxBoxPoints) throw PreconditionError("bounding box too large to enumerate");
  }
  return n;
}

// Enumerates the box points with first coordinate fixed, odometer order.
void scan_slab(const DelzantPolytope& p, const Weight& lo, const Weight& hi, std::int64_t x0,
               std::vector<Weight>& out) {
  const std::size_t n = p.dim();
  Weight x = lo;
  x[0] = x0;
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t k = n;
    while (k > 1) {
      if (x[k - 1] < hi[k - 1]) {
        ++x[k - 1];
        break;
      }
      x[k - 1] = lo[k - 1];
      --k;
    }
    if (k <= 1) return;
  }
}

}  // namespace

std::vector<Weight> lattice_points_serial(const DelzantPolytope& p) {
  if (p.dim() == 0) return {Weight{}};
  auto [lo, hi] = p.bounding_box();
  box_volume(lo, hi);
  std::vector<Weight> out;
  for (std::int64_t x0 = lo[0]; x0 <= hi[0]; ++x0) scan_slab(p, lo, hi, x0, out);
  return out;
}

std::vector<Weight> lattice_points(const DelzantPolytope& p) {
  if (p.dim() == 0) return {Weight{}};
  auto [lo, hi] = p.bounding_box();
  box_volume(lo, hi);
  const std::int64_t slabs = hi[0] - lo[0] + 1;
  std::vector<std::vector<Weight>> parts(static_cast<std::size_t>(slabs));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < slabs; ++s) {
    scan_slab(p, lo, hi, lo[0] + s, parts[static_cast<std::size_t>(s)]);
  }
  std::vector<Weight> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

void require_generic(const DelzantPolytope& p, const CircleData& c) {
  if (c.xi.size() != p.dim()) {
    throw PreconditionError("xi has length " + std::to_string(c.xi.size()) +
                            ", polytope dimension is " + std::to_string(p.dim()));
  }
  if (p.dim() > 0 && !is_primitive(c.xi)) {
    throw PreconditionError("xi " + vec_str(c.xi) + " is not primitive");
  }
  std::set<std::int64_t> values;
  for (const auto& v : p.vertices()) {
    if (!values.insert(pairing(v, c.xi)).second) {
      throw PreconditionError("xi " + vec_str(c.xi) +
                              " is not generic: two vertices share the level " +
                              std::to_string(pairing(v, c.xi)));
    }
  }
}

LevelRange mu_xi_range(const DelzantPolytope& p, const CircleData& c) {
  require_generic(p, c);
  std::vector<std::pair<std::int64_t, std::size_t>> levels;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    levels.emplace_back(pairing(p.vertices()[i], c.xi) - c.shift, i);
  }
  std::sort(levels.begin(), levels.end());
  LevelRange r;
  r.min = levels.front().first;
  r.max = levels.back().first;
  for (const auto& [lvl, idx] : levels) {
    r.critical_levels.push_back(lvl);
    r.critical_vertex.push_back(idx);
  }
  return r;
}

}  // namespace eqloc
