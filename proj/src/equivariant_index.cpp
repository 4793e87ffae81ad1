#include "eqloc/equivariant_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "eqloc/error.hpp"

namespace eqloc {

std::vector<FixedPointDatum> fixed_point_data(const DelzantPolytope& p) {
  std::vector<FixedPointDatum> out;
  out.reserve(p.vertices().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    out.push_back({p.vertices()[i], p.vertex_edges()[i], p.vertices()[i]});
  }
  return out;
}

Character danilov_character(const DelzantPolytope& p) {
  Character c(p.dim());
  for (const auto& a : lattice_points(p)) c.add(a, 1);
  return c;
}

namespace {

struct SeriesWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // last exponent kept, window max plus guard band
  std::int64_t window_max = 0;
};

// Dense coefficients of one vertex term on [window.lo, window.hi].
std::vector<mpz_class> vertex_series(const Weight& vertex, const std::vector<Weight>& edges,
                                     std::span<const std::int64_t> xi, const SeriesWindow& w) {
  const std::size_t len = static_cast<std::size_t>(w.hi - w.lo + 1);
  std::vector<mpz_class> out(len, 0);
  std::int64_t lead = pairing(vertex, xi);
  int sign = 1;
  std::vector<std::int64_t> steps;
  for (const auto& e : edges) {
    const std::int64_t a = pairing(e, xi);
    if (a == 0) throw PreconditionError("edge orthogonal to xi: xi is not generic");
    if (a < 0) {
      sign = -sign;
      lead += -a;
      steps.push_back(-a);
    } else {
      steps.push_back(a);
    }
  }
  if (lead > w.hi) return out;
  // Product of geometric series 1/(1 - t^b), truncated at degree hi - lead.
  const std::size_t deg = static_cast<std::size_t>(w.hi - lead);
  std::vector<mpz_class> poly(deg + 1, 0);
  poly[0] = 1;
  for (auto b : steps) {
    const auto step = static_cast<std::size_t>(b);
    for (std::size_t k = step; k <= deg; ++k) poly[k] += poly[k - step];
  }
  const std::size_t offset = static_cast<std::size_t>(lead - w.lo);
  for (std::size_t k = 0; k <= deg; ++k) {
    out[offset + k] = sign > 0 ? poly[k] : mpz_class(-poly[k]);
  }
  return out;
}

SeriesWindow window_for(const DelzantPolytope& p, std::span<const std::int64_t> xi) {
  CircleData c{Weight(xi.begin(), xi.end()), 0};
  const LevelRange r = mu_xi_range(p, c);
  std::int64_t guard = 1;
  for (const auto& edges : p.vertex_edges()) {
    std::int64_t spread = 0;
    for (const auto& e : edges) spread += std::abs(pairing(e, xi));
    guard = std::max(guard, spread);
  }
  return {r.min, r.max + guard, r.max};
}

Character collect(const std::vector<mpz_class>& total, const SeriesWindow& w) {
  Character c(1);
  for (std::size_t k = 0; k < total.size(); ++k) {
    const std::int64_t exponent = w.lo + static_cast<std::int64_t>(k);
    if (total[k] == 0) continue;
    if (exponent > w.window_max) {
      throw std::logic_error("fixed-point series did not cancel at exponent " +
                             std::to_string(exponent));
    }
    c.add(Weight{exponent}, total[k]);
  }
  return c;
}

}  // namespace

Character atiyah_bott_character_serial(const DelzantPolytope& p,
                                       std::span<const std::int64_t> xi) {
  const SeriesWindow w = window_for(p, xi);
  std::vector<mpz_class> total(static_cast<std::size_t>(w.hi - w.lo + 1), 0);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    auto term = vertex_series(p.vertices()[v], p.vertex_edges()[v], xi, w);
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += term[k];
  }
  return collect(total, w);
}

Character atiyah_bott_character(const DelzantPolytope& p, std::span<const std::int64_t> xi) {
  const SeriesWindow w = window_for(p, xi);
  const auto nv = static_cast<std::int64_t>(p.vertices().size());
  std::vector<std::vector<mpz_class>> terms(static_cast<std::size_t>(nv));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v < nv; ++v) {
    const auto i = static_cast<std::size_t>(v);
    terms[i] = vertex_series(p.vertices()[i], p.vertex_edges()[i], xi, w);
  }
  // Summed in vertex order so the result does not depend on scheduling.
  std::vector<mpz_class> total(static_cast<std::size_t>(w.hi - w.lo + 1), 0);
  for (const auto& term : terms)
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += term[k];
  return collect(total, w);
}

Character global_circle_character(const DelzantPolytope& p, const CircleData& c) {
  require_generic(p, c);
  return char_tensor_shift(restrict_to_circle(danilov_character(p), c.xi), -c.shift);
}

}  // namespace eqloc
