#include "eqloc/reduction.hpp"

#include <algorithm>
#include <string>

#include "eqloc/equivariant_index.hpp"
#include "eqloc/error.hpp"

namespace eqloc {

bool is_regular_value(std::int64_t gamma, const DelzantPolytope& p, const CircleData& c) {
  require_generic(p, c);
  for (const auto& v : p.vertices()) {
    if (pairing(v, c.xi) == gamma + c.shift) return false;
  }
  return true;
}

std::int64_t reduced_lattice_count(std::int64_t gamma, const DelzantPolytope& p,
                                   const CircleData& c) {
  if (!is_regular_value(gamma, p, c)) {
    throw PreconditionError("critical value " + std::to_string(gamma) +
                            ": the reduced space is singular and its index is not "
                            "computed here");
  }
  if (p.dim() == 0) return 0;  // regular means off the only fixed point
  // Walk the slice hyperplane inside the bounding box: solve the last
  // coordinate with nonzero xi entry from the others.
  auto [lo, hi] = p.bounding_box();
  const std::int64_t target = gamma + c.shift;
  std::size_t pivot = p.dim();
  for (std::size_t i = p.dim(); i-- > 0;) {
    if (c.xi[i] != 0) {
      pivot = i;
      break;
    }
  }
  std::int64_t count = 0;
  Weight x = lo;
  while (true) {
    std::int64_t rest = target;
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (i != pivot) rest -= x[i] * c.xi[i];
    if (rest % c.xi[pivot] == 0) {
      x[pivot] = rest / c.xi[pivot];
      if (x[pivot] >= lo[pivot] && x[pivot] <= hi[pivot] && p.contains(x)) ++count;
    }
    x[pivot] = lo[pivot];
    std::size_t k = p.dim();
    while (k > 0) {
      if (k - 1 == pivot) {
        --k;
        continue;
      }
      if (x[k - 1] < hi[k - 1]) {
        ++x[k - 1];
        break;
      }
      x[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0) break;
  }
  return count;
}

ReductionRow reduce_at(std::int64_t gamma, const DelzantPolytope& p, const CircleData& c) {
  ReductionRow row;
  row.level = gamma;
  row.regular = is_regular_value(gamma, p, c);
  row.multiplicity = multiplicity(global_circle_character(p, c), gamma);
  if (row.regular) {
    row.reduced_index = reduced_lattice_count(gamma, p, c);
    row.agree = row.multiplicity == row.reduced_index;
  }
  return row;
}

std::vector<ReductionRow> qr_table(const DelzantPolytope& p, const CircleData& c) {
  const LevelRange r = mu_xi_range(p, c);
  const Character global = global_circle_character(p, c);
  std::vector<ReductionRow> rows;
  for (std::int64_t g = r.min; g <= r.max; ++g) {
    ReductionRow row;
    row.level = g;
    row.regular = !std::binary_search(r.critical_levels.begin(), r.critical_levels.end(), g);
    row.multiplicity = multiplicity(global, g);
    if (row.regular) {
      row.reduced_index = reduced_lattice_count(g, p, c);
      row.agree = row.multiplicity == row.reduced_index;
    }
    rows.push_back(row);
  }
  return rows;
}

bool qr_check(const DelzantPolytope& p, const CircleData& c) {
  for (const auto& row : qr_table(p, c)) {
    if (row.regular && !row.agree) return false;
  }
  return true;
}

bool shifting_trick_check(const DelzantPolytope& p, const CircleData& c) {
  const LevelRange r = mu_xi_range(p, c);
  // One level past each end checks the empty slices as well.
  for (std::int64_t g = r.min - 1; g <= r.max + 1; ++g) {
    if (!is_regular_value(g, p, c)) continue;
    const CircleData shifted{c.xi, c.shift + g};
    if (reduced_lattice_count(g, p, c) != reduced_lattice_count(0, p, shifted)) return false;
  }
  return true;
}

}  // namespace eqloc
