#include "eqloc/local_index.hpp"

#include "eqloc/equivariant_index.hpp"
#include "eqloc/error.hpp"

namespace eqloc {

Character local_index_at(const LevelComponent& component, const DelzantPolytope& p,
                         const CircleData& c) {
  if (component.kind == ComponentKind::kAcyclic) {
    throw PreconditionError("level " + component.level.get_str() +
                            " is L-acyclic: no local index is attached to it");
  }
  const std::int64_t gamma = component.weight();
  long count = 0;
  for (const auto& a : lattice_points(p)) {
    if (pairing(a, c.xi) - c.shift == gamma) ++count;
  }
  return Character::circle({{gamma, count}});
}

Character sum_of_components(const LocalIndexReport& report) {
  Character sum(1);
  for (const auto& ci : report.components) sum = char_add(sum, ci.local);
  return sum;
}

bool vanishing_holds(const LocalIndexReport& report) {
  for (const auto& ci : report.components) {
    const std::int64_t gamma = ci.component.weight();
    for (const auto& [w, m] : ci.local.terms()) {
      if (w.size() != 1 || w[0] != gamma || m < 0) return false;
    }
  }
  return true;
}

LocalIndexReport localization_check(const DelzantPolytope& p, const CircleData& c) {
  LocalIndexReport report;
  const auto comps = enumerate_components(p, c);
  report.components.resize(comps.size());
  const auto n = static_cast<std::int64_t>(comps.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    report.components[k] = {comps[k], local_index_at(comps[k], p, c)};
  }
  report.global = global_circle_character(p, c);
  report.localization_ok = sum_of_components(report) == report.global;
  report.vanishing_ok = vanishing_holds(report);
  return report;
}

bool vanishing_check(const DelzantPolytope& p, const CircleData& c) {
  return vanishing_holds(localization_check(p, c));
}

LocalIndexReport disjoint_union(const LocalIndexReport& a, const LocalIndexReport& b) {
  LocalIndexReport out;
  out.components = a.components;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  out.global = char_add(a.global, b.global);
  out.localization_ok = sum_of_components(out) == out.global;
  out.vanishing_ok = vanishing_holds(out);
  return out;
}

}  // namespace eqloc
