#include "eqloc/json_io.hpp"

#include <cmath>
#include <limits>

#include "eqloc/error.hpp"

namespace eqloc {

namespace {

json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class mpz_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string");
    return z;
  }
  throw ParseError("expected an integer");
}

Weight weight_from(const json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  Weight w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer array");
    w.push_back(x.get<std::int64_t>());
  }
  return w;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const Character& c) {
  json terms = json::array();
  for (const auto& [w, m] : c.terms()) terms.push_back({{"weight", w}, {"mult", mpz_json(m)}});
  return {{"rank", c.rank()}, {"terms", terms}};
}

Character character_from_json(const json& j) {
  try {
    Character c(j.at("rank").get<std::size_t>());
    for (const auto& t : j.at("terms")) c.add(weight_from(t.at("weight")), mpz_from(t.at("mult")));
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("character JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("character JSON: ") + e.what());
  }
}

json to_json(const DelzantPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
  return {{"dim", p.dim()}, {"facets", facets}};
}

DelzantPolytope polytope_from_json(const json& j) {
  std::size_t dim;
  std::vector<Facet> facets;
  try {
    dim = j.at("dim").get<std::size_t>();
    for (const auto& f : j.at("facets")) {
      facets.push_back({weight_from(f.at("normal")), f.at("offset").get<std::int64_t>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("polytope JSON: ") + e.what());
  }
  return build_polytope(dim, std::move(facets));
}

json to_json(const LevelComponent& comp) {
  json j = {{"level", comp.level.get_str()}, {"kind", to_string(comp.kind)}};
  if (comp.kind != ComponentKind::kAcyclic) j["gamma"] = comp.weight();
  if (comp.vertex) j["vertex"] = *comp.vertex;
  return j;
}

json to_json(const LocalIndexReport& report) {
  json comps = json::array();
  for (const auto& ci : report.components) {
    json j = to_json(ci.component);
    j["local"] = to_json(ci.local);
    comps.push_back(j);
  }
  return {{"components", comps},
          {"global", to_json(report.global)},
          {"localization_ok", report.localization_ok},
          {"vanishing_ok", report.vanishing_ok}};
}

json to_json(const ReductionRow& row) {
  return {{"level", row.level},
          {"regular", row.regular},
          {"reduced_index", row.regular ? json(row.reduced_index) : json(nullptr)},
          {"multiplicity", mpz_json(row.multiplicity)},
          {"agree", row.agree}};
}

json to_json(const spectral::ModeKernelResult& r) {
  json j = {{"mode", r.mode},         {"dim0", r.dim0},
            {"dim1", r.dim1},         {"weight", r.weight},
            {"threshold", r.threshold}, {"gap0", finite_or_null(r.gap0)},
            {"gap1", finite_or_null(r.gap1)}};
  if (r.concentration) j["concentration"] = *r.concentration;
  return j;
}

}  // namespace eqloc
