// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eqloc/equivariant_index.hpp"
#include "eqloc/local_index.hpp"
#include "eqloc/orbit_classifier.hpp"
#include "eqloc/presets.hpp"
#include "eqloc/reduction.hpp"
#include "eqloc/spectral_model.hpp"

using namespace eqloc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

const std::vector<std::pair<std::int64_t, std::int64_t>> kCp1 = {{1, 0}, {3, 1}, {5, -2}};
constexpr std::uint64_t kSeed = 20240601;
constexpr int kRandomCount = 200;

std::vector<ToricCase> presets() {
  std::vector<ToricCase> out;
  for (auto [k, m] : kCp1) out.push_back(preset_cp1(k, m));
  for (std::int64_t k : {2, 3})
    for (std::int64_t s : {0, 1}) out.push_back(preset_cp2(k, s));
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 3}, {4, 2}})
    out.push_back(preset_cp1xcp1(a, b));
  out.push_back(preset_hirzebruch(1, 1, 3));
  out.push_back(preset_hirzebruch(2, 1, 4, 2));
  return out;
}

std::vector<ToricCase> random_suite() {
  std::mt19937_64 rng(kSeed);
  std::vector<ToricCase> out;
  for (int i = 0; i < kRandomCount; ++i) out.push_back(random_delzant(rng, 500));
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  for (auto [k, m] : kCp1) {
    const auto tc = preset_cp1(k, m);
    Character expect(1);
    for (std::int64_t i = 0; i <= k; ++i) expect.add({i - m}, 1);
    if (global_circle_character(tc.polytope, tc.circle) != expect) {
      o.ok = false;
      o.detail += " mismatch at k=" + std::to_string(k);
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.ok = false;
  o.detail += " " + std::to_string(dt) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::vector<ToricCase> cases;
  for (auto [k, m] : kCp1) cases.push_back(preset_cp1(k, m));
  for (std::int64_t s : {0, 1}) cases.push_back(preset_cp2(3, s));
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 3}, {4, 2}})
    cases.push_back(preset_cp1xcp1(a, b));
  for (const auto& tc : cases) {
    const auto r = localization_check(tc.polytope, tc.circle);
    if (!r.localization_ok || sum_of_components(r) != r.global) {
      o.ok = false;
      o.detail += " " + tc.name;
    }
  }
  o.detail += " " + std::to_string(cases.size()) + " cases";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int checked = 0;
  for (auto [k, m] : kCp1) {
    const auto tc = preset_cp1(k, m);
    const auto r = localization_check(tc.polytope, tc.circle);
    if (r.components.size() != static_cast<std::size_t>(k + 1)) o.ok = false;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const auto level = static_cast<std::int64_t>(i) - m;
      if (r.components[i].local != Character::circle({{level, 1}})) o.ok = false;
      ++checked;
    }
  }
  o.detail = " " + std::to_string(checked) + " components";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::int64_t k = 3, m = 1;
  const auto tc = preset_cp1(k, m);
  const auto comps = enumerate_components(tc.polytope, tc.circle);
  for (std::int64_t g = -5; g <= 5; ++g) {
    const std::size_t expect = (0 < m + g && m + g < k) ? 3 : 2;
    const std::size_t got = non_gamma_acyclic(comps, g).size();
    if (got != expect) {
      o.ok = false;
      o.detail += " gamma=" + std::to_string(g) + ":" + std::to_string(got);
    }
  }
  o.detail += " gamma in [-5, 5]";
  return o;
}

struct RandomStats {
  int polytopes = 0;
  int max_dim = 0;
  std::size_t max_points = 0;
  int vanishing_violations = 0;
  int oracle_mismatches = 0;
  int qr_failures = 0;
  double seconds = 0.0;
};

RandomStats run_random_suite() {
  RandomStats st;
  const auto t0 = Clock::now();
  for (const auto& tc : random_suite()) {
    ++st.polytopes;
    st.max_dim = std::max(st.max_dim, static_cast<int>(tc.polytope.dim()));
    st.max_points = std::max(st.max_points, lattice_points(tc.polytope).size());
    const auto r = localization_check(tc.polytope, tc.circle);
    if (!r.vanishing_ok) ++st.vanishing_violations;
    const Character dan = danilov_character(tc.polytope);
    if (atiyah_bott_character(tc.polytope, tc.circle.xi) != restrict_to_circle(dan, tc.circle.xi))
      ++st.oracle_mismatches;
    if (!qr_check(tc.polytope, tc.circle)) ++st.qr_failures;
  }
  st.seconds = seconds_since(t0);
  return st;
}

Outcome criterion5(const RandomStats& st) {
  Outcome o;
  int preset_violations = 0;
  for (const auto& tc : presets())
    if (!vanishing_check(tc.polytope, tc.circle)) ++preset_violations;
  o.ok = preset_violations == 0 && st.vanishing_violations == 0 && st.polytopes >= 200 &&
         st.max_dim <= 3 && st.max_points <= 500;
  o.detail = " " + std::to_string(st.polytopes) + " random (dim <= " + std::to_string(st.max_dim) +
             ", <= " + std::to_string(st.max_points) + " points), violations " +
             std::to_string(st.vanishing_violations + preset_violations);
  return o;
}

Outcome criterion6(const RandomStats& st) {
  Outcome o;
  o.ok = st.oracle_mismatches == 0 && st.polytopes >= 200 && st.seconds < 60.0;
  o.detail = " mismatches " + std::to_string(st.oracle_mismatches) + ", suite " +
             std::to_string(st.seconds) + " s";
  return o;
}

Outcome criterion7(const RandomStats& st) {
  Outcome o;
  int levels = 0, failures = st.qr_failures;
  for (const auto& tc : presets()) {
    for (const auto& row : qr_table(tc.polytope, tc.circle)) {
      if (!row.regular) continue;
      ++levels;
      if (!row.agree) ++failures;
    }
  }
  o.ok = failures == 0;
  o.detail = " preset levels " + std::to_string(levels) + ", failures " + std::to_string(failures);
  return o;
}

// Cylinder at level i: (1,0) at mode i only and character {i - m : 1}.
bool cylinder_ok(std::int64_t i, std::int64_t m, double t, int grid, std::string& detail) {
  spectral::CylinderModel model;
  model.center = i;
  model.m = m;
  model.eps = 0.25;
  model.t = t;
  model.R = 6.0;
  model.grid_n = grid;
  model.n_lo = i - 5;
  model.n_hi = i + 5;
  const auto t0 = Clock::now();
  bool ok = true;
  try {
    const auto rep = spectral::spectral_local_index(model);
    for (const auto& r : rep.modes) {
      const bool expect_kernel = r.mode == i;
      if (r.dim0 != (expect_kernel ? 1 : 0) || r.dim1 != 0) ok = false;
    }
    if (rep.character != Character::circle({{i - m, 1}})) ok = false;
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(" [") + e.what() + "]";
  }
  const double dt = seconds_since(t0);
  if (dt >= 60.0) ok = false;
  if (!ok)
    detail += " cylinder(i=" + std::to_string(i) + ",t=" + std::to_string(t) +
              ",grid=" + std::to_string(grid) + ")";
  return ok;
}

Outcome criterion8() {
  Outcome o;
  int runs = 0;
  const auto t0 = Clock::now();
  // Every interior level of CP^1(3,1) in all three configurations, and the
  // interior levels of CP^1(5,-2) at the base configuration.
  const std::vector<std::pair<double, int>> configs{{50, 2001}, {100, 2001}, {50, 4001}};
  for (auto [k, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 1}, {5, -2}}) {
    for (std::int64_t i = 1; i < k; ++i) {
      for (std::size_t c = 0; c < (k == 3 ? configs.size() : 1); ++c) {
        o.ok = cylinder_ok(i, m, configs[c].first, configs[c].second, o.detail) && o.ok;
        ++runs;
      }
    }
    for (auto [pole, expect] : std::vector<std::pair<spectral::Pole, std::int64_t>>{
             {spectral::Pole::kZero, -m}, {spectral::Pole::kTop, k - m}}) {
      for (auto [t, grid] : std::vector<std::pair<double, int>>{{50, 2001}, {100, 4001}}) {
        const auto t1 = Clock::now();
        Character c(1);
        try {
          c = spectral::disc_model_index(k, m, pole, t, grid);
        } catch (const std::exception& e) {
          o.detail += std::string(" [") + e.what() + "]";
        }
        if (c != Character::circle({{expect, 1}}) || seconds_since(t1) >= 60.0) {
          o.ok = false;
          o.detail += " disc(k=" + std::to_string(k) + ")";
        }
        ++runs;
      }
    }
  }
  o.detail += " " + std::to_string(runs) + " runs, " + std::to_string(seconds_since(t0)) + " s";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int levels = 0;
  for (const auto& tc : presets()) {
    const auto r = mu_xi_range(tc.polytope, tc.circle);
    for (std::int64_t g = r.min - 1; g <= r.max + 1; ++g) {
      if (!is_regular_value(g, tc.polytope, tc.circle)) continue;
      ++levels;
      const CircleData shifted{tc.circle.xi, tc.circle.shift + g};
      if (reduced_lattice_count(g, tc.polytope, tc.circle) !=
          reduced_lattice_count(0, tc.polytope, shifted)) {
        o.ok = false;
        o.detail += " " + tc.name + "@" + std::to_string(g);
      }
    }
  }
  o.detail += " " + std::to_string(levels) + " regular levels";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> simple = {
      {"CP^1 global character", criterion1},
      {"localization formula", criterion2},
      {"CP^1 local index closed form", criterion3},
      {"(L,gamma)-acyclic census", criterion4},
  };
  int failed = 0;
  auto report = [&](int n, const char* name, const Outcome& o) {
    std::printf("criterion %d %s  %s:%s\n", n, o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.ok) ++failed;
  };
  int n = 1;
  for (const auto& [name, fn] : simple) report(n++, name, fn());
  const RandomStats st = run_random_suite();
  report(5, "vanishing theorem", criterion5(st));
  report(6, "oracle equivalence", criterion6(st));
  report(7, "[Q,R]=0", criterion7(st));
  report(8, "spectral reproduction", criterion8());
  report(9, "shifting trick", criterion9());
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
