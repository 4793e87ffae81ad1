#include "eqloc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "eqloc/equivariant_index.hpp"
#include "eqloc/error.hpp"
#include "eqloc/json_io.hpp"
#include "eqloc/local_index.hpp"
#include "eqloc/orbit_classifier.hpp"
#include "eqloc/presets.hpp"
#include "eqloc/reduction.hpp"
#include "eqloc/spectral_model.hpp"

namespace eqloc {

namespace {

struct InputOptions {
  std::string file;
  std::string preset;
  PresetParams params;
  std::vector<std::int64_t> xi;
  std::int64_t shift = 0;
  CLI::Option* shift_opt = nullptr;
  bool human = false;
};

void add_preset_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--preset", in.preset, "cp1, cp2, cp1xcp1, hirzebruch or point");
  cmd->add_option("--k", in.params.k, "degree k (cp1, cp2) or first side (cp1xcp1)");
  cmd->add_option("--m", in.params.m, "lift shift of cp1");
  cmd->add_option("--k2", in.params.k2, "second side of cp1xcp1");
  cmd->add_option("--a", in.params.a, "twist of the Hirzebruch surface");
  cmd->add_option("--b", in.params.b, "height of the Hirzebruch trapezoid");
  cmd->add_option("--c", in.params.c, "width of the Hirzebruch trapezoid");
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.file, "polytope JSON file");
  add_preset_options(cmd, in);
  cmd->add_option("--xi", in.xi, "circle generator, comma separated")->delimiter(',');
  in.shift_opt = cmd->add_option("--shift", in.shift, "lift shift s");
  cmd->add_flag("--human", in.human, "print a table instead of JSON");
}

Weight int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an integer array");
  Weight w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must be an integer array");
    w.push_back(x.get<std::int64_t>());
  }
  return w;
}

// Accepts {"polytope": P, "xi": [...], "shift": s} or a bare polytope object
// with optional "xi" and "shift" keys.
ToricCase case_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ParseError("'" + path + "': expected a JSON object");
  ToricCase tc;
  tc.name = path;
  tc.polytope = polytope_from_json(j.contains("polytope") ? j.at("polytope") : j);
  if (j.contains("xi")) tc.circle.xi = int_array(j.at("xi"), "xi");
  if (j.contains("shift")) {
    if (!j.at("shift").is_number_integer()) throw ParseError("shift must be an integer");
    tc.circle.shift = j.at("shift").get<std::int64_t>();
  }
  return tc;
}

ToricCase load_case(const InputOptions& in) {
  ToricCase tc;
  if (!in.preset.empty() && !in.file.empty())
    throw ParseError("give either an input file or --preset, not both");
  if (!in.preset.empty()) {
    tc = preset_by_name(in.preset, in.params);
  } else if (!in.file.empty()) {
    tc = case_from_file(in.file);
  } else {
    throw ParseError("no input: give a polytope JSON file or --preset");
  }
  if (!in.xi.empty()) tc.circle.xi = in.xi;
  if (in.shift_opt != nullptr && in.shift_opt->count() > 0) tc.circle.shift = in.shift;
  if (tc.circle.xi.empty() && tc.polytope.dim() == 1) tc.circle.xi = {1};
  if (tc.circle.xi.empty() && tc.polytope.dim() > 0)
    throw ParseError("no circle given: pass --xi or an \"xi\" key");
  require_generic(tc.polytope, tc.circle);
  return tc;
}

std::string format_weight(const Weight& w) {
  if (w.size() == 1) return std::to_string(w[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string format_character(const Character& c) {
  if (c.empty()) return "0";
  std::string s = "{";
  bool first = true;
  for (const auto& [w, m] : c.terms()) {
    s += (first ? "" : ", ") + format_weight(w) + ":" + m.get_str();
    first = false;
  }
  return s + "}";
}

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

json case_header(const ToricCase& tc) {
  return {{"case", tc.name},
          {"polytope", to_json(tc.polytope)},
          {"xi", tc.circle.xi},
          {"shift", tc.circle.shift}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Pads every column of a table to its widest entry.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

// index

int cmd_index(const InputOptions& in, std::ostream& out) {
  const ToricCase tc = load_case(in);
  const Character dan = danilov_character(tc.polytope);
  const Character ab = atiyah_bott_character(tc.polytope, tc.circle.xi);
  const bool agree = restrict_to_circle(dan, tc.circle.xi) == ab;
  const Character global = global_circle_character(tc.polytope, tc.circle);
  if (in.human) {
    print_table(out, {{"danilov", format_character(dan)},
                      {"atiyah_bott", format_character(ab)},
                      {"global", format_character(global)},
                      {"agree", agree ? "yes" : "no"}});
  } else {
    json j = case_header(tc);
    j["danilov"] = to_json(dan);
    j["atiyah_bott"] = to_json(ab);
    j["global"] = to_json(global);
    j["agree"] = agree;
    emit(out, j);
  }
  return agree ? kExitOk : kExitCheckFailed;
}

// classify

mpq_class parse_level(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw ParseError("bad level '" + s + "', expected an integer or p/q");
  q.canonicalize();
  return q;
}

int cmd_classify(const InputOptions& in, const std::string& level,
                 const std::optional<std::int64_t>& gamma, std::ostream& out) {
  const ToricCase tc = load_case(in);
  std::vector<LevelComponent> comps;
  if (!level.empty()) {
    comps.push_back(classify_level(tc.polytope, tc.circle, parse_level(level)));
  } else {
    comps = enumerate_components(tc.polytope, tc.circle);
  }
  auto gamma_acyclic = [&](const LevelComponent& c) {
    return is_L_gamma_acyclic(c.level, *gamma, c.kind == ComponentKind::kFixedVertex);
  };
  if (in.human) {
    std::vector<std::vector<std::string>> rows{{"level", "kind", "gamma*"}};
    if (gamma) rows[0].push_back("(L," + std::to_string(*gamma) + ")-acyclic");
    for (const auto& c : comps) {
      rows.push_back({c.level.get_str(), to_string(c.kind),
                      c.kind == ComponentKind::kAcyclic ? "-" : std::to_string(c.weight())});
      if (gamma) rows.back().push_back(gamma_acyclic(c) ? "yes" : "no");
    }
    print_table(out, rows);
  } else {
    json j = case_header(tc);
    json arr = json::array();
    for (const auto& c : comps) {
      json e = to_json(c);
      if (gamma) e["gamma_acyclic"] = gamma_acyclic(c);
      arr.push_back(e);
    }
    j["components"] = arr;
    if (gamma) {
      j["gamma"] = *gamma;
      j["non_gamma_acyclic"] = non_gamma_acyclic(comps, *gamma).size();
    }
    emit(out, j);
  }
  return kExitOk;
}

// localize

int cmd_localize(const InputOptions& in, std::ostream& out) {
  const ToricCase tc = load_case(in);
  const LocalIndexReport report = localization_check(tc.polytope, tc.circle);
  if (in.human) {
    std::vector<std::vector<std::string>> rows{{"level", "kind", "local", "vanishing"}};
    for (const auto& ci : report.components) {
      const bool single = ci.local.size() == 1 &&
                          multiplicity(ci.local, ci.component.weight()) == ci.local.total();
      rows.push_back({ci.component.level.get_str(), to_string(ci.component.kind),
                      format_character(ci.local), mark(single)});
    }
    print_table(out, rows);
    out << "sum of local indices  " << format_character(sum_of_components(report)) << "\n";
    out << "global index          " << format_character(report.global) << "\n";
    out << "localization          " << mark(report.localization_ok) << "\n";
    out << "vanishing             " << mark(report.vanishing_ok) << "\n";
  } else {
    json j = case_header(tc);
    j.update(to_json(report));
    emit(out, j);
  }
  return report.localization_ok && report.vanishing_ok ? kExitOk : kExitCheckFailed;
}

// reduce / qr-check

int cmd_reduce(const InputOptions& in, std::int64_t level, std::ostream& out) {
  const ToricCase tc = load_case(in);
  reduced_lattice_count(level, tc.polytope, tc.circle);  // throws at a critical value
  const ReductionRow row = reduce_at(level, tc.polytope, tc.circle);
  if (in.human) {
    print_table(out, {{"level", "reduced index", "multiplicity", "agree"},
                      {std::to_string(row.level), std::to_string(row.reduced_index),
                       row.multiplicity.get_str(), row.agree ? "yes" : "no"}});
  } else {
    json j = case_header(tc);
    j.update(to_json(row));
    emit(out, j);
  }
  return row.agree ? kExitOk : kExitCheckFailed;
}

int cmd_qr_check(const InputOptions& in, std::ostream& out) {
  const ToricCase tc = load_case(in);
  const auto rows = qr_table(tc.polytope, tc.circle);
  const bool qr_ok = qr_check(tc.polytope, tc.circle);
  const bool shift_ok = shifting_trick_check(tc.polytope, tc.circle);
  if (in.human) {
    std::vector<std::vector<std::string>> t{{"level", "regular", "reduced index", "multiplicity",
                                             "agree"}};
    for (const auto& r : rows) {
      t.push_back({std::to_string(r.level), r.regular ? "yes" : "critical",
                   r.regular ? std::to_string(r.reduced_index) : "-", r.multiplicity.get_str(),
                   r.regular ? (r.agree ? "yes" : "no") : "-"});
    }
    print_table(out, t);
    out << "[Q,R]=0         " << mark(qr_ok) << "\n";
    out << "shifting trick  " << mark(shift_ok) << "\n";
  } else {
    json j = case_header(tc);
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    j["rows"] = arr;
    j["qr_ok"] = qr_ok;
    j["shift_ok"] = shift_ok;
    emit(out, j);
  }
  return qr_ok && shift_ok ? kExitOk : kExitCheckFailed;
}

// spectral

struct SpectralOptions {
  std::vector<std::int64_t> cp1;
  std::int64_t level = 0;
  double t = 50.0;
  int grid = 2001;
  std::int64_t modes = 5;
  double eps = 0.25;
  std::string ramp = "cubic";
  bool human = false;
};

struct SpectralRun {
  std::string model;
  spectral::SpectralReport report;
  Character expected{1};
};

spectral::Ramp parse_ramp(const std::string& s) {
  if (s == "cubic") return spectral::Ramp::kCubic;
  if (s == "quintic") return spectral::Ramp::kQuintic;
  throw ParseError("unknown ramp '" + s + "', expected cubic or quintic");
}

// Level i of CP^1(k, m): a disc at i = 0 and i = k, a cylinder otherwise.
SpectralRun run_spectral(std::int64_t k, std::int64_t m, std::int64_t i, double t, int grid,
                         std::int64_t half_width, double eps, spectral::Ramp ramp) {
  if (k < 1) throw PreconditionError("spectral: CP^1 needs k >= 1");
  if (i < 0 || i > k)
    throw PreconditionError("spectral: level " + std::to_string(i) + " is outside [0, " +
                            std::to_string(k) + "]");
  if (half_width < 0) throw PreconditionError("spectral: --modes must be nonnegative");
  SpectralRun run;
  run.expected = Character::circle({{i - m, 1}});
  if (i > 0 && i < k) {
    spectral::CylinderModel model;
    model.center = i;
    model.m = m;
    model.eps = eps;
    model.t = t;
    model.grid_n = grid;
    model.n_lo = i - half_width;
    model.n_hi = i + half_width;
    model.rho = ramp;
    run.model = "cylinder";
    run.report = spectral::spectral_local_index(model);
  } else {
    spectral::DiscModel model;
    model.k = k;
    model.m = m;
    model.pole = i == 0 ? spectral::Pole::kZero : spectral::Pole::kTop;
    model.eps = eps;
    model.t = t;
    model.grid_n = grid;
    model.n_lo = -half_width;
    model.n_hi = half_width;
    model.rho = ramp;
    run.model = i == 0 ? "disc_zero" : "disc_top";
    run.report = spectral::disc_local_index(model);
  }
  return run;
}

json spectral_json(const SpectralRun& run, std::int64_t level) {
  json modes = json::array();
  for (const auto& r : run.report.modes) modes.push_back(to_json(r));
  return {{"model", run.model},
          {"level", level},
          {"modes", modes},
          {"character", to_json(run.report.character)},
          {"expected", to_json(run.expected)},
          {"agree", run.report.character == run.expected}};
}

int cmd_spectral(const SpectralOptions& so, std::ostream& out) {
  if (so.cp1.size() != 2) throw ParseError("--cp1 takes two integers k m");
  const SpectralRun run = run_spectral(so.cp1[0], so.cp1[1], so.level, so.t, so.grid, so.modes,
                                       so.eps, parse_ramp(so.ramp));
  const bool agree = run.report.character == run.expected;
  if (so.human) {
    std::vector<std::vector<std::string>> rows{{"mode", "dim0", "dim1", "weight", "gap0", "gap1"}};
    auto fmt = [](double x) {
      std::ostringstream s;
      s.precision(3);
      s << x;
      return s.str();
    };
    for (const auto& r : run.report.modes) {
      rows.push_back({std::to_string(r.mode), std::to_string(r.dim0), std::to_string(r.dim1),
                      std::to_string(r.weight), fmt(r.gap0), fmt(r.gap1)});
    }
    out << "model " << run.model << "\n";
    print_table(out, rows);
    out << "character  " << format_character(run.report.character) << "\n";
    out << "expected   " << format_character(run.expected) << "  " << mark(agree) << "\n";
  } else {
    json j = {{"k", so.cp1[0]}, {"m", so.cp1[1]}, {"t", so.t}, {"grid", so.grid}};
    j.update(spectral_json(run, so.level));
    emit(out, j);
  }
  return agree ? kExitOk : kExitCheckFailed;
}

// verify-all

struct SuiteCase {
  ToricCase tc;
  std::optional<std::pair<std::int64_t, std::int64_t>> cp1;  // (k, m) for the spectral check
};

std::vector<SuiteCase> default_suite() {
  std::vector<SuiteCase> s;
  for (auto [k, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 0}, {3, 1}, {5, -2}})
    s.push_back({preset_cp1(k, m), std::make_pair(k, m)});
  for (std::int64_t sh : {0, 1}) s.push_back({preset_cp2(2, sh), std::nullopt});
  s.push_back({preset_cp1xcp1(2, 3), std::nullopt});
  s.push_back({preset_hirzebruch(1, 1, 3), std::nullopt});
  s.push_back({preset_hirzebruch(2, 1, 4, 2), std::nullopt});
  return s;
}

json verify_case(const SuiteCase& sc, bool with_spectral, bool& all_ok) {
  const auto& p = sc.tc.polytope;
  const auto& c = sc.tc.circle;
  require_generic(p, c);
  const Character dan = danilov_character(p);
  const bool index_ok = restrict_to_circle(dan, c.xi) == atiyah_bott_character(p, c.xi);
  const LocalIndexReport report = localization_check(p, c);
  const bool qr_ok = qr_check(p, c);
  const bool shift_ok = shifting_trick_check(p, c);
  json j = {{"case", sc.tc.name},
            {"dim", p.dim()},
            {"xi", c.xi},
            {"shift", c.shift},
            {"global", to_json(report.global)},
            {"index_ok", index_ok},
            {"localization_ok", report.localization_ok},
            {"vanishing_ok", report.vanishing_ok},
            {"qr_ok", qr_ok},
            {"shift_ok", shift_ok}};
  bool ok = index_ok && report.localization_ok && report.vanishing_ok && qr_ok && shift_ok;
  if (with_spectral && sc.cp1) {
    const auto [k, m] = *sc.cp1;
    j["k"] = k;
    j["m"] = m;
    bool spectral_ok = true;
    json levels = json::array();
    for (std::int64_t i = 0; i <= k; ++i) {
      const SpectralRun run = run_spectral(k, m, i, 50.0, 2001, 5, 0.25, spectral::Ramp::kCubic);
      const bool agree = run.report.character == run.expected;
      spectral_ok = spectral_ok && agree;
      levels.push_back({{"level", i},
                        {"model", run.model},
                        {"character", to_json(run.report.character)},
                        {"agree", agree}});
    }
    j["spectral"] = levels;
    j["spectral_ok"] = spectral_ok;
    ok = ok && spectral_ok;
  }
  j["ok"] = ok;
  all_ok = all_ok && ok;
  return j;
}

void print_verify_human(std::ostream& out, const json& report) {
  std::vector<std::vector<std::string>> rows{
      {"case", "global", "index", "localization", "vanishing", "qr", "shift", "spectral"}};
  for (const auto& j : report.at("cases")) {
    rows.push_back({j.at("case").get<std::string>(), format_character(character_from_json(j.at("global"))),
                    mark(j.at("index_ok")), mark(j.at("localization_ok")),
                    mark(j.at("vanishing_ok")), mark(j.at("qr_ok")), mark(j.at("shift_ok")),
                    j.contains("spectral_ok") ? mark(j.at("spectral_ok")) : "-"});
  }
  print_table(out, rows);
  if (report.contains("random")) {
    const auto& r = report.at("random");
    out << "random suite (seed " << r.at("seed").get<long>() << "): " << r.at("passed").get<long>()
        << "/" << r.at("count").get<long>() << " passed\n";
  }
  out << "overall " << mark(report.at("ok")) << "\n";
}

int cmd_verify_all(const InputOptions& in, std::int64_t random_count, std::uint64_t seed,
                   bool no_spectral, std::ostream& out) {
  std::vector<SuiteCase> suite;
  if (!in.preset.empty()) {
    ToricCase tc = load_case(in);
    std::optional<std::pair<std::int64_t, std::int64_t>> cp1;
    if (in.preset == "cp1") cp1 = std::make_pair(in.params.k, tc.circle.shift);
    suite.push_back({std::move(tc), cp1});
  } else if (!in.file.empty()) {
    suite.push_back({load_case(in), std::nullopt});
  } else {
    suite = default_suite();
  }
  bool all_ok = true;
  json cases = json::array();
  for (const auto& sc : suite) cases.push_back(verify_case(sc, !no_spectral, all_ok));
  json report = {{"cases", cases}};
  if (random_count > 0) {
    std::mt19937_64 rng(seed);
    json failures = json::array();
    std::int64_t passed = 0;
    for (std::int64_t i = 0; i < random_count; ++i) {
      SuiteCase sc{random_delzant(rng), std::nullopt};
      sc.tc.name = "random#" + std::to_string(i);
      bool ok = true;
      json j = verify_case(sc, false, ok);
      if (ok) {
        ++passed;
      } else {
        j["polytope"] = to_json(sc.tc.polytope);
        failures.push_back(j);
      }
    }
    all_ok = all_ok && passed == random_count;
    report["random"] = {
        {"seed", seed}, {"count", random_count}, {"passed", passed}, {"failures", failures}};
  }
  report["ok"] = all_ok;
  if (in.human) {
    print_verify_human(out, report);
  } else {
    emit(out, report);
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant index localization checks for toric manifolds", "eqloc"};
  app.require_subcommand(1);

  InputOptions in_index, in_classify, in_localize, in_reduce, in_qr, in_verify;
  std::function<int()> action;

  auto* index = app.add_subcommand("index", "Danilov and fixed-point index characters");
  add_input_options(index, in_index);
  index->callback([&] { action = [&] { return cmd_index(in_index, out); }; });

  std::string classify_level_str;
  std::int64_t gamma = 0;
  auto* classify = app.add_subcommand("classify", "non-acyclic level components");
  add_input_options(classify, in_classify);
  classify->add_option("--level", classify_level_str, "classify a single level, integer or p/q");
  auto* gamma_opt = classify->add_option("--gamma", gamma, "report (L,gamma)-acyclicity");
  classify->callback([&] {
    action = [&] {
      std::optional<std::int64_t> g;
      if (gamma_opt->count() > 0) g = gamma;
      return cmd_classify(in_classify, classify_level_str, g, out);
    };
  });

  auto* localize = app.add_subcommand("localize", "local indices and the localization formula");
  add_input_options(localize, in_localize);
  localize->callback([&] { action = [&] { return cmd_localize(in_localize, out); }; });

  std::int64_t reduce_level = 0;
  auto* reduce = app.add_subcommand("reduce", "index of the reduced space at one level");
  add_input_options(reduce, in_reduce);
  reduce->add_option("--level", reduce_level, "normalized level gamma*")->required();
  reduce->callback([&] { action = [&] { return cmd_reduce(in_reduce, reduce_level, out); }; });

  auto* qr = app.add_subcommand("qr-check", "quantization commutes with reduction at every level");
  add_input_options(qr, in_qr);
  qr->callback([&] { action = [&] { return cmd_qr_check(in_qr, out); }; });

  SpectralOptions so;
  auto* spectral_cmd = app.add_subcommand("spectral", "mode-by-mode kernel of the deformed operator");
  spectral_cmd->add_option("--cp1", so.cp1, "k m")->expected(2)->required();
  spectral_cmd->add_option("--level", so.level, "orbit level i in [0, k]")->required();
  spectral_cmd->add_option("--t", so.t, "deformation strength");
  spectral_cmd->add_option("--grid", so.grid, "grid points");
  spectral_cmd->add_option("--modes", so.modes, "half width of the mode window");
  spectral_cmd->add_option("--eps", so.eps, "neighbourhood radius");
  spectral_cmd->add_option("--ramp", so.ramp, "cutoff shape: cubic or quintic");
  spectral_cmd->add_flag("--human", so.human, "print a table instead of JSON");
  spectral_cmd->callback([&] { action = [&] { return cmd_spectral(so, out); }; });

  std::int64_t random_count = 0;
  std::uint64_t seed = 1;
  bool no_spectral = false;
  auto* verify = app.add_subcommand("verify-all", "run every check on the preset suite");
  add_input_options(verify, in_verify);
  verify->add_option("--random", random_count, "number of random Delzant polytopes");
  verify->add_option("--seed", seed, "seed of the random suite");
  verify->add_flag("--no-spectral", no_spectral, "skip the spectral model");
  verify->callback([&] {
    action = [&] { return cmd_verify_all(in_verify, random_count, seed, no_spectral, out); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace eqloc
