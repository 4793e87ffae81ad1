#include "eqloc/spectral_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <lapacke.h>

#include "eqloc/error.hpp"

namespace eqloc::spectral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ramp(Ramp shape, double v) {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  switch (shape) {
    case Ramp::kCubic: return v * v * (3.0 - 2.0 * v);
    case Ramp::kQuintic: return v * v * v * (v * (6.0 * v - 15.0) + 10.0);
  }
  return v;
}

// Odd C^1 saturation: identity on |u| <= 1/2, constant +-1 for |u| >= 3/2.
// The derivative falls from 1 to 0 along a cubic smoothstep in between.
double stretch(double u) {
  const double a = std::abs(u);
  double s;
  if (a <= 0.5) {
    s = a;
  } else if (a >= 1.5) {
    s = 1.0;
  } else {
    const double v = a - 0.5;
    s = 0.5 + v - v * v * v + 0.5 * v * v * v * v;
  }
  return u < 0 ? -s : s;
}

double stretch_derivative(double u) {
  const double a = std::abs(u);
  if (a <= 0.5) return 1.0;
  if (a >= 1.5) return 0.0;
  return 1.0 - ramp(Ramp::kCubic, a - 0.5);
}

void check_grid(int grid_n, double length, double feature, const char* what) {
  if (grid_n < 3) throw PreconditionError("spectral grid needs at least 3 points");
  const double h = length / (grid_n - 1);
  if (h > feature / 16.0) {
    throw PreconditionError(std::string("grid too coarse: fewer than 16 points across the ") +
                            what + " (h = " + std::to_string(h) + ")");
  }
}

// Pins the component that cannot decay into each end; a vanishing end
// coefficient leaves the truncated operator without a spectral gap.
void set_end_conditions(ModeOperator& op) {
  const double left = op.q.front();
  const double right = op.q.back();
  if (left == 0.0 || right == 0.0) {
    throw IndeterminateError("mode " + std::to_string(op.mode) +
                                 ": end coefficient vanishes, operator is not Fredholm "
                                 "(no deformation on the end)",
                             0, 0);
  }
  op.pin_left = left > 0.0;
  op.pin_right = right < 0.0;
}

struct Entry {
  std::size_t col;
  double val;
};

// Row j couples nodes j and j+1; pinned nodes drop out of the column space.
std::vector<std::vector<Entry>> assemble(const ModeOperator& op) {
  const std::size_t n_nodes = op.nodes.size();
  const std::size_t first = op.pin_left ? 1 : 0;
  const std::size_t last = op.pin_right ? n_nodes - 2 : n_nodes - 1;
  std::vector<std::vector<Entry>> rows(op.rows());
  for (std::size_t j = 0; j < op.rows(); ++j) {
    const double a = -1.0 / op.h + 0.5 * op.q[j];
    const double b = 1.0 / op.h + 0.5 * op.q[j];
    if (j >= first && j <= last) rows[j].push_back({j - first, a});
    if (j + 1 >= first && j + 1 <= last) rows[j].push_back({j + 1 - first, b});
  }
  return rows;
}

// Number of smallest singular values computed per side; kernels of the model
// operators have dimension at most one, so this leaves room for the gap.
constexpr lapack_int kSmallest = 8;

// Smallest singular values of an upper bidiagonal matrix, ascending.
std::vector<double> bidiagonal_singular_values(std::vector<double> d, std::vector<double> e) {
  const auto n = static_cast<lapack_int>(d.size());
  if (e.empty()) e.push_back(0.0);
  const lapack_int want = std::min(kSmallest, n);
  std::vector<double> s(static_cast<std::size_t>(n));
  std::vector<lapack_int> iwork(12 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  double dummy = 0.0;
  // Index range counts from the largest singular value.
  const lapack_int info =
      LAPACKE_dbdsvdx(LAPACK_COL_MAJOR, 'U', 'N', 'I', n, d.data(), e.data(), 0.0, 0.0,
                      n - want + 1, n, &found, s.data(), &dummy, 1, iwork.data());
  if (info != 0) throw std::runtime_error("dbdsvdx failed: info " + std::to_string(info));
  s.resize(static_cast<std::size_t>(found));
  for (auto& x : s) x = std::abs(x);
  std::sort(s.begin(), s.end());
  return s;
}

KernelCount count_kernel(const std::vector<double>& sv, double threshold, std::int64_t mode,
                         const char* side) {
  KernelCount kc;
  kc.smallest = sv.empty() ? 0.0 : sv.front();
  while (kc.dim < static_cast<int>(sv.size()) && sv[static_cast<std::size_t>(kc.dim)] < threshold)
    ++kc.dim;
  if (kc.dim == static_cast<int>(sv.size())) {
    throw IndeterminateError("mode " + std::to_string(mode) + ", " + side +
                                 ": every computed singular value is below the threshold",
                             kc.dim, kc.dim);
  }
  const double next = sv[static_cast<std::size_t>(kc.dim)];
  const double below = kc.dim > 0 ? sv[static_cast<std::size_t>(kc.dim - 1)] : threshold;
  // A singular value at roundoff level of |A| is an exact zero.
  const double roundoff = std::numeric_limits<double>::epsilon() * threshold / kKernelThresholdRel;
  kc.gap_ratio = below > roundoff ? next / below : std::numeric_limits<double>::infinity();
  if (kc.gap_ratio < kGapRatio) {
    throw IndeterminateError("mode " + std::to_string(mode) + ", " + side +
                                 ": no spectral gap at the kernel threshold (ratio " +
                                 std::to_string(kc.gap_ratio) + ")",
                             kc.dim, kc.dim + 1);
  }
  return kc;
}

template <class Model>
ModeKernelResult kernel_result(const Model& model, std::int64_t n, std::int64_t weight,
                               double radius) {
  const ModeOperator op = build_mode_operator(model, n);
  const ModeSpectrum spectrum = mode_spectrum(op);
  ModeKernelResult r;
  r.mode = n;
  r.weight = weight;
  r.threshold = kKernelThresholdRel * op.norm_estimate();
  const KernelCount k0 = count_kernel(spectrum.degree0, r.threshold, n, "degree 0");
  const KernelCount k1 = count_kernel(spectrum.degree1, r.threshold, n, "degree 1");
  r.dim0 = k0.dim;
  r.dim1 = k1.dim;
  r.gap0 = k0.gap_ratio;
  r.gap1 = k1.gap_ratio;
  if (r.dim0 > 0) r.concentration = mass_fraction(op, kernel_vector(op), radius);
  return r;
}

std::int64_t disc_weight(const DiscModel& model, std::int64_t n) {
  return model.pole == Pole::kZero ? n - model.m : (model.k - model.m) - n;
}

double cylinder_radius(const CylinderModel& model) {
  return model.t > 0 ? 3.0 / std::sqrt(model.t) : model.R;
}

double disc_radius(const DiscModel& model) { return 2.0 * std::sqrt(model.eps); }

void validate(const CylinderModel& model) {
  if (!(model.eps > 0.0 && model.eps < 0.5)) {
    throw PreconditionError("cylinder half-width must lie in (0, 1/2)");
  }
  if (model.center < model.n_lo || model.center > model.n_hi) {
    throw PreconditionError("mode window must contain the centre level");
  }
  if (model.t < 0.0) throw PreconditionError("deformation strength must be nonnegative");
  const double pad = model.t > 0 ? 5.0 / std::sqrt(model.t) : 0.0;
  if (model.R < 2.0 * model.eps + pad) {
    throw PreconditionError("truncation radius does not reach the translation-invariant end");
  }
  check_grid(model.grid_n, 2.0 * model.R, model.eps, "cutoff ramp");
}

void validate(const DiscModel& model) {
  if (!(model.eps > 0.0 && model.eps < 1.0)) {
    throw PreconditionError("disc radius^2 must lie in (0, 1)");
  }
  if (model.k < 1) throw PreconditionError("CP^1 needs k >= 1");
  if (0 < model.n_lo || 0 > model.n_hi) {
    throw PreconditionError("mode window must contain the radial mode 0");
  }
  if (model.t < 0.0) throw PreconditionError("deformation strength must be nonnegative");
  const double sc = std::sqrt(model.eps);
  if (model.R < 2.0 * sc + 5.0 / std::sqrt(1.0 + model.t)) {
    throw PreconditionError("truncation radius does not reach the translation-invariant end");
  }
  check_grid(model.grid_n, model.R, sc, "cutoff ramp");
}

SpectralReport finish(std::vector<ModeKernelResult> modes) {
  SpectralReport rep;
  rep.modes = std::move(modes);
  for (const auto& r : rep.modes) rep.character.add(Weight{r.weight}, r.dim0 - r.dim1);
  return rep;
}

}  // namespace

double t_min(double eps) { return 25.0 / (eps * eps); }

double ModeOperator::norm_estimate() const {
  double best = 0.0;
  for (double qj : q) best = std::max(best, std::abs(-1.0 / h + 0.5 * qj) + std::abs(1.0 / h + 0.5 * qj));
  return best;
}

ModeOperator build_mode_operator(const CylinderModel& model, std::int64_t n) {
  validate(model);
  if (n < model.n_lo || n > model.n_hi) throw PreconditionError("mode outside window");
  ModeOperator op;
  op.mode = n;
  op.center = static_cast<double>(model.center);
  const auto cells = static_cast<std::size_t>(model.grid_n - 1);
  const double lo = op.center - model.R;
  op.h = 2.0 * model.R / static_cast<double>(cells);
  op.nodes.resize(cells + 1);
  for (std::size_t j = 0; j <= cells; ++j) op.nodes[j] = lo + op.h * static_cast<double>(j);
  op.q.resize(cells);
  for (std::size_t j = 0; j < cells; ++j) {
    const double x = lo + op.h * (static_cast<double>(j) + 0.5);
    const double u = (x - op.center) / model.eps;
    const double r = op.center + model.eps * stretch(u);
    const double rho = ramp(model.rho, std::abs(u) - 1.0);
    // Orbit-direction de Rham term of mode e^{2 pi i n theta}.
    op.q[j] = model.t * rho * kTwoPi * (r - static_cast<double>(n));
  }
  set_end_conditions(op);
  return op;
}

ModeOperator build_mode_operator(const DiscModel& model, std::int64_t n) {
  validate(model);
  if (n < model.n_lo || n > model.n_hi) throw PreconditionError("mode outside window");
  ModeOperator op;
  op.mode = n;
  op.center = 0.0;
  const auto cells = static_cast<std::size_t>(model.grid_n - 1);
  op.h = model.R / static_cast<double>(cells);
  op.nodes.resize(cells + 1);
  for (std::size_t j = 0; j <= cells; ++j) op.nodes[j] = op.h * static_cast<double>(j);
  op.q.resize(cells);
  const double sc = std::sqrt(model.eps);
  for (std::size_t j = 0; j < cells; ++j) {
    const double s = op.h * (static_cast<double>(j) + 0.5);
    const double sigma = sc * stretch(s / sc);      // circle radius, frozen on the end
    const double dsigma = stretch_derivative(s / sc);
    const double r = sigma * sigma;                 // level |w|^2
    const double rho = ramp(model.rho, s / sc - 1.0);
    // d-bar on e^{i n phi}: f' + (r - n)/s f; the deformation scales the
    // orbit term; -sigma'/(2 sigma) comes from the half-density.
    op.q[j] = (1.0 + model.t * rho) * (r - static_cast<double>(n)) / sigma -
              0.5 * dsigma / sigma;
  }
  set_end_conditions(op);
  return op;
}

ModeSpectrum mode_spectrum(const ModeOperator& op) {
  const auto rows = assemble(op);
  const std::size_t R = op.rows();
  const std::size_t C = op.cols();
  std::vector<double> d, e;
  // Reduce every shape to a square upper bidiagonal B; for rectangular A the
  // extra zero of B belongs to the larger side.
  enum class Extra { kNone, kDegree0, kDegree1 } extra = Extra::kNone;
  auto val = [&](std::size_t r, std::size_t c) {
    for (const auto& en : rows[r])
      if (en.col == c) return en.val;
    return 0.0;
  };
  if (C == R + 1 || C == R) {
    // Upper bidiagonal A itself (pin_right or no pins) or a lower one (pin_left).
    const bool lower = op.pin_left && !op.pin_right;
    if (lower) {
      for (std::size_t j = 0; j < R; ++j) d.push_back(val(j, j));
      for (std::size_t j = 0; j + 1 < R; ++j) e.push_back(val(j + 1, j));
    } else {
      for (std::size_t j = 0; j < R; ++j) d.push_back(val(j, j));
      for (std::size_t j = 0; j + 1 < C; ++j) e.push_back(val(j, j + 1));
      if (C == R + 1) {
        d.push_back(0.0);
        extra = Extra::kDegree0;
      }
    }
  } else if (C + 1 == R) {
    // Both ends pinned: work with the wide A^T.
    for (std::size_t c = 0; c < C; ++c) d.push_back(val(c, c));
    for (std::size_t c = 0; c < C; ++c) e.push_back(val(c + 1, c));
    d.push_back(0.0);
    extra = Extra::kDegree1;
  } else {
    throw std::logic_error("unexpected mode operator shape");
  }
  const auto sv = bidiagonal_singular_values(std::move(d), std::move(e));
  ModeSpectrum spectrum;
  auto without_smallest = std::vector<double>(sv.begin() + 1, sv.end());
  spectrum.degree0 = extra == Extra::kDegree1 ? without_smallest : sv;
  spectrum.degree1 = extra == Extra::kDegree0 ? without_smallest : sv;
  return spectrum;
}

std::vector<double> kernel_vector(const ModeOperator& op) {
  const auto rows = assemble(op);
  const std::size_t C = op.cols();
  std::vector<double> diag(C, 0.0), off(C > 0 ? C - 1 : 0, 0.0);
  for (const auto& row : rows) {
    for (const auto& en : row) diag[en.col] += en.val * en.val;
    if (row.size() == 2) off[std::min(row[0].col, row[1].col)] += row[0].val * row[1].val;
  }
  const double theta = kKernelThresholdRel * op.norm_estimate();
  const double mu = theta * theta;
  std::vector<double> x(C, 1.0), cp(C), dp(C);
  for (int iter = 0; iter < 4; ++iter) {
    // Thomas solve of (T + mu I) y = x.
    double denom = diag[0] + mu;
    cp[0] = C > 1 ? off[0] / denom : 0.0;
    dp[0] = x[0] / denom;
    for (std::size_t i = 1; i < C; ++i) {
      denom = diag[i] + mu - off[i - 1] * cp[i - 1];
      cp[i] = i + 1 < C ? off[i] / denom : 0.0;
      dp[i] = (x[i] - off[i - 1] * dp[i - 1]) / denom;
    }
    x[C - 1] = dp[C - 1];
    for (std::size_t i = C - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  std::vector<double> full(op.nodes.size(), 0.0);
  const std::size_t first = op.pin_left ? 1 : 0;
  for (std::size_t c = 0; c < C; ++c) full[c + first] = x[c];
  return full;
}

double mass_fraction(const ModeOperator& op, const std::vector<double>& v, double radius) {
  double inside = 0.0, total = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double w = v[j] * v[j];
    total += w;
    if (std::abs(op.nodes[j] - op.center) <= radius) inside += w;
  }
  return total > 0.0 ? inside / total : 0.0;
}

ModeKernelResult mode_kernel_dims(const CylinderModel& model, std::int64_t n) {
  return kernel_result(model, n, n - model.m, cylinder_radius(model));
}

ModeKernelResult mode_kernel_dims(const DiscModel& model, std::int64_t n) {
  return kernel_result(model, n, disc_weight(model, n), disc_radius(model));
}

SpectralReport spectral_local_index_serial(const CylinderModel& model) {
  std::vector<ModeKernelResult> modes;
  for (std::int64_t n = model.n_lo; n <= model.n_hi; ++n) modes.push_back(mode_kernel_dims(model, n));
  return finish(std::move(modes));
}

namespace {

// Runs every mode, re-throwing the first failure after the loop.
template <class Model>
std::vector<ModeKernelResult> run_modes(const Model& model) {
  const std::int64_t count = model.n_hi - model.n_lo + 1;
  std::vector<ModeKernelResult> modes(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      modes[k] = mode_kernel_dims(model, model.n_lo + i);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return modes;
}

}  // namespace

SpectralReport spectral_local_index(const CylinderModel& model) {
  return finish(run_modes(model));
}

SpectralReport disc_local_index(const DiscModel& model) { return finish(run_modes(model)); }

Character disc_model_index(std::int64_t k, std::int64_t m, Pole pole, double t, int grid_n) {
  DiscModel model;
  model.k = k;
  model.m = m;
  model.pole = pole;
  model.t = t;
  model.grid_n = grid_n;
  return disc_local_index(model).character;
}

}  // namespace eqloc::spectral
