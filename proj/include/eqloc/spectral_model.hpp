#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqloc/character.hpp"

namespace eqloc::spectral {

// Shape of the cutoff between its zero set and the region where it is 1.
enum class Ramp { kCubic, kQuintic };

/// Neighbourhood i - eps < r < i + eps of a free Bohr-Sommerfeld orbit,
/// trivialized as S^1 x interval with connection d - 2 pi sqrt(-1) r dtheta,
/// and stretched so that both ends are translation invariant.
struct CylinderModel {
  std::int64_t center = 0;
  std::int64_t m = 0;
  double eps = 0.25;
  double t = 50.0;
  double R = 6.0;
  int grid_n = 2001;
  std::int64_t n_lo = -5;  // mode window, absolute mode numbers
  std::int64_t n_hi = 5;
  Ramp rho = Ramp::kCubic;
};

enum class Pole { kZero, kTop };

/// Disc |w|^2 < eps around the fixed point at level 0 (kZero) or level k
/// (kTop) of CP^1 with k omega_FS, in polar modes e^{i n phi}.
struct DiscModel {
  std::int64_t k = 1;
  std::int64_t m = 0;
  Pole pole = Pole::kZero;
  double eps = 0.25;
  double t = 50.0;
  double R = 6.0;
  int grid_n = 2001;
  std::int64_t n_lo = -5;
  std::int64_t n_hi = 5;
  Ramp rho = Ramp::kCubic;
};

/// Degree-0 to degree-1 block of the deformed operator on one Fourier mode,
/// after the half-density substitution: F -> F' + q(x) F on a uniform grid,
/// F at nodes, q and the image at cell midpoints. At each end F is set to
/// zero exactly when F cannot decay into that end.
struct ModeOperator {
  std::vector<double> nodes;
  std::vector<double> q;  // one per cell
  double h = 0.0;
  bool pin_left = false;
  bool pin_right = false;
  std::int64_t mode = 0;
  double center = 0.0;  // localization point used for profile checks

  std::size_t rows() const { return q.size(); }
  std::size_t cols() const {
    return nodes.size() - (pin_left ? 1 : 0) - (pin_right ? 1 : 0);
  }
  double norm_estimate() const;
};

ModeOperator build_mode_operator(const CylinderModel& model, std::int64_t n);
ModeOperator build_mode_operator(const DiscModel& model, std::int64_t n);

struct KernelCount {
  int dim = 0;
  double gap_ratio = 0.0;  // first singular value above threshold over last below
  double smallest = 0.0;
};

struct ModeKernelResult {
  std::int64_t mode = 0;
  int dim0 = 0;
  int dim1 = 0;
  std::int64_t weight = 0;
  double threshold = 0.0;
  double gap0 = 0.0;
  double gap1 = 0.0;
  // Fraction of the degree-0 kernel vector's L2 mass near the centre; only
  // set when dim0 > 0.
  std::optional<double> concentration;
};

inline constexpr double kKernelThresholdRel = 1e-6;
inline constexpr double kGapRatio = 10.0;

/// Smallest singular values of the mode operator, ascending, for the degree-0
/// side (eigenvalues of A^T A) and the degree-1 side (eigenvalues of A A^T).
struct ModeSpectrum {
  std::vector<double> degree0;
  std::vector<double> degree1;
};
ModeSpectrum mode_spectrum(const ModeOperator& op);

/// Counts singular values below 1e-6 * |A| on each side and demands a gap of
/// at least 10 above them. Throws IndeterminateError otherwise.
ModeKernelResult mode_kernel_dims(const CylinderModel& model, std::int64_t n);
ModeKernelResult mode_kernel_dims(const DiscModel& model, std::int64_t n);

/// Degree-0 near-null vector by inverse iteration on A^T A, on the full node
/// grid (pinned nodes reported as 0).
std::vector<double> kernel_vector(const ModeOperator& op);

// Mass of |v|^2 within |x - centre| <= radius, relative to the total.
double mass_fraction(const ModeOperator& op, const std::vector<double>& v, double radius);

struct SpectralReport {
  std::vector<ModeKernelResult> modes;
  Character character{1};
};

/// Sum over modes of (dim0 - dim1) t^weight. The parallel versions run modes
/// concurrently; results are ordered by mode.
SpectralReport spectral_local_index(const CylinderModel& model);
SpectralReport spectral_local_index_serial(const CylinderModel& model);
SpectralReport disc_local_index(const DiscModel& model);

Character disc_model_index(std::int64_t k, std::int64_t m, Pole pole, double t, int grid_n);

// Smallest admissible deformation, t >= 25 / eps^2 (advisory, see README).
double t_min(double eps);

}  // namespace eqloc::spectral
