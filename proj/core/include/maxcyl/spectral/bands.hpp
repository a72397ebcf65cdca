#pragma once

// Floquet-Bloch band structures, the constant-coefficient waveguide
// dispersion relation, and a flat-band detector.

#include <string>
#include <vector>

#include "maxcyl/spectral/eigensolver.hpp"

namespace maxcyl {

struct BandStructure {
  std::vector<double> k_samples;
  /// bands(j, n): n-th smallest lambda^2 at k_samples[j] (complex for the
  /// Schroedinger pencil, real part used for ordering).
  Eigen::MatrixXcd bands;
  /// div_residuals(j, n): relative eps-weighted divergence of the eigenfield
  /// (zero when not applicable).
  Eigen::MatrixXd div_residuals;
  int n1 = 0, n2 = 0, n3 = 0;
  int iterations = 0;

  int band_count() const { return int(bands.cols()); }
};

struct BandOptions {
  EigenOptions eigen{};
  /// Use a dense solve when the unknown count is at most this.
  int dense_limit = 0;
};

/// Default shift 0.5 (pi / max(a, b))^2 / (eps_max mu_max): below the lowest
/// nonzero eigenvalue for any admissible coefficients.
double default_shift(const CrossSection& cs, const CoefficientField& eps, const CoefficientField& mu);

/// n_bands smallest nonzero lambda^2 at each k. Requires n_bands <= 0.1 x unknowns.
BandStructure maxwell_bands(const StaggeredGrid& grid, const CoefficientField& eps, const CoefficientField& mu,
                            const std::vector<double>& k_list, int n_bands, const BandOptions& options = {});

/// lambda^2 = (m pi/a)^2 + (n pi/b)^2 + (k + 2 pi l)^2 over TE (m, n >= 0,
/// not both zero) and TM (m, n >= 1) families, sorted, first `count` values.
std::vector<double> analytic_empty_bands(double a, double b, double k, int count);

/// k_j = 2 pi j / count, j = 0..count-1.
std::vector<double> uniform_k_samples(int count);

struct BandStatistics {
  int band = 0;
  double min = 0.0;
  double max = 0.0;
  double variation = 0.0;
  double rel_variation = 0.0;
  bool flat = false;
};

struct FlatBandReport {
  std::vector<BandStatistics> bands;
  double rel_tol = 0.0;
  bool any_flat = false;
  /// "no flat-band candidate at resolution" or "flat-band candidate at resolution".
  std::string verdict;
};

/// Flags band n when (max - min) / max(1, mean) < rel_tol over the k samples.
/// Requires at least 16 samples.
FlatBandReport flat_band_scan(const BandStructure& bs, double rel_tol);

struct ContinuityReport {
  /// Per-band Lipschitz estimate: median of |d lambda^2 / dk| over steps.
  std::vector<double> lipschitz;
  /// Largest step divided by (L dk); jumps are steps exceeding 10.
  double worst_ratio = 0.0;
  int jumps = 0;
};

ContinuityReport continuity_report(const BandStructure& bs);

}  // namespace maxcyl
