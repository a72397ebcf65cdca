#pragma once

// Smallest nonzero eigenpairs of the curl-curl pencil K e = lambda^2 M e on
// the eps-orthogonal complement of the discrete gradients.

#include "maxcyl/spectral/yee.hpp"

namespace maxcyl {

struct EigenOptions {
  /// Shift sigma > 0: iterations use (K + sigma M)^-1 M.
  double shift = 1.0;
  /// Extra block vectors beyond the requested count.
  int extra = 8;
  /// Relative residual |K e - t M e| / (t |M e|) required for convergence.
  double tol = 1e-9;
  int max_iterations = 500;
  /// Seed for the starting block.
  std::uint64_t seed = 0x5eed;
};

struct EigenResult {
  RVec values;                        // ascending lambda^2
  Eigen::MatrixXcd vectors;           // M-orthonormal columns
  std::vector<double> residuals;      // relative eigen-residuals
  std::vector<double> div_residuals;  // relative eps-weighted divergence
  int iterations = 0;
};

/// Shift-invert subspace iteration with Rayleigh-Ritz; each iterate is
/// projected eps-orthogonally off the gradient range. Sparse factorizations
/// use CHOLMOD. Throws NumericalError if a factorization fails or the
/// iteration does not converge.
EigenResult smallest_divfree_eigenpairs(const StaggeredGrid& grid, const CurlCurlPencil& pencil, int count,
                                        const EigenOptions& options = {});

/// Dense reference: all generalized eigenvalues, the gradient kernel
/// (as many values as interior vertices) dropped, the next `count` returned.
/// Intended for small grids only.
RVec dense_nonzero_eigenvalues(const CurlCurlPencil& pencil, int count);

}  // namespace maxcyl
