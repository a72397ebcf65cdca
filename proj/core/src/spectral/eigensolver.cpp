#include "maxcyl/spectral/eigensolver.hpp"

#include <Eigen/CholmodSupport>
#include <algorithm>
#include <sstream>

#include "maxcyl/rng.hpp"

namespace maxcyl {

namespace {

using Block = Eigen::MatrixXcd;
using Factor = Eigen::CholmodDecomposition<SpMat, Eigen::Lower>;

/// CHOLMOD rejects rounding-level asymmetry, so factor the exact Hermitian part.
void factorize(Factor& f, const SpMat& A, const char* what) {
  SpMat H = 0.5 * (A + SpMat(A.adjoint()));
  for (int c = 0; c < H.outerSize(); ++c) {
    for (SpMat::InnerIterator it(H, c); it; ++it) {
      if (it.row() == it.col()) it.valueRef() = it.value().real();
    }
  }
  f.compute(H);
  if (f.info() != Eigen::Success) throw NumericalError(std::string("sparse Cholesky factorization failed for ") + what);
}

/// Replaces Y by an M-orthonormal basis of its span (Cholesky QR, twice).
void m_orthonormalize(Block& Y, const RVec& M) {
  for (int pass = 0; pass < 2; ++pass) {
    const Block B = Y.adjoint() * (M.cast<cplx>().asDiagonal() * Y);
    Eigen::LLT<Block> llt(B);
    if (llt.info() != Eigen::Success) throw NumericalError("subspace basis became rank deficient");
    Y = llt.matrixU().solve<Eigen::OnTheRight>(Y);
  }
}

}  // namespace

EigenResult smallest_divfree_eigenpairs(const StaggeredGrid& grid, const CurlCurlPencil& pencil, int count,
                                        const EigenOptions& opt) {
  const int n = int(pencil.K.rows());
  const int p = count + opt.extra;
  if (count < 1 || p > n) throw DomainError("requested eigenpair count does not fit the problem size");
  if (!(opt.shift > 0.0)) throw DomainError("eigensolver shift must be positive");

  const Eigen::VectorXcd Mc = pencil.M.cast<cplx>();
  SpMat A = pencil.K;
  for (int i = 0; i < n; ++i) A.coeffRef(i, i) += opt.shift * pencil.M[i];
  Factor solve_A;
  factorize(solve_A, A, "the shifted curl-curl matrix");

  const SpMat& G = pencil.gradient;
  const SpMat S = SpMat(G.adjoint()) * (Mc.asDiagonal() * G);
  Factor solve_S;
  factorize(solve_S, S, "the discrete Laplacian");
  auto project = [&](Block& Y) {
    const Block rhs = G.adjoint() * (Mc.asDiagonal() * Y);
    Y -= G * solve_S.solve(rhs);
  };

  Rng rng(opt.seed);
  Block Y(n, p);
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < n; ++r) Y(r, c) = rng.complex_uniform();
  }
  project(Y);
  m_orthonormalize(Y, pencil.M);

  EigenResult res;
  RVec theta;
  std::vector<double> resid(count);
  double worst = 0.0;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    Y = solve_A.solve(Mc.asDiagonal() * Y);
    if (solve_A.info() != Eigen::Success) throw NumericalError("sparse triangular solve failed");
    project(Y);
    m_orthonormalize(Y, pencil.M);

    const Block H = Y.adjoint() * (pencil.K * Y);
    Eigen::SelfAdjointEigenSolver<Block> es(H);
    if (es.info() != Eigen::Success) throw NumericalError("Rayleigh-Ritz eigensolve failed");
    Y = Y * es.eigenvectors();
    theta = es.eigenvalues();

    const Block KY = pencil.K * Y.leftCols(count);
    const Block MY = Mc.asDiagonal() * Y.leftCols(count);
    worst = 0.0;
    for (int c = 0; c < count; ++c) {
      const double t = theta[c];
      const double denom = std::max(std::abs(t), 1e-300) * MY.col(c).norm();
      resid[c] = (KY.col(c) - t * MY.col(c)).norm() / denom;
      worst = std::max(worst, resid[c]);
    }
    res.iterations = it;
    if (worst <= opt.tol) break;
  }
  if (worst > opt.tol) {
    std::ostringstream os;
    os << "eigensolver did not converge in " << opt.max_iterations << " iterations: worst relative residual " << worst
       << " (target " << opt.tol << "), block size " << p << ", shift " << opt.shift;
    throw NumericalError(os.str());
  }

  res.values = theta.head(count);
  res.vectors = Y.leftCols(count);
  res.residuals = resid;
  for (int c = 0; c < count; ++c) {
    res.div_residuals.push_back(divergence_residual(grid, G, pencil.M, res.vectors.col(c)));
  }
  return res;
}

RVec dense_nonzero_eigenvalues(const CurlCurlPencil& pencil, int count) {
  const Eigen::MatrixXcd K = Eigen::MatrixXcd(pencil.K);
  const Eigen::MatrixXcd M = pencil.M.cast<cplx>().asDiagonal();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(K, M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("dense generalized eigensolve failed");
  const int kernel = int(pencil.gradient.cols());
  const RVec all = es.eigenvalues();
  if (kernel + count > all.size()) throw DomainError("requested more eigenvalues than the problem has");
  return all.segment(kernel, count);
}

}  // namespace maxcyl
