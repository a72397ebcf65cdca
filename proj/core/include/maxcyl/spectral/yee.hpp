#pragma once

// Staggered (Yee) discretization of the Bloch curl-curl problem on the cell
// (0,a) x (0,b) x (0,1) with perfectly conducting lateral walls.
//
// Electric unknowns live on edges, magnetic quantities on faces, scalar
// potentials on vertices and divergences on cells. Edges tangential to the
// lateral walls carry no unknown. Values at x3 = 1 equal e^{ik} times the
// values at x3 = 0.

#include <Eigen/Sparse>

#include "maxcyl/fields.hpp"

namespace maxcyl {

using SpMat = Eigen::SparseMatrix<cplx>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

class StaggeredGrid {
 public:
  /// Requires a rectangle cross-section and at least 4 cells per direction.
  StaggeredGrid(const CrossSection& cs, int n1, int n2, int n3);

  const CrossSection& cross_section() const { return cs_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int n3() const { return n3_; }
  double h1() const { return h1_; }
  double h2() const { return h2_; }
  double h3() const { return h3_; }

  // Unknown counts.
  int ex_count() const { return n1_ * (n2_ - 1) * n3_; }
  int ey_count() const { return (n1_ - 1) * n2_ * n3_; }
  int ez_count() const { return (n1_ - 1) * (n2_ - 1) * n3_; }
  int edge_count() const { return ex_count() + ey_count() + ez_count(); }
  int hx_count() const { return (n1_ + 1) * n2_ * n3_; }
  int hy_count() const { return n1_ * (n2_ + 1) * n3_; }
  int hz_count() const { return n1_ * n2_ * n3_; }
  int face_count() const { return hx_count() + hy_count() + hz_count(); }
  int vertex_count() const { return (n1_ - 1) * (n2_ - 1) * n3_; }
  int cell_count() const { return n1_ * n2_ * n3_; }

  // Global indices; -1 for a wall edge or wall vertex (identically zero).
  // k must already lie in [0, n3).
  int ex(int i, int j, int k) const;
  int ey(int i, int j, int k) const;
  int ez(int i, int j, int k) const;
  int hx(int i, int j, int k) const;
  int hy(int i, int j, int k) const;
  int hz(int i, int j, int k) const;
  int vertex(int i, int j, int k) const;
  int cell(int i, int j, int k) const { return (k * n2_ + j) * n1_ + i; }

  /// Physical positions of every edge unknown and every face, in index order.
  std::vector<Vec3> edge_positions() const;
  std::vector<Vec3> face_positions() const;

  /// Bound 2 sqrt(h1^-2 + h2^-2 + h3^-2) on the norm of the discrete gradient.
  double gradient_norm_bound() const;

 private:
  CrossSection cs_;
  int n1_, n2_, n3_;
  double h1_, h2_, h3_;
};

/// Discrete operators at one quasimomentum k.
struct YeeOperators {
  SpMat curl;      // faces x edges
  SpMat gradient;  // edges x interior vertices
  SpMat divergence;  // cells x faces
  RVec eps_edges;  // eps at edge midpoints
  RVec inv_mu_faces;  // 1/mu at face centres
};

YeeOperators assemble_yee(const StaggeredGrid& grid, const CoefficientField& eps, const CoefficientField& mu,
                          double k);

/// Curl-curl pencil K e = lambda^2 M e with K = C^H diag(1/mu) C, M = diag(eps).
struct CurlCurlPencil {
  SpMat K;
  RVec M;
  SpMat gradient;
};

CurlCurlPencil assemble_curlcurl(const StaggeredGrid& grid, const CoefficientField& eps, const CoefficientField& mu,
                                 double k);

/// Relative eps-weighted divergence |G^H M e| / (g |M e|) of an edge field,
/// with g the gradient norm bound.
double divergence_residual(const StaggeredGrid& grid, const SpMat& gradient, const RVec& M, const CVec& e);

}  // namespace maxcyl
