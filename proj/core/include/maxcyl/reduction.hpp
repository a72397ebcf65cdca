#pragma once

// Pointwise matrices of the Maxwell-to-Schroedinger reduction: the
// second-order potentials W0 and W, the first-order coupling F, the 6x6
// volume potential V, the 6x6 boundary matrix Sigma, and the weighted field
// substitutions Phi and Psi.

#include <functional>
#include <vector>

#include "maxcyl/fields.hpp"

namespace maxcyl {

/// W0(mu)_jk = mu^-1 Lap(mu) d_jk + mu^-2 d_j mu d_k mu - mu^-1 d_j d_k mu.
Mat3 w0_matrix(const RealJet& mu);

/// W(mu)_jk = ((2mu)^-1 Lap(mu) - (4mu^2)^-1 |grad mu|^2) d_jk
///            + mu^-2 d_j mu d_k mu - mu^-1 d_j d_k mu.
Mat3 w_matrix(const RealJet& mu);

/// Real antisymmetric F with F b = grad(s) x b, s = (eps mu)^(1/2).
/// The argument is the jet of the product eps*mu.
Mat3 f_matrix(const RealJet& eps_mu);

/// Blocks [[W(eps) - eps mu lambda^2 I, -2i lambda F], [2i lambda F, W(mu) - eps mu lambda^2 I]].
CMat6 v_matrix(const RealJet& eps, const RealJet& mu, double lambda);
/// Complex lambda is accepted only when its imaginary part is exactly zero.
CMat6 v_matrix(const RealJet& eps, const RealJet& mu, cplx lambda);

/// diag((kappa + (2eps)^-1 d_nu eps) I, kappa P - (2mu)^-1 d_nu mu I).
Mat6 sigma_matrix(const RealJet& eps, const RealJet& mu, const BoundaryPoint& bp);

/// Pointwise samplers of V and Sigma.
using PotentialSampler = std::function<CMat6(const Vec3&)>;
using BoundarySampler = std::function<Mat6(const BoundaryPoint&)>;

/// Eps/mu pair sharing one cross-section.
struct Medium {
  CoefficientField eps;
  CoefficientField mu;

  CMat6 v(const Vec3& x, double lambda) const { return v_matrix(eps.eval(x), mu.eval(x), lambda); }
  Mat6 sigma(const BoundaryPoint& bp) const { return sigma_matrix(eps.eval(bp.position), mu.eval(bp.position), bp); }
};

/// Two stacked C^3 fields; the gradient has rows = components, cols = d/dx_j.
class SixVectorField {
 public:
  using Gradient = Eigen::Matrix<cplx, 6, 3>;

  SixVectorField(VectorField first, VectorField second) : first_(std::move(first)), second_(std::move(second)) {}

  const VectorField& first() const { return first_; }
  const VectorField& second() const { return second_; }

  CVec6 value(const Vec3& x) const;
  Gradient gradient(const Vec3& x) const;

 private:
  VectorField first_;
  VectorField second_;
};

struct PhiPsi {
  SixVectorField phi;
  SixVectorField psi;
};

/// Phi = (eps^(1/2) u, mu^(1/2) v), Psi = (eps^(-1/2) mu^-1 w, eps^-1 mu^(-1/2) f).
PhiPsi phi_psi_maps(const VectorField& u, const VectorField& v, const VectorField& w, const VectorField& f,
                    const CoefficientField& eps, const CoefficientField& mu);

/// |N Phi| at a boundary point.
double trace_residual(const SixVectorField& phi, const BoundaryPoint& bp);

/// Throws ConstraintError when |N Phi| exceeds tol * max(1, |Phi|) at any
/// of the given boundary points.
void require_hhat1(const SixVectorField& phi, const std::vector<BoundaryPoint>& points, double tol = 1e-10);

}  // namespace maxcyl
