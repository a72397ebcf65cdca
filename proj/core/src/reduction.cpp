#include "maxcyl/reduction.hpp"

#include <cmath>
#include <sstream>

namespace maxcyl {

namespace {

void require_positive(const RealJet& c, const char* what) {
  if (!(c.value > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive, got " << c.value;
    throw CoefficientError(os.str());
  }
}

/// Shared part mu^-2 d_j mu d_k mu - mu^-1 d_j d_k mu.
Mat3 second_order_part(const RealJet& mu) {
  const double inv = 1.0 / mu.value;
  return inv * inv * (mu.grad * mu.grad.transpose()) - inv * mu.hess;
}

}  // namespace

Mat3 w0_matrix(const RealJet& mu) {
  require_positive(mu, "coefficient");
  const double inv = 1.0 / mu.value;
  return inv * mu.laplacian() * Mat3::Identity() + second_order_part(mu);
}

Mat3 w_matrix(const RealJet& mu) {
  require_positive(mu, "coefficient");
  const double m = mu.value;
  const double diag = mu.laplacian() / (2.0 * m) - mu.grad.squaredNorm() / (4.0 * m * m);
  return diag * Mat3::Identity() + second_order_part(mu);
}

Mat3 f_matrix(const RealJet& eps_mu) {
  require_positive(eps_mu, "product eps*mu");
  const Vec3 g = sqrt(eps_mu).grad;
  Mat3 F;
  F << 0.0, -g[2], g[1],
       g[2], 0.0, -g[0],
       -g[1], g[0], 0.0;
  return F;
}

CMat6 v_matrix(const RealJet& eps, const RealJet& mu, double lambda) {
  require_positive(eps, "eps");
  require_positive(mu, "mu");
  const double shift = eps.value * mu.value * lambda * lambda;
  const CMat3 F = f_matrix(eps * mu).cast<cplx>();
  const cplx coupling(0.0, 2.0 * lambda);
  CMat6 V;
  V.topLeftCorner<3, 3>() = (w_matrix(eps) - shift * Mat3::Identity()).cast<cplx>();
  V.bottomRightCorner<3, 3>() = (w_matrix(mu) - shift * Mat3::Identity()).cast<cplx>();
  V.topRightCorner<3, 3>() = -coupling * F;
  V.bottomLeftCorner<3, 3>() = coupling * F;
  return V;
}

CMat6 v_matrix(const RealJet& eps, const RealJet& mu, cplx lambda) {
  if (lambda.imag() != 0.0) {
    std::ostringstream os;
    os << "spectral parameter must be real, got imaginary part " << lambda.imag();
    throw DomainError(os.str());
  }
  return v_matrix(eps, mu, lambda.real());
}

Mat6 sigma_matrix(const RealJet& eps, const RealJet& mu, const BoundaryPoint& bp) {
  require_positive(eps, "eps");
  require_positive(mu, "mu");
  const double kappa = bp.curvature;
  const double dn_eps = bp.normal.dot(eps.grad);
  const double dn_mu = bp.normal.dot(mu.grad);
  Mat6 S = Mat6::Zero();
  S.topLeftCorner<3, 3>() = (kappa + dn_eps / (2.0 * eps.value)) * Mat3::Identity();
  S.bottomRightCorner<3, 3>() = kappa * projector_e3_perp() - dn_mu / (2.0 * mu.value) * Mat3::Identity();
  return S;
}

CVec6 SixVectorField::value(const Vec3& x) const {
  CVec6 r;
  r.head<3>() = first_(x).value();
  r.tail<3>() = second_(x).value();
  return r;
}

SixVectorField::Gradient SixVectorField::gradient(const Vec3& x) const {
  Gradient g;
  g.topRows<3>() = first_(x).jacobian();
  g.bottomRows<3>() = second_(x).jacobian();
  return g;
}

PhiPsi phi_psi_maps(const VectorField& u, const VectorField& v, const VectorField& w, const VectorField& f,
                    const CoefficientField& eps, const CoefficientField& mu) {
  const RealField& e = eps.field();
  const RealField& m = mu.field();
  const RealField e_half = sqrt(e);
  const RealField m_half = sqrt(m);
  SixVectorField phi(e_half * u, m_half * v);
  SixVectorField psi(reciprocal(e_half * m) * w, reciprocal(e * m_half) * f);
  return PhiPsi{phi, psi};
}

double trace_residual(const SixVectorField& phi, const BoundaryPoint& bp) {
  const auto N = boundary_condition_matrix(bp);
  return (N.cast<cplx>() * phi.value(bp.position)).norm();
}

void require_hhat1(const SixVectorField& phi, const std::vector<BoundaryPoint>& points, double tol) {
  for (const auto& bp : points) {
    const double res = trace_residual(phi, bp);
    const double scale = std::max(1.0, phi.value(bp.position).norm());
    if (res > tol * scale) {
      std::ostringstream os;
      os << "six-vector field violates the boundary trace conditions: |N Phi| = " << res << " at ("
         << bp.position[0] << ", " << bp.position[1] << ", " << bp.position[2] << ")";
      throw ConstraintError(os.str());
    }
  }
}

}  // namespace maxcyl
