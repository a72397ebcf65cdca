#pragma once

// Residual checks for the vector-calculus and integration-by-parts
// identities behind the reduction. Pointwise checks compare both sides at
// sample points; integral checks compare quadratures of both sides over one
// period cell and its lateral boundary.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "maxcyl/quadrature.hpp"
#include "maxcyl/reduction.hpp"
#include "maxcyl/rng.hpp"

namespace maxcyl {

struct IdentityReport {
  std::string name;
  cplx lhs{};
  cplx rhs{};
  double residual = 0.0;
  double scale = 1.0;
  double tol = 0.0;
  bool passed = false;
  /// Largest constraint residual measured on the input fields (0 if none).
  double constraint_residual = 0.0;
  /// Named contributions to the right-hand side, e.g. the boundary term.
  std::vector<std::pair<std::string, cplx>> terms;

  /// Builds a report with residual |lhs - rhs| and scale max(|lhs|, |rhs|, 1).
  static IdentityReport compare(std::string name, cplx lhs, cplx rhs, double tol);
  /// Value of a named term; throws std::out_of_range if absent.
  cplx term(const std::string& key) const;
};

/// Which trace conditions a pair of fields satisfies on the lateral boundary.
enum class TraceCase { NormalZero, TangentialZero };

/// Uniform random points in U x [0, 1).
std::vector<Vec3> random_points(const CrossSection& cs, int count, Rng& rng);

// ---- Pointwise checks ------------------------------------------------------
// The report holds the worst point: residual and scale are taken where
// residual/scale is largest; lhs/rhs are the norms of both sides there.

/// curl(phi a) = phi curl a + grad(phi) x a.
IdentityReport check_product_curl(const ComplexField& phi, const VectorField& a, const std::vector<Vec3>& points,
                                  double tol = 1e-12);

/// curl(a x b) = a div b - b div a - (a.grad) b + (b.grad) a.
IdentityReport check_curl_of_cross(const VectorField& a, const VectorField& b, const std::vector<Vec3>& points,
                                   double tol = 1e-12);

/// div(mu^-1 grad mu) v + mu^-2 |grad mu|^2 v - (v.grad)(mu^-1 grad mu) = W0(mu) v.
IdentityReport check_w0_identity(const VectorField& v, const CoefficientField& mu, const std::vector<Vec3>& points,
                                 double tol = 1e-12);

/// I = nu_k a_k d_j conj(b_j) - nu_j a_k d_k conj(b_j) equals kappa <P a, b>
/// on the boundary when both fields satisfy the same trace condition.
IdentityReport check_curvature_identity(const VectorField& a, const VectorField& b, const CrossSection& cs,
                                        TraceCase trace, const std::vector<BoundaryPoint>& points,
                                        double tol = 1e-13);

/// Point values entering the zeroth-order part of the reduced form.
struct ZerothOrderSample {
  CVec3 u, v, w, f;
  RealJet eps;
  RealJet mu;
  double lambda = 0.0;
};

/// With curl u = i lambda mu v and curl v = -i lambda eps u:
///   -<curl u, eps [grad (eps mu)^-1, w]> - <curl v, mu [grad (eps mu)^-1, f]>
///   + mu^-1 <W(eps) u, w> + eps^-1 <W(mu) v, f>
/// equals <V Phi, Psi> + lambda^2 (eps <u, w> + mu <v, f>).
IdentityReport check_zeroth_order_algebra(const std::vector<ZerothOrderSample>& samples, double tol = 1e-12);

/// Random samples: coefficient jets of the medium at random points, random
/// complex vectors, fixed lambda.
std::vector<ZerothOrderSample> random_zeroth_order_samples(const Medium& medium, double lambda, int count, Rng& rng);

// ---- Integral checks -------------------------------------------------------

/// int <curl c, d> = int <c, curl d> + int_bdry <c, d x nu>.
IdentityReport check_curl_ibp(const VectorField& c, const VectorField& d, const QuadraturePair& quad,
                              double tol = 1e-9);

/// int <curl a, curl b> = int <d_j a, d_j b> - int div a conj(div b) + int_bdry kappa <P a, b>.
IdentityReport check_curlcurl_decomposition(const VectorField& a, const VectorField& b, const CrossSection& cs,
                                            TraceCase trace, const QuadraturePair& quad, double tol = 1e-9);

/// Weighted integration by parts moving mu^(+-1) to mu^(+-1/2).
IdentityReport check_weighted_ibp(const VectorField& a, const VectorField& b, const CoefficientField& mu,
                                  const QuadraturePair& quad, double tol = 1e-9);

/// Integration by parts of int eps^-1 <curl v, curl f> for div(mu v) = 0.
IdentityReport check_curlcurl_ibp(const VectorField& v, const VectorField& f, const Medium& medium,
                               const QuadraturePair& quad, double tol = 1e-9);

/// Reduced form of int eps^-1 <curl v, curl f> for div(mu v) = 0, v_nu = f_nu = 0.
IdentityReport check_reduced_normal(const VectorField& v, const VectorField& f, const Medium& medium,
                             const QuadraturePair& quad, double tol = 1e-9);

/// Reduced form of int mu^-1 <curl u, curl w> for div(eps u) = 0, u_tau = w_tau = 0.
IdentityReport check_reduced_tangential(const VectorField& u, const VectorField& w, const Medium& medium,
                             const QuadraturePair& quad, double tol = 1e-9);

/// int (<d_j Phi, d_j Psi> + <V Phi, Psi>) + int_bdry <Sigma Phi, Psi>.
/// Both fields must satisfy N Phi = 0 at the boundary nodes (tolerance 1e-10).
cplx schrodinger_form(const SixVectorField& phi, const SixVectorField& psi, const PotentialSampler& V,
                      const BoundarySampler& sigma, const QuadraturePair& quad);

/// Sum of the reduced right-hand sides for (v, f) and (u, w), with
/// curl u -> i lambda mu v and curl v -> -i lambda eps u in the cross terms,
/// against schrodinger_form(Phi, Psi) + lambda^2 int (eps <u, w> + mu <v, f>).
IdentityReport check_end_to_end(const VectorField& u, const VectorField& v, const VectorField& w,
                                const VectorField& f, const Medium& medium, double lambda,
                                const QuadraturePair& quad, double tol = 1e-9);

// ---- Suite -----------------------------------------------------------------

struct SuiteOptions {
  double pointwise_tol = 1e-12;
  double quadrature_tol = 1e-9;
  double curvature_tol = 1e-13;
  int points = 128;
  double lambda = 1.0;
  std::uint64_t seed = 1;
  QuadratureOrder order{};
};

/// Runs every check once on seeded random fields for the given medium.
/// Check names are stable so reports can be compared across runs.
std::vector<IdentityReport> run_identity_suite(const Medium& medium, const SuiteOptions& options);

}  // namespace maxcyl
