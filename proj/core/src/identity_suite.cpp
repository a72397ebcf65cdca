#include "maxcyl/families.hpp"
#include "maxcyl/identities.hpp"

namespace maxcyl {

namespace {

IdentityReport renamed(IdentityReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

}  // namespace

std::vector<IdentityReport> run_identity_suite(const Medium& medium, const SuiteOptions& opt) {
  const CrossSection cs = medium.eps.cross_section();
  FieldFactory fac(cs, opt.seed);
  const QuadraturePair quad = QuadraturePair::build(cs, opt.order);
  const auto points = random_points(cs, opt.points, fac.rng());
  const auto bpoints = boundary_samples(cs, 200);
  const double pt = opt.pointwise_tol;
  const double qt = opt.quadrature_tol;

  std::vector<IdentityReport> out;
  // Every random draw is bound to a named local first so the draw order is
  // fixed by the source, not by argument evaluation order.

  // Pointwise vector calculus.
  {
    const ComplexField phi = fac.scalar();
    const VectorField a = fac.smooth();
    out.push_back(check_product_curl(phi, a, points, pt));
  }
  {
    const VectorField a = fac.smooth();
    const VectorField b = fac.smooth();
    out.push_back(check_curl_of_cross(a, b, points, pt));
  }
  {
    const VectorField v = fac.smooth();
    out.push_back(renamed(check_w0_identity(v, medium.mu, points, pt), "w0_identity_mu"));
    out.push_back(renamed(check_w0_identity(v, medium.eps, points, pt), "w0_identity_eps"));
  }
  out.push_back(check_zeroth_order_algebra(random_zeroth_order_samples(medium, opt.lambda, opt.points, fac.rng()), pt));

  // Boundary curvature term.
  {
    const VectorField a = fac.normal_zero();
    const VectorField b = fac.normal_zero();
    out.push_back(check_curvature_identity(a, b, cs, TraceCase::NormalZero, bpoints, opt.curvature_tol));
  }
  {
    const VectorField a = fac.tangential_zero();
    const VectorField b = fac.tangential_zero();
    out.push_back(check_curvature_identity(a, b, cs, TraceCase::TangentialZero, bpoints, opt.curvature_tol));
  }

  // Integration by parts.
  {
    const VectorField c = fac.smooth();
    const VectorField d = fac.smooth();
    out.push_back(check_curl_ibp(c, d, quad, qt));
  }
  {
    const VectorField a = fac.normal_zero();
    const VectorField b = fac.normal_zero();
    out.push_back(check_curlcurl_decomposition(a, b, cs, TraceCase::NormalZero, quad, qt));
  }
  {
    const VectorField a = fac.tangential_zero();
    const VectorField b = fac.tangential_zero();
    out.push_back(check_curlcurl_decomposition(a, b, cs, TraceCase::TangentialZero, quad, qt));
  }
  {
    const VectorField a = fac.smooth();
    const VectorField b = fac.smooth();
    out.push_back(renamed(check_weighted_ibp(a, b, medium.mu, quad, qt), "weighted_ibp_mu"));
    out.push_back(renamed(check_weighted_ibp(a, b, medium.eps, quad, qt), "weighted_ibp_eps"));
  }
  {
    const VectorField v = fac.divfree_normal_zero(medium.mu);
    const VectorField f = fac.smooth();
    out.push_back(check_curlcurl_ibp(v, f, medium, quad, qt));
  }

  const std::pair<Components, const char*> variants[] = {
      {Components::All, ""}, {Components::AxialOnly, "_axial"}, {Components::InPlaneOnly, "_inplane"}};
  for (const auto& [which, suffix] : variants) {
    const VectorField v = fac.divfree_normal_zero(medium.mu, which);
    const VectorField f = fac.normal_zero(which);
    out.push_back(renamed(check_reduced_normal(v, f, medium, quad, qt), std::string("reduced_normal") + suffix));
  }
  for (const auto& [which, suffix] : variants) {
    const VectorField u = fac.divfree_tangential_zero(medium.eps, which);
    const VectorField w = fac.tangential_zero(which);
    out.push_back(renamed(check_reduced_tangential(u, w, medium, quad, qt), std::string("reduced_tangential") + suffix));
  }

  // Full reduction.
  {
    const VectorField u = fac.divfree_tangential_zero(medium.eps);
    const VectorField v = fac.divfree_normal_zero(medium.mu);
    const VectorField w = fac.tangential_zero();
    const VectorField f = fac.normal_zero();
    out.push_back(check_end_to_end(u, v, w, f, medium, opt.lambda, quad, qt));
  }
  return out;
}

}  // namespace maxcyl
