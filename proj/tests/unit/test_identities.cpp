#include "doctest.h"

#include "maxcyl/families.hpp"
#include "maxcyl/identities.hpp"

using namespace maxcyl;

namespace {

const CrossSection kSquare = CrossSection::rectangle(kPi, kPi);
const CrossSection kDisk = CrossSection::disk(1.0);

Medium varied(const CrossSection& cs) {
  return Medium{CoefficientField::create({CoefficientTerm::constant(2.0), CoefficientTerm::trig(0.3, 1.0, 0.5, 1, 0.2)},
                                         1.0, 3.0, cs),
                CoefficientField::create({CoefficientTerm::constant(2.0), CoefficientTerm::trig(0.4, 0.7, 0.0, 1),
                                          CoefficientTerm::poly(0.1, 1, 0)},
                                         1.0, 3.0, cs)};
}

QuadraturePair small_quad(const CrossSection& cs) {
  QuadratureOrder o;
  o.planar = 12;
  o.angular = 24;
  o.axial = 16;
  return QuadraturePair::build(cs, o);
}

}  // namespace

TEST_CASE("report scale and comparison") {
  const IdentityReport r = IdentityReport::compare("x", cplx(1e-3), cplx(2e-3), 1e-2);
  CHECK(r.scale == 1.0);
  CHECK(r.passed);
  const IdentityReport s = IdentityReport::compare("y", cplx(100.0), cplx(100.0 + 1e-6), 1e-9);
  CHECK(s.scale == doctest::Approx(100.0 + 1e-6));
  CHECK_FALSE(s.passed);
  CHECK_THROWS_AS(s.term("missing"), std::out_of_range);
}

TEST_CASE("curvature identity on the disk with a = b = (-x2, x1, 0)") {
  const VectorField a(ExpPolyVec{-ExpPoly::coordinate(1), ExpPoly::coordinate(0), ExpPoly()});
  const auto pts = boundary_samples(kDisk, 64);
  const IdentityReport r = check_curvature_identity(a, a, kDisk, TraceCase::NormalZero, pts, 1e-13);
  CHECK(r.passed);
  CHECK(r.residual <= 1e-13);
  CHECK(std::abs(r.lhs - 1.0) <= 1e-13);
  CHECK(std::abs(r.rhs - 1.0) <= 1e-13);
}

TEST_CASE("curvature identity on flat faces") {
  FieldFactory fac(kSquare, 3);
  const VectorField a = fac.normal_zero();
  const VectorField b = fac.normal_zero();
  const IdentityReport r =
      check_curvature_identity(a, b, kSquare, TraceCase::NormalZero, boundary_samples(kSquare, 200), 1e-13);
  CHECK(r.passed);
  CHECK(std::abs(r.rhs) <= 1e-13);
  CHECK(std::abs(r.lhs) <= 1e-13);
}

TEST_CASE("pointwise identities for three coefficient families") {
  const std::vector<std::vector<CoefficientTerm>> families = {
      {CoefficientTerm::constant(2.0)},
      {CoefficientTerm::constant(2.0), CoefficientTerm::trig(1.0, 0.0, 0.0, 1)},
      {CoefficientTerm::constant(2.0), CoefficientTerm::trig(0.5, 1.0, -0.7, 2, 0.3)}};
  for (const auto& terms : families) {
    const CoefficientField c = CoefficientField::create(terms, 0.5, 3.5, kSquare);
    const Medium m{c, c};
    FieldFactory fac(kSquare, 12);
    Rng rng(13);
    const auto pts = random_points(kSquare, 100, rng);
    const ComplexField phi = fac.scalar();
    const VectorField a = fac.smooth();
    const VectorField b = fac.smooth();
    CHECK(check_product_curl(phi, a, pts).passed);
    CHECK(check_curl_of_cross(a, b, pts).passed);
    CHECK(check_w0_identity(a, c, pts).passed);
    CHECK(check_zeroth_order_algebra(random_zeroth_order_samples(m, 1.3, 100, rng)).passed);
    CHECK(check_zeroth_order_algebra(random_zeroth_order_samples(m, 0.0, 20, rng)).passed);
  }
}

TEST_CASE("pointwise checks detect a wrong identity") {
  // W0 identity with W0 replaced by W: fails whenever the coefficient varies.
  const CoefficientField mu = varied(kSquare).mu;
  FieldFactory fac(kSquare, 5);
  const VectorField v = fac.smooth();
  Rng rng(2);
  const auto pts = random_points(kSquare, 20, rng);
  double worst = 0.0;
  for (const Vec3& x : pts) {
    const RealJet m = mu.eval(x);
    worst = std::max(worst, ((w0_matrix(m) - w_matrix(m)).cast<cplx>() * v(x).value()).norm());
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("quadrature identities on both geometries") {
  for (const CrossSection& cs : {kSquare, kDisk}) {
    const Medium m = varied(cs);
    const QuadraturePair quad = QuadraturePair::build(cs);
    FieldFactory fac(cs, 17);
    const VectorField c = fac.smooth();
    const VectorField d = fac.smooth();
    CHECK(check_curl_ibp(c, d, quad).passed);
    CHECK(check_weighted_ibp(c, d, m.mu, quad).passed);
    const VectorField v = fac.divfree_normal_zero(m.mu);
    const VectorField f = fac.divfree_normal_zero(m.mu);
    const IdentityReport ibp = check_curlcurl_ibp(v, f, m, quad);
    CHECK(ibp.passed);
    const IdentityReport normal = check_reduced_normal(v, f, m, quad);
    CHECK(normal.passed);
    const VectorField u = fac.divfree_tangential_zero(m.eps);
    const VectorField w = fac.divfree_tangential_zero(m.eps);
    const IdentityReport tangential = check_reduced_tangential(u, w, m, quad);
    CHECK(tangential.passed);
    CHECK(tangential.constraint_residual <= 1e-10);
    const IdentityReport e2e = check_end_to_end(u, v, w, f, m, 0.8, quad);
    CHECK(e2e.passed);
    if (cs.is_disk()) CHECK(std::abs(normal.term("boundary")) > 1e-3);
  }
}

TEST_CASE("constraint violations are rejected, not projected") {
  const Medium m = varied(kSquare);
  const QuadraturePair quad = small_quad(kSquare);
  FieldFactory fac(kSquare, 19);
  const VectorField smooth = fac.smooth();
  const VectorField v = fac.divfree_normal_zero(m.mu);
  CHECK_THROWS_AS(check_reduced_normal(smooth, v, m, quad), ConstraintError);
  // Normal-zero but not divergence free.
  const VectorField nz = fac.normal_zero();
  CHECK_THROWS_AS(check_curlcurl_ibp(nz, v, m, quad), ConstraintError);
  const VectorField tz = fac.tangential_zero();
  const VectorField u = fac.divfree_tangential_zero(m.eps);
  CHECK_THROWS_AS(check_reduced_tangential(tz, u, m, quad), ConstraintError);
  CHECK_THROWS_AS(check_curlcurl_decomposition(smooth, smooth, kSquare, TraceCase::NormalZero, quad), ConstraintError);
}

TEST_CASE("quadrature residual drops under refinement") {
  // Frequencies beyond exactness of a coarse rule: refinement must help.
  const Medium m = varied(kDisk);
  FieldFactory fac(kDisk, 23);
  const VectorField c = fac.smooth();
  const VectorField d = fac.smooth();
  QuadratureOrder coarse;
  coarse.planar = 3;
  coarse.angular = 4;
  coarse.axial = 3;
  const double r0 = check_curl_ibp(c, d, QuadraturePair::build(kDisk, coarse)).residual;
  const double r1 = check_curl_ibp(c, d, QuadraturePair::build(kDisk)).residual;
  CHECK(r1 < r0);
}

TEST_CASE("suite: names, determinism, tolerance zero") {
  const Medium m = varied(kDisk);
  SuiteOptions opt;
  opt.points = 32;
  opt.order.planar = 12;
  opt.order.angular = 24;
  opt.order.axial = 16;
  const auto a = run_identity_suite(m, opt);
  const auto b = run_identity_suite(m, opt);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() >= 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].residual == b[i].residual);
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(a[i].passed);
  }
  bool has_curvature = false;
  for (const auto& r : a) has_curvature = has_curvature || r.name.rfind("curvature", 0) == 0;
  CHECK(has_curvature);

  opt.pointwise_tol = opt.quadrature_tol = opt.curvature_tol = 0.0;
  int passed = 0;
  for (const auto& r : run_identity_suite(m, opt)) passed += r.passed;
  CHECK(passed == 0);
}
