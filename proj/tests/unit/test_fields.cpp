#include "doctest.h"

#include "maxcyl/families.hpp"
#include "maxcyl/identities.hpp"
#include "maxcyl/quadrature.hpp"

using namespace maxcyl;

namespace {

const CrossSection kSquare = CrossSection::rectangle(kPi, kPi);
const CrossSection kDisk = CrossSection::disk(1.0);

CoefficientField mu_x3() {
  return CoefficientField::create({CoefficientTerm::constant(2.0), CoefficientTerm::trig(1.0, 0.0, 0.0, 1)}, 1.0, 3.0,
                                  kSquare);
}

CoefficientField full_trig(const CrossSection& cs) {
  return CoefficientField::create({CoefficientTerm::constant(2.0), CoefficientTerm::trig(0.3, 1.0, 0.5, 1, 0.2),
                                   CoefficientTerm::poly(0.05, 1, 1)},
                                  1.0, 3.0, cs);
}

}  // namespace

TEST_CASE("coefficient jet examples") {
  const CoefficientField mu = mu_x3();
  const RealJet j0 = eval_scalar(mu, Vec3(1.0, 1.0, 0.0));
  CHECK(j0.value == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(j0.grad.norm() < 1e-15);
  CHECK(j0.hess(2, 2) == doctest::Approx(-4.0 * kPi * kPi).epsilon(1e-14));

  const RealJet j1 = eval_scalar(mu, Vec3(1.0, 1.0, 0.25));
  CHECK(j1.value == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(j1.grad[2] + 2.0 * kPi) < 1e-13);
  CHECK(std::abs(j1.grad[0]) + std::abs(j1.grad[1]) < 1e-15);
  CHECK(std::abs(j1.hess(2, 2)) < 1e-12);

  const CoefficientField c = CoefficientField::constant(1.7, kSquare);
  const RealJet jc = eval_scalar(c, Vec3(0.3, 2.0, 0.6));
  CHECK(jc.value == 1.7);
  CHECK(jc.grad.isZero());
  CHECK(jc.hess.isZero());
  CHECK(c.is_constant());
  CHECK_FALSE(mu.is_constant());
}

TEST_CASE("coefficient errors") {
  const CoefficientField mu = mu_x3();
  CHECK_THROWS_AS(mu.eval(Vec3(-0.5, 1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(CoefficientField::create({CoefficientTerm::constant(1.0), CoefficientTerm::trig(1.5, 0, 0, 1)}, 0.1,
                                           3.0, kSquare),
                  CoefficientError);
  CHECK_THROWS_AS(CoefficientField::create({CoefficientTerm::constant(2.0)}, 0.0, 3.0, kSquare), CoefficientError);
  CHECK_THROWS_AS(CoefficientField::create({CoefficientTerm::constant(2.0)}, 1.0, 1.5, kSquare), CoefficientError);
  const BoundsReport rep = sample_bounds({CoefficientTerm::constant(1.0), CoefficientTerm::trig(1.5, 0, 0, 1)}, kSquare);
  CHECK(rep.min_value == doctest::Approx(-0.5));
  CHECK(rep.argmin[2] == doctest::Approx(0.5));
}

TEST_CASE("curl, div and cross examples") {
  const VectorField a(ExpPolyVec{ExpPoly::coordinate(1), ExpPoly(), ExpPoly()});
  const CVec3 c = curl(a, Vec3(0.2, 0.4, 0.1));
  CHECK((c - CVec3(0, 0, -1)).norm() < 1e-15);

  // curl(phi e1) with phi = x3.
  const ComplexField phi = complex_field(ExpPoly::coordinate(2));
  const VectorField e1(ExpPolyVec{ExpPoly::constant(1.0), ExpPoly(), ExpPoly()});
  const VectorField pe = phi * e1;
  CHECK((curl(pe, Vec3(0.5, 0.5, 0.5)) - CVec3(0, 1, 0)).norm() < 1e-15);

  // Cross product is bilinear (no conjugation) and right-handed.
  const CVec3 e1c(1, 0, 0), e2c(0, 1, 0);
  CHECK((cross(e1c, e2c) - CVec3(0, 0, 1)).norm() == 0.0);
  const cplx i(0.0, 1.0);
  CHECK((cross(CVec3(i, 0, 0), CVec3(0, 1, 0)) - CVec3(0, 0, i)).norm() == 0.0);
}

TEST_CASE("div curl vanishes for a sine potential") {
  const ExpPoly A3 = rectangle_sine_mode(kSquare, 1, 1, ExpPoly::constant(1.0));
  const ExpPolyVec A{ExpPoly(), ExpPoly(), A3};
  const VectorField c(curl(A));
  Rng rng(3);
  for (const Vec3& x : random_points(kSquare, 100, rng)) CHECK(std::abs(div(c, x)) <= 1e-13);
}

TEST_CASE("jets match central finite differences") {
  FieldFactory fac(kSquare, 11);
  const ComplexField s = fac.scalar();
  const CoefficientField eps = full_trig(kSquare);
  Rng rng(5);
  const double h = 1e-5;
  for (const Vec3& x0 : random_points(kSquare, 100, rng)) {
    const Vec3 x = 0.8 * x0 + Vec3(0.3, 0.3, 0.0);  // stay interior
    const ComplexJet j = s(x);
    const RealJet e = eps.eval(x);
    for (int d = 0; d < 3; ++d) {
      Vec3 xp = x, xm = x;
      xp[d] += h;
      xm[d] -= h;
      const cplx fd = (s(xp).value - s(xm).value) / (2 * h);
      CHECK(std::abs(fd - j.grad[d]) <= 1e-6 * std::max(1.0, std::abs(j.grad[d])));
      const CVec3 fdh = (s(xp).grad - s(xm).grad) / (2 * h);
      CHECK((fdh - j.hess.col(d)).norm() <= 1e-6 * std::max(1.0, j.hess.norm()));
      const double fe = (eps.eval(xp).value - eps.eval(xm).value) / (2 * h);
      CHECK(std::abs(fe - e.grad[d]) <= 1e-6 * std::max(1.0, std::abs(e.grad[d])));
    }
    CHECK((j.hess - j.hess.transpose()).norm() <= 1e-14 * std::max(1.0, j.hess.norm()));
  }
}

TEST_CASE("every family is periodic in x3") {
  for (const CrossSection& cs : {kSquare, kDisk}) {
    FieldFactory fac(cs, 21);
    const CoefficientField mu = full_trig(cs);
    const std::vector<VectorField> fields = {fac.smooth(), fac.tangential_zero(), fac.normal_zero(),
                                             fac.divfree_normal_zero(mu), fac.divfree_tangential_zero(mu)};
    Rng rng(9);
    const auto pts = random_points(cs, 100, rng);
    for (const VectorField& f : fields) {
      for (const Vec3& x : pts) {
        const CVec3 a = f(x).value();
        const CVec3 b = f(x + Vec3(0, 0, 1)).value();
        CHECK((a - b).norm() <= 1e-13 * std::max(1.0, a.norm()));
      }
    }
    for (const Vec3& x : pts) {
      CHECK(std::abs(mu.field()(x).value - mu.field()(x + Vec3(0, 0, 1)).value) <= 1e-13);
    }
  }
}

TEST_CASE("stream-function field example and constraints") {
  const CoefficientField one = CoefficientField::constant(1.0, kSquare);
  StreamSpec spec;
  spec.psi = rectangle_sine_mode(kSquare, 1, 1, ExpPoly::constant(1.0));
  const VectorField v = make_divfree_normal_zero(one, kSquare, spec);
  CHECK(v(Vec3(kPi / 2, kPi / 2, 0)).value().norm() < 1e-15);

  // Invalid potential: does not vanish on the boundary.
  StreamSpec bad;
  bad.psi = ExpPoly::cosine(1.0, Vec3(1.0, 0.0, 0.0));
  CHECK_THROWS_AS(make_divfree_normal_zero(one, kSquare, bad), ConstraintError);

  for (const CrossSection& cs : {kSquare, kDisk}) {
    const CoefficientField mu = full_trig(cs);
    FieldFactory fac(cs, 31);
    const VectorField f = fac.divfree_normal_zero(mu);
    for (const BoundaryPoint& bp : boundary_samples(cs, 200)) {
      CHECK(std::abs(bp.normal.cast<cplx>().dot(f(bp.position).value())) <= 1e-12);
    }
    // Weak divergence: int <mu v, grad eta> = 0 for periodic test functions eta.
    const QuadratureRule rule = cell_quadrature(cs);
    for (int t = 0; t < 5; ++t) {
      const ComplexField eta = fac.scalar();
      cplx sum = 0.0, scale = 0.0;
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const Vec3& x = rule.nodes[q];
        const CVec3 mv = mu.eval(x).value * f(x).value();
        const cplx term = eta(x).grad.dot(mv);
        sum += rule.weights[q] * term;
        scale += rule.weights[q] * std::abs(term);
      }
      CHECK(std::abs(sum) <= 1e-10 * std::max(1.0, std::abs(scale)));
    }
  }
}

TEST_CASE("tangential-zero families") {
  RectangleMode axial;
  axial.m3 = 1;
  axial.n3 = 1;
  axial.q = ExpPoly::constant(1.0);
  const VectorField u = make_tangential_zero(kSquare, std::vector<RectangleMode>{axial});
  for (const BoundaryPoint& bp : boundary_samples(kSquare, 200)) {
    const CVec3 val = u(bp.position).value();
    CHECK((val - bp.normal.cast<cplx>() * bp.normal.cast<cplx>().dot(val)).norm() <= 1e-12);
  }
  // u1 = cos(x1) sin(x2) vanishes on x2 = 0.
  RectangleMode first;
  first.m1 = 1;
  first.n1 = 1;
  first.g = ExpPoly::constant(1.0);
  const VectorField u1 = make_tangential_zero(kSquare, std::vector<RectangleMode>{first});
  CHECK(u1(Vec3(0.7, 0.0, 0.3)).value().norm() <= 1e-15);

  RectangleMode bad = axial;
  bad.m3 = 1.5;
  CHECK_THROWS_AS(make_tangential_zero(kSquare, std::vector<RectangleMode>{bad}), ConstraintError);

  for (const CrossSection& cs : {kSquare, kDisk}) {
    FieldFactory fac(cs, 41);
    const VectorField t = fac.tangential_zero();
    const VectorField n = fac.normal_zero();
    for (const BoundaryPoint& bp : boundary_samples(cs, 200)) {
      const CVec3 tv = t(bp.position).value();
      const CVec3 nu = bp.normal.cast<cplx>();
      CHECK((tv - nu * nu.dot(tv)).norm() <= 1e-12 * std::max(1.0, tv.norm()));
      CHECK(std::abs(nu.dot(n(bp.position).value())) <= 1e-12 * std::max(1.0, n(bp.position).value().norm()));
    }
  }
}

TEST_CASE("divergence-free tangential-zero family") {
  for (const CrossSection& cs : {kSquare, kDisk}) {
    const CoefficientField eps = full_trig(cs);
    FieldFactory fac(cs, 51);
    for (Components which : {Components::All, Components::AxialOnly, Components::InPlaneOnly}) {
      const VectorField u = fac.divfree_tangential_zero(eps, which);
      Rng rng(7);
      for (const Vec3& x : random_points(cs, 50, rng)) {
        const VectorJet uj = u(x);
        const RealJet e = eps.eval(x);
        const cplx d = e.value * uj.div() + e.grad.cast<cplx>().dot(uj.value());
        CHECK(std::abs(d) <= 1e-12 * std::max(1.0, uj.jacobian().norm()));
      }
    }
  }
}

TEST_CASE("disk TE potential needs degree at least one") {
  CHECK_THROWS(disk_te_potential(kDisk, ExpPoly::constant(1.0), 0, ExpPoly::constant(1.0)));
}
