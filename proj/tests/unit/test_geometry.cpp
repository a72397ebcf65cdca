#include "doctest.h"

#include <cmath>

#include "maxcyl/quadrature.hpp"
#include "maxcyl/rng.hpp"

using namespace maxcyl;

TEST_CASE("rectangle frame on each face") {
  const CrossSection cs = CrossSection::rectangle(2.0, 1.0);
  const BoundaryPoint bottom = boundary_frame(cs, 0.5, 0.3);
  CHECK(bottom.position.isApprox(Vec3(0.5, 0.0, 0.3)));
  CHECK(bottom.normal.isApprox(Vec3(0, -1, 0)));
  CHECK(bottom.curvature == 0.0);
  CHECK(boundary_frame(cs, 2.5, 0).normal.isApprox(Vec3(1, 0, 0)));
  CHECK(boundary_frame(cs, 2.5, 0).position.isApprox(Vec3(2.0, 0.5, 0)));
  CHECK(boundary_frame(cs, 3.5, 0).normal.isApprox(Vec3(0, 1, 0)));
  CHECK(boundary_frame(cs, 3.5, 0).position.isApprox(Vec3(1.5, 1.0, 0)));
  CHECK(boundary_frame(cs, 5.5, 0).normal.isApprox(Vec3(-1, 0, 0)));
  CHECK(boundary_frame(cs, 5.5, 0).position.isApprox(Vec3(0.0, 0.5, 0)));
  // Periodic in s.
  CHECK(boundary_frame(cs, 0.5 + cs.perimeter(), 0).position.isApprox(bottom.position.cwiseProduct(Vec3(1, 1, 0))));
}

TEST_CASE("rectangle corners are rejected") {
  const CrossSection cs = CrossSection::rectangle(2.0, 1.0);
  for (double s : {0.0, 2.0, 3.0, 5.0, 6.0}) CHECK_THROWS_AS(boundary_frame(cs, s, 0.0), CornerError);
  // The face-specific frame is defined at corners.
  const BoundaryPoint c = rectangle_face_frame(cs, 1, Vec3(2.0, 0.0, 0.0));
  CHECK(c.normal.isApprox(Vec3(1, 0, 0)));
  CHECK_THROWS_AS(rectangle_face_frame(CrossSection::disk(1.0), 0, Vec3::Zero()), UnsupportedGeometryError);
}

TEST_CASE("disk frame") {
  const CrossSection cs = CrossSection::disk(2.0);
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const double s = kTwoPi * rng.uniform();
    const BoundaryPoint bp = boundary_frame(cs, s, 0.25);
    CHECK(bp.position.head<2>().norm() == doctest::Approx(2.0));
    CHECK((bp.normal - bp.position.cwiseProduct(Vec3(0.5, 0.5, 0.0))).norm() < 1e-15);
    CHECK(bp.curvature == doctest::Approx(0.5));
    CHECK(std::abs(bp.tangent.dot(bp.normal)) < 1e-15);
    CHECK(bp.tangent.norm() == doctest::Approx(1.0));
    CHECK(bp.normal[2] == 0.0);
  }
}

TEST_CASE("containment and measures") {
  const CrossSection r = CrossSection::rectangle(kPi, 2.0);
  CHECK(r.contains(Vec3(kPi, 2.0, 5.0)));
  CHECK_FALSE(r.contains(Vec3(kPi + 1e-6, 1.0, 0.0)));
  CHECK(r.area() == doctest::Approx(2.0 * kPi));
  const CrossSection d = CrossSection::disk(1.0);
  CHECK(d.contains(Vec3(1.0, 0.0, 0.0)));
  CHECK_FALSE(d.contains(Vec3(0.8, 0.8, 0.0)));
  CHECK(d.perimeter() == doctest::Approx(kTwoPi));
}

TEST_CASE("trace matrix") {
  const BoundaryPoint bp = boundary_frame(CrossSection::disk(1.0), 0.7, 0.0);
  const auto N = boundary_condition_matrix(bp);
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Vec3 a(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vec3 b(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    Eigen::Matrix<double, 6, 1> phi;
    phi << a, b;
    const Eigen::Vector4d r = N * phi;
    CHECK((r.head<3>() - bp.normal.cross(a)).norm() < 1e-15);
    CHECK(r[3] == doctest::Approx(bp.normal.dot(b)));
  }
  // Normal first triple and tangential second triple are admissible.
  Eigen::Matrix<double, 6, 1> ok;
  ok << 2.0 * bp.normal, bp.tangent + Vec3(0, 0, 3);
  CHECK((N * ok).norm() < 1e-15);
}

TEST_CASE("Gauss-Legendre exactness") {
  for (int n : {2, 5, 16}) {
    const GaussRule g = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : g.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], p);
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
}

TEST_CASE("cell and boundary rules") {
  const CrossSection r = CrossSection::rectangle(kPi, 2.0);
  const QuadratureRule cr = cell_quadrature(r);
  CHECK(cr.total_weight() == doctest::Approx(r.area()).epsilon(1e-13));
  double m2 = 0.0;
  for (std::size_t q = 0; q < cr.size(); ++q) m2 += cr.weights[q] * cr.nodes[q][0] * cr.nodes[q][0];
  CHECK(m2 == doctest::Approx(2.0 * std::pow(kPi, 3) / 3.0).epsilon(1e-14));
  const QuadratureRule br = boundary_quadrature(r);
  CHECK(br.total_weight() == doctest::Approx(r.perimeter()).epsilon(1e-14));
  CHECK(br.frames.size() == br.size());

  const CrossSection d = CrossSection::disk(1.5);
  const QuadratureRule cd = cell_quadrature(d);
  CHECK(cd.total_weight() == doctest::Approx(d.area()).epsilon(1e-13));
  double r2 = 0.0;  // int r^2 = pi R^4 / 2
  for (std::size_t q = 0; q < cd.size(); ++q) r2 += cd.weights[q] * cd.nodes[q].head<2>().squaredNorm();
  CHECK(r2 == doctest::Approx(kPi * std::pow(1.5, 4) / 2.0).epsilon(1e-13));
  double c2 = 0.0;  // cos(2 pi x3)^2 averages to 1/2
  for (std::size_t q = 0; q < cd.size(); ++q) c2 += cd.weights[q] * std::pow(std::cos(kTwoPi * cd.nodes[q][2]), 2);
  CHECK(c2 == doctest::Approx(0.5 * d.area()).epsilon(1e-13));
  CHECK(boundary_quadrature(d).total_weight() == doctest::Approx(d.perimeter()).epsilon(1e-14));

  QuadratureOrder bad;
  bad.planar = 1;
  CHECK_THROWS_AS(cell_quadrature(r, bad), DomainError);
}
