#include "doctest.h"

#include <algorithm>

#include "maxcyl/spectral/schrodinger.hpp"

using namespace maxcyl;

namespace {

const CrossSection kSquare = CrossSection::rectangle(kPi, kPi);

CoefficientField constant(double c) { return CoefficientField::constant(c, kSquare); }

CoefficientField varied() {
  return CoefficientField::create({CoefficientTerm::constant(2.0), CoefficientTerm::trig(0.3, 1.0, 0.5, 1, 0.2),
                                   CoefficientTerm::poly(0.05, 1, 0)},
                                  1.0, 3.0, kSquare);
}

double max_abs(const SpMat& m) {
  double r = 0.0;
  for (int c = 0; c < m.outerSize(); ++c)
    for (SpMat::InnerIterator it(m, c); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

std::vector<cplx> sorted_eigenvalues(const SpMat& A) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(A), false);
  std::vector<cplx> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  return v;
}

}  // namespace

TEST_CASE("grid construction errors") {
  CHECK_THROWS_AS(StaggeredGrid(CrossSection::disk(1.0), 8, 8, 8), UnsupportedGeometryError);
  CHECK_THROWS_AS(StaggeredGrid(kSquare, 3, 8, 8), DomainError);
  CHECK_THROWS_AS(StaggeredGrid(kSquare, 8, 8, 2), DomainError);
  const StaggeredGrid g(kSquare, 4, 5, 6);
  CHECK(g.edge_count() == 4 * 4 * 6 + 3 * 5 * 6 + 3 * 4 * 6);
  CHECK(g.ex(0, 0, 0) == -1);  // tangential to the wall x2 = 0
  CHECK(g.vertex(0, 2, 1) == -1);
  CHECK(g.h3() == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("discrete chain complex") {
  const StaggeredGrid g(kSquare, 5, 4, 6);
  for (double k : {0.0, 1.3, kPi}) {
    const YeeOperators op = assemble_yee(g, varied(), varied(), k);
    const SpMat CG = op.curl * op.gradient;
    const SpMat DC = op.divergence * op.curl;
    CHECK(max_abs(CG) <= 1e-13 * max_abs(op.curl) * max_abs(op.gradient));
    CHECK(max_abs(DC) <= 1e-13 * max_abs(op.divergence) * max_abs(op.curl));
    CHECK(max_abs(op.curl) > 1.0);
  }
}

TEST_CASE("curl-curl matrix is Hermitian positive semidefinite") {
  const StaggeredGrid g(kSquare, 4, 4, 4);
  const CurlCurlPencil p = assemble_curlcurl(g, varied(), constant(1.5), 0.9);
  const SpMat diff = SpMat(p.K.adjoint()) - p.K;
  CHECK(max_abs(diff) <= 1e-14 * max_abs(p.K));
  CHECK(p.M.minCoeff() >= 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(p.K)};
  CHECK(es.eigenvalues().minCoeff() >= -1e-10 * es.eigenvalues().maxCoeff());
}

TEST_CASE("Bloch phase is 2 pi periodic") {
  const StaggeredGrid g(kSquare, 4, 4, 4);
  const CurlCurlPencil a = assemble_curlcurl(g, varied(), varied(), 0.7);
  const CurlCurlPencil b = assemble_curlcurl(g, varied(), varied(), 0.7 + kTwoPi);
  CHECK(max_abs(SpMat(a.K - b.K)) <= 1e-12 * max_abs(a.K));
}

TEST_CASE("analytic empty-waveguide values") {
  const auto v0 = analytic_empty_bands(kPi, kPi, 0.0, 8);
  const std::vector<double> e0 = {1, 1, 2, 2, 4, 4, 5, 5};
  for (int i = 0; i < 8; ++i) CHECK(v0[std::size_t(i)] == doctest::Approx(e0[std::size_t(i)]));
  const auto vp = analytic_empty_bands(kPi, kPi, kPi, 8);
  for (int i = 0; i < 4; ++i) CHECK(vp[std::size_t(i)] == doctest::Approx(1.0 + kPi * kPi));
  for (int i = 4; i < 8; ++i) CHECK(vp[std::size_t(i)] == doctest::Approx(2.0 + kPi * kPi));
  const auto ks = uniform_k_samples(4);
  CHECK(ks.size() == 4);
  CHECK(ks[1] == doctest::Approx(kPi / 2));
}

TEST_CASE("iterative eigenpairs match the dense reference") {
  const StaggeredGrid g(kSquare, 4, 4, 4);
  const CoefficientField eps = varied();
  const CoefficientField mu = constant(1.2);
  const CurlCurlPencil p = assemble_curlcurl(g, eps, mu, 0.4);
  EigenOptions opt;
  opt.shift = default_shift(kSquare, eps, mu);
  const EigenResult it = smallest_divfree_eigenpairs(g, p, 6, opt);
  const RVec dense = dense_nonzero_eigenvalues(p, 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(std::abs(it.values[i] - dense[i]) <= 1e-8 * dense[i]);
    CHECK(it.residuals[std::size_t(i)] <= 1e-9);
    CHECK(it.div_residuals[std::size_t(i)] <= 1e-8);
  }
}

TEST_CASE("empty waveguide on a coarse grid") {
  const StaggeredGrid g(kSquare, 8, 8, 8);
  const BandStructure bs = maxwell_bands(g, constant(1.0), constant(1.0), {0.0, kPi}, 6);
  const auto a0 = analytic_empty_bands(kPi, kPi, 0.0, 6);
  const auto ap = analytic_empty_bands(kPi, kPi, kPi, 6);
  for (int n = 0; n < 6; ++n) {
    CHECK(std::abs(bs.bands(0, n).real() - a0[std::size_t(n)]) <= 0.08 * a0[std::size_t(n)]);
    CHECK(std::abs(bs.bands(1, n).real() - ap[std::size_t(n)]) <= 0.08 * ap[std::size_t(n)]);
    CHECK(bs.div_residuals(0, n) <= 1e-8);
  }
  // Numerical degeneracy survives the square symmetry.
  CHECK(std::abs(bs.bands(0, 0) - bs.bands(0, 1)) <= 1e-8);
  CHECK(std::abs(bs.bands(1, 0) - bs.bands(1, 3)) <= 1e-8);
}

TEST_CASE("flat-band detector") {
  BandStructure bs;
  bs.k_samples = uniform_k_samples(16);
  bs.bands.resize(16, 2);
  for (int j = 0; j < 16; ++j) {
    bs.bands(j, 0) = 3.0;
    bs.bands(j, 1) = 5.0 + std::cos(bs.k_samples[std::size_t(j)]);
  }
  const FlatBandReport r = flat_band_scan(bs, 1e-3);
  CHECK(r.bands[0].flat);
  CHECK_FALSE(r.bands[1].flat);
  CHECK(r.bands[1].rel_variation == doctest::Approx(2.0 / 5.0).epsilon(1e-3));
  CHECK(r.any_flat);
  CHECK(r.verdict == "flat-band candidate at resolution");

  BandStructure few = bs;
  few.k_samples.resize(8);
  few.bands.conservativeResize(8, 2);
  CHECK_THROWS_AS(flat_band_scan(few, 1e-3), DomainError);

  const ContinuityReport c = continuity_report(bs);
  CHECK(c.jumps == 0);
  bs.bands(5, 1) += 10.0;
  CHECK(continuity_report(bs).jumps > 0);
}

TEST_CASE("Schroedinger operator: zero potential") {
  const StaggeredGrid g(kSquare, 6, 6, 4);
  const PotentialSampler zero = [](const Vec3&) { return CMat6(CMat6::Zero()); };
  const BoundarySampler none = [](const BoundaryPoint&) { return Mat6(Mat6::Zero()); };
  const SchrodingerOperator op = assemble_schrodinger(g, zero, none, 0.0);
  const auto ev = sorted_eigenvalues(op.A);
  // The axial second-triple component is Neumann on every wall: one constant mode.
  CHECK(std::abs(ev[0]) <= 1e-10);
  CHECK(ev[1].real() == doctest::Approx(1.0).epsilon(0.05));
  for (const cplx& z : ev) CHECK(std::abs(z.imag()) <= 1e-8);

  // Wall vertices of Dirichlet components carry no unknown.
  CHECK(op.unknown_of(0, 2) == -1);
  CHECK(op.unknown_of(0, 5) >= 0);
}

TEST_CASE("Schroedinger operator: constant potential shifts the spectrum") {
  const StaggeredGrid g(kSquare, 5, 5, 4);
  const PotentialSampler zero = [](const Vec3&) { return CMat6(CMat6::Zero()); };
  const PotentialSampler shift = [](const Vec3&) { return CMat6(2.5 * CMat6::Identity()); };
  const BoundarySampler none = [](const BoundaryPoint&) { return Mat6(Mat6::Zero()); };
  const auto e0 = sorted_eigenvalues(assemble_schrodinger(g, zero, none, 1.1).A);
  const auto e1 = sorted_eigenvalues(assemble_schrodinger(g, shift, none, 1.1).A);
  REQUIRE(e0.size() == e1.size());
  for (std::size_t i = 0; i < e0.size(); ++i) CHECK(std::abs(e1[i] - e0[i] - 2.5) <= 1e-9 * (1.0 + std::abs(e0[i])));

  // Reduced potential of a homogeneous medium at lambda = 0 vanishes.
  const Medium m{constant(2.0), constant(1.5)};
  const PotentialSampler reduced = [&](const Vec3& x) { return m.v(x, 0.0); };
  const BoundarySampler sigma = [&](const BoundaryPoint& bp) { return m.sigma(bp); };
  const auto e2 = sorted_eigenvalues(assemble_schrodinger(g, reduced, sigma, 1.1).A);
  for (std::size_t i = 0; i < e0.size(); ++i) CHECK(std::abs(e2[i] - e0[i]) <= 1e-9 * (1.0 + std::abs(e0[i])));
}

TEST_CASE("Schroedinger bands: dense and iterative agree") {
  const StaggeredGrid g(kSquare, 5, 5, 4);
  const Medium m{varied(), varied()};
  const PotentialSampler V = [&](const Vec3& x) { return m.v(x, 0.6); };
  const BoundarySampler S = [&](const BoundaryPoint& bp) { return m.sigma(bp); };
  SchrodingerOptions dense;
  SchrodingerOptions sparse;
  sparse.dense_limit = 0;
  const BandStructure a = schrodinger_bands(g, V, S, {0.3}, 6, dense);
  const BandStructure b = schrodinger_bands(g, V, S, {0.3}, 6, sparse);
  for (int n = 0; n < 6; ++n) CHECK(std::abs(a.bands(0, n) - b.bands(0, n)) <= 1e-7 * (1.0 + std::abs(a.bands(0, n))));
}
