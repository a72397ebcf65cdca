#pragma once

// Manufactured vector fields that satisfy divergence and boundary-trace
// constraints exactly, plus seeded random families built from them.
//
// Only two closed-form constructions are supported per constraint type; an
// input that does not satisfy the constraint is rejected with
// ConstraintError rather than projected.

#include <vector>

#include "maxcyl/fields.hpp"
#include "maxcyl/rng.hpp"

namespace maxcyl {

/// Fixed boundary sample points: `count` points spread over dU x [0,1),
/// avoiding rectangle corners.
std::vector<BoundaryPoint> boundary_samples(const CrossSection& cs, int count);

/// Vector potential (chi1, chi2, psi) whose components all vanish on dU.
/// psi alone gives the classical stream-function field (d2 psi, -d1 psi, 0).
struct StreamSpec {
  ExpPoly psi;
  ExpPoly chi1;
  ExpPoly chi2;
};

/// v = mu^{-1} curl(chi1, chi2, psi): div(mu v) = 0 and v_nu = 0 on the
/// lateral boundary. Potentials are checked on 64 boundary samples.
VectorField make_divfree_normal_zero(const CoefficientField& mu, const CrossSection& cs, const StreamSpec& spec);

/// Rectangle mode for the tangential-zero family:
///   u1 = cos(pi m1 x1/a) sin(pi n1 x2/b) g(x3)
///   u2 = sin(pi m2 x1/a) cos(pi n2 x2/b) h(x3)
///   u3 = sin(pi m3 x1/a) sin(pi n3 x2/b) q(x3)
/// The mode numbers are real so that non-integer (invalid) choices can be
/// detected; integer modes always satisfy u_tau = 0.
struct RectangleMode {
  double m1 = 1, n1 = 1, m2 = 1, n2 = 1, m3 = 1, n3 = 1;
  ExpPoly g, h, q;
};

/// Disk family: u = (R^2 - r^2) G + alpha (x1, x2, 0)  (tangential-zero), or
///              f = (R^2 - r^2) G + alpha (-x2, x1, 0) + beta e3  (normal-zero).
struct DiskSpec {
  ExpPolyVec interior;
  ExpPoly alpha;
  ExpPoly beta;
};

/// Closed-form vector field with u_tau = 0 on the lateral boundary; checked
/// on 200 boundary samples.
ExpPolyVec tangential_zero_rectangle(const CrossSection& cs, const std::vector<RectangleMode>& modes);
ExpPolyVec tangential_zero_disk(const CrossSection& cs, const DiskSpec& spec);
VectorField make_tangential_zero(const CrossSection& cs, const std::vector<RectangleMode>& modes);
VectorField make_tangential_zero(const CrossSection& cs, const DiskSpec& spec);

/// Closed-form vector field with f_nu = 0 on the lateral boundary. For the
/// rectangle the mode roles swap: f1 = sin cos g, f2 = cos sin h, f3 = cos cos q.
ExpPolyVec normal_zero_rectangle(const CrossSection& cs, const std::vector<RectangleMode>& modes);
ExpPolyVec normal_zero_disk(const CrossSection& cs, const DiskSpec& spec);

/// Potentials of TM and TE type: G = curl curl(phi e3) + curl(chi e3).
/// phi must vanish with its planar Laplacian on dU; chi must have zero normal
/// derivative on dU. Then div G = 0 and G_tau = 0.
struct WaveguideSpec {
  ExpPoly phi;
  ExpPoly chi;
};

ExpPolyVec waveguide_field(const WaveguideSpec& spec);

/// u = eps^{-1} G: div(eps u) = 0 and u_tau = 0 exactly.
VectorField make_divfree_tangential_zero(const CoefficientField& eps, const CrossSection& cs,
                                         const WaveguideSpec& spec);

// Potential builders with the required boundary behaviour.
ExpPoly rectangle_sine_mode(const CrossSection& cs, double m, double n, const ExpPoly& x3_factor);
ExpPoly rectangle_cosine_mode(const CrossSection& cs, double m, double n, const ExpPoly& x3_factor);
/// (R^2 - r^2) p(x1, x2) T(x3).
ExpPoly disk_vanishing(const CrossSection& cs, const ExpPoly& planar, const ExpPoly& x3_factor);
/// (R^2 - r^2)(r^2 - (m+3) R^2 / (m+1)) h_m T: phi = 0 and Laplacian_2 phi = 0 on r = R
/// for h_m homogeneous of degree m.
ExpPoly disk_tm_potential(const CrossSection& cs, const ExpPoly& homogeneous, int degree, const ExpPoly& x3_factor);
/// h_m (r^2 - (m+2) R^2 / m) T, m >= 1: zero radial derivative on r = R.
ExpPoly disk_te_potential(const CrossSection& cs, const ExpPoly& homogeneous, int degree, const ExpPoly& x3_factor);

/// Which components a random family populates. The degenerate variants make
/// sure every block entry of V and Sigma is exercised.
enum class Components { All, AxialOnly, InPlaneOnly };

/// Seeded generator of random members of every family above.
class FieldFactory {
 public:
  FieldFactory(const CrossSection& cs, std::uint64_t seed) : cs_(cs), rng_(seed) {}

  Rng& rng() { return rng_; }

  /// Sum of c_n exp(2 pi i n x3), n in {-1, 0, 1}.
  ExpPoly x3_factor();
  /// Random homogeneous polynomial of the given degree in (x1, x2).
  ExpPoly homogeneous(int degree);

  ComplexField scalar();
  /// Unconstrained smooth periodic field (plane waves).
  VectorField smooth();
  ExpPolyVec smooth_poly();

  VectorField tangential_zero(Components which = Components::All);
  VectorField normal_zero(Components which = Components::All);
  VectorField divfree_normal_zero(const CoefficientField& mu, Components which = Components::All);
  VectorField divfree_tangential_zero(const CoefficientField& eps, Components which = Components::All);

 private:
  Vec3 random_frequency();
  /// Random polynomial in (x1, x2) of total degree <= max_degree.
  ExpPoly planar(int max_degree);
  /// Random planar polynomial of the given degree times x3_factor().
  ExpPoly modulated(int max_degree);

  CrossSection cs_;
  Rng rng_;
};

}  // namespace maxcyl
