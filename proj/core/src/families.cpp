#include "maxcyl/families.hpp"

#include <cmath>
#include <sstream>

namespace maxcyl {

namespace {

constexpr double kTraceTol = 1e-12;

ExpPoly r_squared() { return ExpPoly::monomial(1.0, {2, 0, 0}) + ExpPoly::monomial(1.0, {0, 2, 0}); }

ExpPoly rim_factor(const CrossSection& cs) {
  const double R = cs.radius();
  return ExpPoly::constant(R * R) - r_squared();
}

CVec3 value(const ExpPolyVec& v, const Vec3& x) { return CVec3(v[0].value(x), v[1].value(x), v[2].value(x)); }

double max_abs_on(const std::vector<BoundaryPoint>& pts, const std::function<double(const BoundaryPoint&)>& f) {
  double m = 0.0;
  for (const auto& bp : pts) m = std::max(m, f(bp));
  return m;
}

void require_small(double residual, double scale, const std::string& what) {
  if (residual > kTraceTol * std::max(1.0, scale)) {
    std::ostringstream os;
    os << what << " violated: max residual " << residual << " on boundary samples";
    throw ConstraintError(os.str());
  }
}

void check_vanishes(const ExpPoly& p, const CrossSection& cs, const std::string& what) {
  const auto pts = boundary_samples(cs, 64);
  double scale = 0.0;
  const double res = max_abs_on(pts, [&](const BoundaryPoint& bp) { return std::abs(p.value(bp.position)); });
  for (const auto& bp : pts) scale = std::max(scale, std::abs(p.derivative(0).value(bp.position)) * cs.length_scale());
  require_small(res, scale, what);
}

double field_scale(const ExpPolyVec& v, const std::vector<BoundaryPoint>& pts) {
  return max_abs_on(pts, [&](const BoundaryPoint& bp) { return value(v, bp.position).norm(); });
}

void check_tangential_zero(const ExpPolyVec& v, const CrossSection& cs) {
  const auto pts = boundary_samples(cs, 200);
  const double res = max_abs_on(pts, [&](const BoundaryPoint& bp) {
    const CVec3 u = value(v, bp.position);
    const CVec3 n = bp.normal.cast<cplx>();
    return (u - n * n.dot(u)).norm();
  });
  require_small(res, field_scale(v, pts), "tangential-trace condition u_tau = 0");
}

void check_normal_zero(const ExpPolyVec& v, const CrossSection& cs) {
  const auto pts = boundary_samples(cs, 200);
  const double res = max_abs_on(pts, [&](const BoundaryPoint& bp) {
    return std::abs(bp.normal.cast<cplx>().dot(value(v, bp.position)));
  });
  require_small(res, field_scale(v, pts), "normal-trace condition v_nu = 0");
}

ExpPoly planar_mode(const CrossSection& cs, double m, double n, bool sin1, bool sin2) {
  const Vec3 w1(kPi * m / cs.a(), 0.0, 0.0);
  const Vec3 w2(0.0, kPi * n / cs.b(), 0.0);
  const ExpPoly f1 = sin1 ? ExpPoly::sine(1.0, w1) : ExpPoly::cosine(1.0, w1);
  const ExpPoly f2 = sin2 ? ExpPoly::sine(1.0, w2) : ExpPoly::cosine(1.0, w2);
  return f1 * f2;
}

void require_rectangle(const CrossSection& cs) {
  if (!cs.is_rectangle()) throw UnsupportedGeometryError("rectangle family requested on " + cs.describe());
}
void require_disk(const CrossSection& cs) {
  if (!cs.is_disk()) throw UnsupportedGeometryError("disk family requested on " + cs.describe());
}

}  // namespace

std::vector<BoundaryPoint> boundary_samples(const CrossSection& cs, int count) {
  std::vector<BoundaryPoint> pts;
  pts.reserve(count);
  const double golden = 0.6180339887498949;
  for (int j = 0; j < count; ++j) {
    const double frac = (j + 0.5) / count;
    const double s = cs.is_rectangle() ? frac * cs.perimeter() : frac * kTwoPi;
    const double x3 = std::fmod(j * golden, 1.0);
    pts.push_back(boundary_frame(cs, s, x3));
  }
  return pts;
}

VectorField make_divfree_normal_zero(const CoefficientField& mu, const CrossSection& cs, const StreamSpec& spec) {
  check_vanishes(spec.psi, cs, "stream function psi = 0 on the boundary");
  check_vanishes(spec.chi1, cs, "in-plane potential chi1 = 0 on the boundary");
  check_vanishes(spec.chi2, cs, "in-plane potential chi2 = 0 on the boundary");
  const ExpPolyVec flux = curl(ExpPolyVec{spec.chi1, spec.chi2, spec.psi});
  check_normal_zero(flux, cs);
  return reciprocal(mu.field()) * VectorField(flux);
}

ExpPolyVec tangential_zero_rectangle(const CrossSection& cs, const std::vector<RectangleMode>& modes) {
  require_rectangle(cs);
  ExpPolyVec u;
  for (const auto& md : modes) {
    u[0] += planar_mode(cs, md.m1, md.n1, false, true) * md.g;
    u[1] += planar_mode(cs, md.m2, md.n2, true, false) * md.h;
    u[2] += planar_mode(cs, md.m3, md.n3, true, true) * md.q;
  }
  return u;
}

ExpPolyVec tangential_zero_disk(const CrossSection& cs, const DiskSpec& spec) {
  require_disk(cs);
  const ExpPoly rim = rim_factor(cs);
  ExpPolyVec u = rim * spec.interior;
  u[0] += spec.alpha * ExpPoly::coordinate(0);
  u[1] += spec.alpha * ExpPoly::coordinate(1);
  return u;
}

VectorField make_tangential_zero(const CrossSection& cs, const std::vector<RectangleMode>& modes) {
  const ExpPolyVec u = tangential_zero_rectangle(cs, modes);
  check_tangential_zero(u, cs);
  return VectorField(u);
}

VectorField make_tangential_zero(const CrossSection& cs, const DiskSpec& spec) {
  const ExpPolyVec u = tangential_zero_disk(cs, spec);
  check_tangential_zero(u, cs);
  return VectorField(u);
}

ExpPolyVec normal_zero_rectangle(const CrossSection& cs, const std::vector<RectangleMode>& modes) {
  require_rectangle(cs);
  ExpPolyVec f;
  for (const auto& md : modes) {
    f[0] += planar_mode(cs, md.m1, md.n1, true, false) * md.g;
    f[1] += planar_mode(cs, md.m2, md.n2, false, true) * md.h;
    f[2] += planar_mode(cs, md.m3, md.n3, false, false) * md.q;
  }
  check_normal_zero(f, cs);
  return f;
}

ExpPolyVec normal_zero_disk(const CrossSection& cs, const DiskSpec& spec) {
  require_disk(cs);
  ExpPolyVec f = rim_factor(cs) * spec.interior;
  f[0] -= spec.alpha * ExpPoly::coordinate(1);
  f[1] += spec.alpha * ExpPoly::coordinate(0);
  f[2] += spec.beta;
  check_normal_zero(f, cs);
  return f;
}

ExpPolyVec waveguide_field(const WaveguideSpec& spec) {
  const ExpPolyVec te = curl(ExpPolyVec{ExpPoly(), ExpPoly(), spec.chi});
  const ExpPolyVec tm = curl(curl(ExpPolyVec{ExpPoly(), ExpPoly(), spec.phi}));
  return tm + te;
}

VectorField make_divfree_tangential_zero(const CoefficientField& eps, const CrossSection& cs,
                                         const WaveguideSpec& spec) {
  check_vanishes(spec.phi, cs, "TM potential phi = 0 on the boundary");
  check_vanishes(spec.phi.derivative(0).derivative(0) + spec.phi.derivative(1).derivative(1), cs,
                 "TM potential planar Laplacian = 0 on the boundary");
  {
    const auto pts = boundary_samples(cs, 64);
    const ExpPolyVec g = gradient(spec.chi);
    const double res = max_abs_on(pts, [&](const BoundaryPoint& bp) {
      return std::abs(bp.normal.cast<cplx>().dot(value(g, bp.position)));
    });
    require_small(res, field_scale(g, pts), "TE potential zero normal derivative");
  }
  const ExpPolyVec G = waveguide_field(spec);
  check_tangential_zero(G, cs);
  return reciprocal(eps.field()) * VectorField(G);
}

ExpPoly rectangle_sine_mode(const CrossSection& cs, double m, double n, const ExpPoly& x3_factor) {
  require_rectangle(cs);
  return planar_mode(cs, m, n, true, true) * x3_factor;
}

ExpPoly rectangle_cosine_mode(const CrossSection& cs, double m, double n, const ExpPoly& x3_factor) {
  require_rectangle(cs);
  return planar_mode(cs, m, n, false, false) * x3_factor;
}

ExpPoly disk_vanishing(const CrossSection& cs, const ExpPoly& in_plane, const ExpPoly& x3_factor) {
  require_disk(cs);
  return rim_factor(cs) * in_plane * x3_factor;
}

ExpPoly disk_tm_potential(const CrossSection& cs, const ExpPoly& homogeneous, int degree, const ExpPoly& x3_factor) {
  require_disk(cs);
  if (degree < 0) throw DomainError("TM potential degree must be nonnegative");
  const double R2 = cs.radius() * cs.radius();
  const double alpha = (degree + 3.0) * R2 / (degree + 1.0);
  return rim_factor(cs) * (r_squared() - ExpPoly::constant(alpha)) * homogeneous * x3_factor;
}

ExpPoly disk_te_potential(const CrossSection& cs, const ExpPoly& homogeneous, int degree, const ExpPoly& x3_factor) {
  require_disk(cs);
  if (degree < 1) throw DomainError("TE potential degree must be at least 1");
  const double R2 = cs.radius() * cs.radius();
  const double beta = (degree + 2.0) * R2 / degree;
  return homogeneous * (r_squared() - ExpPoly::constant(beta)) * x3_factor;
}

// ---- FieldFactory ------------------------------------------------------------

ExpPoly FieldFactory::x3_factor() {
  ExpPoly t;
  for (int n = -1; n <= 1; ++n) t += ExpPoly::plane_wave(rng_.complex_uniform(), Vec3(0.0, 0.0, kTwoPi * n));
  return t;
}

Vec3 FieldFactory::random_frequency() {
  const double k1 = rng_.uniform(-1.5, 1.5);
  const double k2 = rng_.uniform(-1.5, 1.5);
  const int n3 = rng_.integer(-1, 1);
  return Vec3(k1, k2, kTwoPi * n3);
}

ExpPoly FieldFactory::planar(int max_degree) {
  ExpPoly p;
  for (int d = 0; d <= max_degree; ++d) {
    for (int j = 0; j <= d; ++j) p += ExpPoly::monomial(rng_.complex_uniform(), {j, d - j, 0});
  }
  return p;
}

ExpPoly FieldFactory::modulated(int max_degree) {
  const ExpPoly p = planar(max_degree);
  return p * x3_factor();
}

ExpPoly FieldFactory::homogeneous(int degree) {
  ExpPoly h;
  for (int j = 0; j <= degree; ++j) h += ExpPoly::monomial(rng_.complex_uniform(), {j, degree - j, 0});
  return h;
}

ExpPolyVec FieldFactory::smooth_poly() {
  ExpPolyVec v;
  for (auto& c : v) {
    for (int t = 0; t < 2; ++t) {
      const Vec3 w = random_frequency();
      const cplx amp = rng_.complex_uniform();
      c += ExpPoly::plane_wave(amp, w);
    }
  }
  return v;
}

ComplexField FieldFactory::scalar() {
  ExpPoly s;
  for (int t = 0; t < 3; ++t) {
    const Vec3 w = random_frequency();
    const cplx amp = rng_.complex_uniform();
    s += ExpPoly::plane_wave(amp, w);
  }
  return complex_field(s);
}

VectorField FieldFactory::smooth() { return VectorField(smooth_poly()); }

VectorField FieldFactory::tangential_zero(Components which) {
  const bool axial = which != Components::InPlaneOnly;
  const bool in_plane = which != Components::AxialOnly;
  if (cs_.is_rectangle()) {
    std::vector<RectangleMode> modes;
    for (int t = 0; t < 2; ++t) {
      RectangleMode md;
      md.m1 = rng_.integer(0, 2);
      md.n1 = rng_.integer(1, 2);
      md.m2 = rng_.integer(1, 2);
      md.n2 = rng_.integer(0, 2);
      md.m3 = rng_.integer(1, 2);
      md.n3 = rng_.integer(1, 2);
      md.g = in_plane ? x3_factor() : ExpPoly();
      md.h = in_plane ? x3_factor() : ExpPoly();
      md.q = axial ? x3_factor() : ExpPoly();
      modes.push_back(md);
    }
    return make_tangential_zero(cs_, modes);
  }
  DiskSpec spec;
  for (int i = 0; i < 3; ++i) {
    const bool on = (i == 2) ? axial : in_plane;
    spec.interior[i] = on ? modulated(1) : ExpPoly();
  }
  spec.alpha = in_plane ? modulated(1) : ExpPoly();
  return make_tangential_zero(cs_, spec);
}

VectorField FieldFactory::normal_zero(Components which) {
  const bool axial = which != Components::InPlaneOnly;
  const bool in_plane = which != Components::AxialOnly;
  if (cs_.is_rectangle()) {
    std::vector<RectangleMode> modes;
    for (int t = 0; t < 2; ++t) {
      RectangleMode md;
      md.m1 = rng_.integer(1, 2);
      md.n1 = rng_.integer(0, 2);
      md.m2 = rng_.integer(0, 2);
      md.n2 = rng_.integer(1, 2);
      md.m3 = rng_.integer(0, 2);
      md.n3 = rng_.integer(0, 2);
      md.g = in_plane ? x3_factor() : ExpPoly();
      md.h = in_plane ? x3_factor() : ExpPoly();
      md.q = axial ? x3_factor() : ExpPoly();
      modes.push_back(md);
    }
    return VectorField(normal_zero_rectangle(cs_, modes));
  }
  DiskSpec spec;
  for (int i = 0; i < 3; ++i) {
    const bool on = (i == 2) ? axial : in_plane;
    spec.interior[i] = on ? modulated(1) : ExpPoly();
  }
  spec.alpha = in_plane ? modulated(1) : ExpPoly();
  spec.beta = axial ? modulated(2) : ExpPoly();
  return VectorField(normal_zero_disk(cs_, spec));
}

VectorField FieldFactory::divfree_normal_zero(const CoefficientField& mu, Components which) {
  // psi feeds the in-plane components; x3-independent (chi1, chi2) feed only v3.
  StreamSpec spec;
  const bool in_plane = which != Components::AxialOnly;
  const bool axial = which != Components::InPlaneOnly;
  auto potential = [&](bool x3_dependent) {
    const ExpPoly t = x3_dependent ? x3_factor() : ExpPoly::constant(rng_.complex_uniform());
    if (cs_.is_rectangle()) {
      const int m = rng_.integer(1, 2);
      const int n = rng_.integer(1, 2);
      return rectangle_sine_mode(cs_, m, n, t);
    }
    return disk_vanishing(cs_, planar(1), t);
  };
  if (in_plane) spec.psi = potential(true);
  if (axial) {
    const bool x3_dependent = which == Components::All;
    spec.chi1 = potential(x3_dependent);
    spec.chi2 = potential(x3_dependent);
  }
  return make_divfree_normal_zero(mu, cs_, spec);
}

VectorField FieldFactory::divfree_tangential_zero(const CoefficientField& eps, Components which) {
  WaveguideSpec spec;
  const bool axial = which != Components::InPlaneOnly;
  const bool in_plane = which != Components::AxialOnly;
  if (axial) {
    // An x3-independent TM potential yields a purely axial field.
    const ExpPoly t = which == Components::All ? x3_factor() : ExpPoly::constant(rng_.complex_uniform());
    if (cs_.is_rectangle()) {
      const int m = rng_.integer(1, 2);
      const int n = rng_.integer(1, 2);
      spec.phi = rectangle_sine_mode(cs_, m, n, t);
    } else {
      const int m = rng_.integer(0, 1);
      spec.phi = disk_tm_potential(cs_, homogeneous(m), m, t);
    }
  }
  if (in_plane) {
    const ExpPoly t = x3_factor();
    if (cs_.is_rectangle()) {
      const int m = rng_.integer(1, 2);
      const int n = rng_.integer(0, 2);
      spec.chi = rectangle_cosine_mode(cs_, m, n, t);
    } else {
      const int m = rng_.integer(1, 2);
      spec.chi = disk_te_potential(cs_, homogeneous(m), m, t);
    }
  }
  return make_divfree_tangential_zero(eps, cs_, spec);
}

}  // namespace maxcyl
