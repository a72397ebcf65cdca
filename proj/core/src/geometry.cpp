#include "maxcyl/geometry.hpp"

#include <cmath>
#include <sstream>

namespace maxcyl {

CrossSection CrossSection::rectangle(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("rectangle side lengths must be positive and finite");
  }
  return CrossSection(Shape::Rectangle, a, b);
}

CrossSection CrossSection::disk(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("disk radius must be positive and finite");
  return CrossSection(Shape::Disk, radius, radius);
}

double CrossSection::area() const { return is_rectangle() ? a_ * b_ : kPi * a_ * a_; }

double CrossSection::perimeter() const { return is_rectangle() ? 2.0 * (a_ + b_) : kTwoPi * a_; }

double CrossSection::length_scale() const { return is_rectangle() ? std::max(a_, b_) : 2.0 * a_; }

bool CrossSection::contains(const Vec3& x, double rel_tol) const {
  const double tol = rel_tol * length_scale();
  if (!x.allFinite()) return false;
  if (is_rectangle()) {
    return x[0] >= -tol && x[0] <= a_ + tol && x[1] >= -tol && x[1] <= b_ + tol;
  }
  return std::hypot(x[0], x[1]) <= a_ + tol;
}

std::string CrossSection::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (is_rectangle()) {
    os << "rectangle(a=" << a_ << ", b=" << b_ << ")";
  } else {
    os << "disk(R=" << a_ << ")";
  }
  return os.str();
}

namespace {

BoundaryPoint make_point(const Vec3& position, const Vec3& normal, double curvature) {
  BoundaryPoint bp;
  bp.position = position;
  bp.normal = normal;
  bp.tangent = Vec3(normal[1], -normal[0], 0.0);
  bp.curvature = curvature;
  return bp;
}

Vec3 face_normal(int face) {
  switch (face) {
    case 0: return Vec3(0.0, -1.0, 0.0);
    case 1: return Vec3(1.0, 0.0, 0.0);
    case 2: return Vec3(0.0, 1.0, 0.0);
    case 3: return Vec3(-1.0, 0.0, 0.0);
    default: throw DomainError("rectangle face index must be in [0, 3]");
  }
}

}  // namespace

BoundaryPoint boundary_frame(const CrossSection& cs, double s, double x3) {
  if (cs.is_disk()) {
    const double R = cs.radius();
    const Vec3 nu(std::cos(s), std::sin(s), 0.0);
    return make_point(Vec3(R * nu[0], R * nu[1], x3), nu, 1.0 / R);
  }

  const double a = cs.a();
  const double b = cs.b();
  const double per = cs.perimeter();
  double t = std::fmod(s, per);
  if (t < 0.0) t += per;

  const double corners[] = {0.0, a, a + b, 2.0 * a + b, per};
  const double tol = 1e-12 * per;
  for (double c : corners) {
    if (std::abs(t - c) <= tol) {
      std::ostringstream os;
      os << "boundary parameter s=" << s << " hits a rectangle corner";
      throw CornerError(os.str());
    }
  }

  if (t < a) return make_point(Vec3(t, 0.0, x3), face_normal(0), 0.0);
  if (t < a + b) return make_point(Vec3(a, t - a, x3), face_normal(1), 0.0);
  if (t < 2.0 * a + b) return make_point(Vec3(a - (t - a - b), b, x3), face_normal(2), 0.0);
  return make_point(Vec3(0.0, b - (t - 2.0 * a - b), x3), face_normal(3), 0.0);
}

BoundaryPoint rectangle_face_frame(const CrossSection& cs, int face, const Vec3& position) {
  if (!cs.is_rectangle()) throw UnsupportedGeometryError("rectangle_face_frame requires a rectangle");
  return make_point(position, face_normal(face), 0.0);
}

Eigen::Matrix<double, 4, 6> boundary_condition_matrix(const BoundaryPoint& bp) {
  const Vec3& n = bp.normal;
  Eigen::Matrix<double, 4, 6> N = Eigen::Matrix<double, 4, 6>::Zero();
  N(0, 1) = -n[2];
  N(0, 2) = n[1];
  N(1, 0) = n[2];
  N(1, 2) = -n[0];
  N(2, 0) = -n[1];
  N(2, 1) = n[0];
  N(3, 3) = n[0];
  N(3, 4) = n[1];
  N(3, 5) = n[2];
  return N;
}

}  // namespace maxcyl
