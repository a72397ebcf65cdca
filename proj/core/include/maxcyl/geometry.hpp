#pragma once

// Cross-section geometry of the cylinder U x R and the boundary frame
// (outward normal, tangent, curvature) on its lateral surface.

#include <string>

#include "maxcyl/types.hpp"

namespace maxcyl {

enum class Shape { Rectangle, Disk };

/// Rectangle (0,a) x (0,b) or disk of radius R centred at the origin.
class CrossSection {
 public:
  static CrossSection rectangle(double a, double b);
  static CrossSection disk(double radius);

  Shape shape() const { return shape_; }
  bool is_rectangle() const { return shape_ == Shape::Rectangle; }
  bool is_disk() const { return shape_ == Shape::Disk; }

  double a() const { return a_; }
  double b() const { return b_; }
  double radius() const { return a_; }

  double area() const;
  double perimeter() const;
  /// Diameter-like length used to scale tolerances.
  double length_scale() const;

  /// True when (x1, x2) lies in the closure of U, up to a relative tolerance.
  bool contains(const Vec3& x, double rel_tol = 1e-12) const;

  std::string describe() const;

 private:
  CrossSection(Shape shape, double a, double b) : shape_(shape), a_(a), b_(b) {}

  Shape shape_;
  double a_;
  double b_;
};

struct BoundaryPoint {
  Vec3 position;
  Vec3 normal;   // unit outward normal, normal[2] == 0
  Vec3 tangent;  // tangent = (normal[1], -normal[0], 0)
  double curvature = 0.0;
};

/// Frame at boundary parameter s and height x3.
///
/// Rectangle: s is arc length along the perimeter, counter-clockwise from the
/// corner (0,0); corners raise CornerError. Disk: s is the polar angle.
BoundaryPoint boundary_frame(const CrossSection& cs, double s, double x3);

/// Frame on a specific rectangle face (0: x2=0, 1: x1=a, 2: x2=b, 3: x1=0)
/// at an arbitrary position, corners included. Used where one-sided face data
/// is needed at a corner, e.g. ghost-point elimination.
BoundaryPoint rectangle_face_frame(const CrossSection& cs, int face, const Vec3& position);

/// The 4x6 trace matrix N: rows 0-2 give nu x Phi^(1), row 3 gives <nu, Phi^(2)>.
Eigen::Matrix<double, 4, 6> boundary_condition_matrix(const BoundaryPoint& bp);

}  // namespace maxcyl
