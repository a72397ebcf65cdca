#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace maxcyl {

using cplx = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using CVec6 = Eigen::Matrix<cplx, 6, 1>;
using CMat6 = Eigen::Matrix<cplx, 6, 6>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Sesquilinear inner product, conjugate-linear in the second slot.
inline cplx inner(const CVec3& a, const CVec3& b) { return b.dot(a); }
inline cplx inner(const CVec6& a, const CVec6& b) { return b.dot(a); }

/// Bilinear cross product. Eigen's cross() conjugates complex results.
inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return CVec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

/// Projector onto the plane orthogonal to the cylinder axis e3.
inline Mat3 projector_e3_perp() { return Eigen::Vector3d(1.0, 1.0, 0.0).asDiagonal(); }

// Error hierarchy. Every error carries a message naming the offending value.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point outside the closure of the cross-section.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coefficient violates its declared bounds or is nonpositive.
class CoefficientError : public Error {
 public:
  using Error::Error;
};

/// A manufactured field or input violates a trace or divergence constraint.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Rectangle corner requested from the boundary frame.
class CornerError : public Error {
 public:
  using Error::Error;
};

/// Requested operation is not available for the cross-section shape.
class UnsupportedGeometryError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver or factorization failure.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxcyl
