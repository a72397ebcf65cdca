#pragma once

// Closed-form scalar and vector fields on the cylinder, evaluated as exact
// second-order jets. Fields are immutable and cheap to copy (shared state),
// so they can be composed freely and evaluated concurrently.

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "maxcyl/exp_poly.hpp"
#include "maxcyl/geometry.hpp"

namespace maxcyl {

template <class T>
class ScalarField {
 public:
  using JetType = Jet2<T>;
  using Fn = std::function<JetType(const Vec3&)>;

  ScalarField() : ScalarField(constant(T(0))) {}
  explicit ScalarField(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  static ScalarField constant(T c) {
    return ScalarField([c](const Vec3&) { return JetType::constant(c); });
  }

  JetType operator()(const Vec3& x) const { return (*fn_)(x); }

 private:
  std::shared_ptr<const Fn> fn_;
};

using RealField = ScalarField<double>;
using ComplexField = ScalarField<cplx>;

/// Real part of a conjugate-symmetric exponential polynomial.
RealField real_field(const ExpPoly& p);
ComplexField complex_field(const ExpPoly& p);
ComplexField to_complex(const RealField& f);

template <class T>
ScalarField<T> operator+(const ScalarField<T>& a, const ScalarField<T>& b) {
  return ScalarField<T>([a, b](const Vec3& x) { return a(x) + b(x); });
}
template <class T>
ScalarField<T> operator-(const ScalarField<T>& a, const ScalarField<T>& b) {
  return ScalarField<T>([a, b](const Vec3& x) { return a(x) - b(x); });
}
template <class T>
ScalarField<T> operator*(const ScalarField<T>& a, const ScalarField<T>& b) {
  return ScalarField<T>([a, b](const Vec3& x) { return a(x) * b(x); });
}
template <class T>
ScalarField<T> operator*(const ScalarField<T>& a, T s) {
  return ScalarField<T>([a, s](const Vec3& x) { return a(x) * s; });
}
template <class T>
ScalarField<T> operator/(const ScalarField<T>& a, const ScalarField<T>& b) {
  return ScalarField<T>([a, b](const Vec3& x) { return a(x) / b(x); });
}
template <class T>
ScalarField<T> reciprocal(const ScalarField<T>& a) {
  return ScalarField<T>([a](const Vec3& x) { return reciprocal(a(x)); });
}
template <class T>
ScalarField<T> pow(const ScalarField<T>& a, double p) {
  return ScalarField<T>([a, p](const Vec3& x) { return pow(a(x), p); });
}
template <class T>
ScalarField<T> sqrt(const ScalarField<T>& a) {
  return ScalarField<T>([a](const Vec3& x) { return sqrt(a(x)); });
}
ComplexField operator*(const RealField& a, const ComplexField& b);

/// Component jets of a C^3-valued field at one point.
struct VectorJet {
  std::array<ComplexJet, 3> comp;

  CVec3 value() const { return CVec3(comp[0].value, comp[1].value, comp[2].value); }
  /// jacobian()(i, j) = d v_i / d x_j.
  CMat3 jacobian() const;
  CVec3 curl() const;
  cplx div() const;
};

class VectorField {
 public:
  VectorField();
  explicit VectorField(std::array<ComplexField, 3> comps) : comps_(std::move(comps)) {}
  explicit VectorField(const ExpPolyVec& p);

  VectorJet operator()(const Vec3& x) const;
  const ComplexField& operator[](int i) const { return comps_[i]; }

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const RealField& s, const VectorField& v);
  friend VectorField operator*(const ComplexField& s, const VectorField& v);

 private:
  std::array<ComplexField, 3> comps_;
};

/// Cross product of two vector fields as a field (jets by the product rule).
VectorField cross(const VectorField& a, const VectorField& b);

CVec3 curl(const VectorField& f, const Vec3& x);
cplx div(const VectorField& f, const Vec3& x);

// ---- Coefficient fields ----------------------------------------------------

/// One additive term of a coefficient field.
///   trig: amp * cos(k1 x1 + k2 x2 + 2 pi n3 x3 + phase)
///   poly: amp * x1^p1 x2^p2 * cos(2 pi n3 x3 + phase)
/// n3 is an integer, which makes every representable field 1-periodic in x3.
struct CoefficientTerm {
  enum class Kind { Trig, Poly };

  Kind kind = Kind::Trig;
  double k1 = 0.0;
  double k2 = 0.0;
  int n3 = 0;
  std::array<int, 2> powers{0, 0};
  double amp = 0.0;
  double phase = 0.0;

  static CoefficientTerm constant(double c) { return CoefficientTerm{Kind::Trig, 0.0, 0.0, 0, {0, 0}, c, 0.0}; }
  static CoefficientTerm trig(double amp, double k1, double k2, int n3, double phase = 0.0) {
    return CoefficientTerm{Kind::Trig, k1, k2, n3, {0, 0}, amp, phase};
  }
  static CoefficientTerm poly(double amp, int p1, int p2, int n3 = 0, double phase = 0.0) {
    return CoefficientTerm{Kind::Poly, 0.0, 0.0, n3, {p1, p2}, amp, phase};
  }
};

ExpPoly to_exp_poly(const std::vector<CoefficientTerm>& terms);

/// Extremes of a coefficient on a validation grid over U x [0,1).
struct BoundsReport {
  double min_value = 0.0;
  double max_value = 0.0;
  Vec3 argmin = Vec3::Zero();
  Vec3 argmax = Vec3::Zero();
};

/// Samples on an n^3 grid: rectangle (closed tensor grid), disk (polar grid
/// including the centre and the rim); x3 uniform on [0,1).
BoundsReport sample_bounds(const std::vector<CoefficientTerm>& terms, const CrossSection& cs, int n = 32);

/// Positive periodic scalar coefficient (epsilon or mu) with declared bounds.
class CoefficientField {
 public:
  /// Validates lower_bound > 0 and lower <= f <= upper on the 32^3 grid.
  static CoefficientField create(std::vector<CoefficientTerm> terms, double lower_bound, double upper_bound,
                                 const CrossSection& cs);
  static CoefficientField constant(double c, const CrossSection& cs);

  /// Exact jet; throws DomainError outside the closure of the cross-section.
  RealJet eval(const Vec3& x) const;

  double lower_bound() const { return lower_; }
  double upper_bound() const { return upper_; }
  const std::vector<CoefficientTerm>& terms() const { return terms_; }
  const CrossSection& cross_section() const { return cs_; }
  /// Unchecked field used when composing expressions.
  const RealField& field() const { return field_; }
  const ExpPoly& exp_poly() const { return poly_; }
  bool is_constant() const;

 private:
  CoefficientField(std::vector<CoefficientTerm> terms, double lower, double upper, const CrossSection& cs);

  std::vector<CoefficientTerm> terms_;
  double lower_;
  double upper_;
  CrossSection cs_;
  ExpPoly poly_;
  RealField field_;
};

RealJet eval_scalar(const CoefficientField& field, const Vec3& x);

}  // namespace maxcyl
