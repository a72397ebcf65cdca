#pragma once

// Second-order forward jets in three variables: value, gradient and Hessian
// propagated through arithmetic by the exact Leibniz and chain rules.

#include <cmath>
#include <complex>

#include "maxcyl/types.hpp"

namespace maxcyl {

template <class T>
struct Jet1 {
  using Vec = Eigen::Matrix<T, 3, 1>;

  T value{};
  Vec grad = Vec::Zero();

  static Jet1 constant(T c) { return Jet1{c, Vec::Zero()}; }
};

template <class T>
struct Jet2 {
  using Vec = Eigen::Matrix<T, 3, 1>;
  using Mat = Eigen::Matrix<T, 3, 3>;

  T value{};
  Vec grad = Vec::Zero();
  Mat hess = Mat::Zero();

  static Jet2 constant(T c) { return Jet2{c, Vec::Zero(), Mat::Zero()}; }

  /// Jet of the coordinate function x_i.
  static Jet2 coordinate(const Vec3& x, int i) {
    Jet2 j = constant(T(x[i]));
    j.grad[i] = T(1);
    return j;
  }

  T laplacian() const { return hess.trace(); }

  Jet1<T> truncate() const { return Jet1<T>{value, grad}; }

  /// First-order jet of the partial derivative d/dx_i of this function.
  Jet1<T> partial(int i) const { return Jet1<T>{grad[i], hess.row(i).transpose()}; }
};

using RealJet = Jet2<double>;
using ComplexJet = Jet2<cplx>;

inline ComplexJet promote(const RealJet& j) {
  return ComplexJet{cplx(j.value), j.grad.cast<cplx>(), j.hess.cast<cplx>()};
}
inline ComplexJet promote(const ComplexJet& j) { return j; }
inline Jet1<cplx> promote(const Jet1<double>& j) { return Jet1<cplx>{cplx(j.value), j.grad.cast<cplx>()}; }
inline Jet1<cplx> promote(const Jet1<cplx>& j) { return j; }

// ---- Jet2 arithmetic -------------------------------------------------------

template <class T>
Jet2<T> operator+(const Jet2<T>& a, const Jet2<T>& b) {
  return Jet2<T>{a.value + b.value, a.grad + b.grad, a.hess + b.hess};
}
template <class T>
Jet2<T> operator-(const Jet2<T>& a, const Jet2<T>& b) {
  return Jet2<T>{a.value - b.value, a.grad - b.grad, a.hess - b.hess};
}
template <class T>
Jet2<T> operator-(const Jet2<T>& a) {
  return Jet2<T>{-a.value, -a.grad, -a.hess};
}
template <class T>
Jet2<T> operator*(const Jet2<T>& a, T s) {
  return Jet2<T>{a.value * s, a.grad * s, a.hess * s};
}
template <class T>
Jet2<T> operator*(T s, const Jet2<T>& a) {
  return a * s;
}
template <class T>
Jet2<T> operator*(const Jet2<T>& a, const Jet2<T>& b) {
  Jet2<T> r;
  r.value = a.value * b.value;
  r.grad = a.grad * b.value + b.grad * a.value;
  r.hess = a.hess * b.value + b.hess * a.value + a.grad * b.grad.transpose() + b.grad * a.grad.transpose();
  return r;
}
inline ComplexJet operator*(const RealJet& a, const ComplexJet& b) { return promote(a) * b; }
inline ComplexJet operator*(const ComplexJet& a, const RealJet& b) { return a * promote(b); }

/// Composition phi(g) given phi, phi' and phi'' evaluated at g.value.
template <class T>
Jet2<T> compose(const Jet2<T>& g, T f0, T f1, T f2) {
  Jet2<T> r;
  r.value = f0;
  r.grad = g.grad * f1;
  r.hess = g.hess * f1 + (g.grad * g.grad.transpose()) * f2;
  return r;
}

template <class T>
Jet2<T> reciprocal(const Jet2<T>& g) {
  const T inv = T(1) / g.value;
  return compose(g, inv, -inv * inv, T(2) * inv * inv * inv);
}
template <class T>
Jet2<T> operator/(const Jet2<T>& a, const Jet2<T>& b) {
  return a * reciprocal(b);
}

/// g^p for real exponent p; g.value must be positive for real jets.
template <class T>
Jet2<T> pow(const Jet2<T>& g, double p) {
  using std::pow;
  const T v = g.value;
  const T f0 = pow(v, T(p));
  const T f1 = T(p) * pow(v, T(p - 1.0));
  const T f2 = T(p * (p - 1.0)) * pow(v, T(p - 2.0));
  return compose(g, f0, f1, f2);
}
template <class T>
Jet2<T> sqrt(const Jet2<T>& g) {
  using std::sqrt;
  const T s = sqrt(g.value);
  return compose(g, s, T(0.5) / s, T(-0.25) / (s * g.value));
}
template <class T>
Jet2<T> exp(const Jet2<T>& g) {
  using std::exp;
  const T e = exp(g.value);
  return compose(g, e, e, e);
}
template <class T>
Jet2<T> cos(const Jet2<T>& g) {
  using std::cos;
  using std::sin;
  const T c = cos(g.value);
  return compose(g, c, -sin(g.value), -c);
}
template <class T>
Jet2<T> sin(const Jet2<T>& g) {
  using std::cos;
  using std::sin;
  const T s = sin(g.value);
  return compose(g, s, cos(g.value), -s);
}

// ---- Jet1 arithmetic -------------------------------------------------------

template <class T>
Jet1<T> operator+(const Jet1<T>& a, const Jet1<T>& b) {
  return Jet1<T>{a.value + b.value, a.grad + b.grad};
}
template <class T>
Jet1<T> operator-(const Jet1<T>& a, const Jet1<T>& b) {
  return Jet1<T>{a.value - b.value, a.grad - b.grad};
}
template <class T>
Jet1<T> operator*(const Jet1<T>& a, const Jet1<T>& b) {
  return Jet1<T>{a.value * b.value, a.grad * b.value + b.grad * a.value};
}
template <class T>
Jet1<T> operator*(const Jet1<T>& a, T s) {
  return Jet1<T>{a.value * s, a.grad * s};
}
template <class T>
Jet1<T> reciprocal(const Jet1<T>& g) {
  const T inv = T(1) / g.value;
  return Jet1<T>{inv, -g.grad * (inv * inv)};
}

}  // namespace maxcyl
