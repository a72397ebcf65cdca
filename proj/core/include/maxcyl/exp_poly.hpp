#pragma once

// Exponential polynomials: finite sums  c * x1^p1 x2^p2 x3^p3 * exp(i w.x).
// The class is closed under addition, multiplication and partial
// differentiation, so trig/polynomial closed forms and all of their
// derivatives are represented exactly.

#include <array>
#include <vector>

#include "maxcyl/jet.hpp"

namespace maxcyl {

class ExpPoly {
 public:
  struct Term {
    cplx coef;
    std::array<int, 3> powers{0, 0, 0};
    Vec3 freq = Vec3::Zero();
  };

  ExpPoly() = default;

  static ExpPoly constant(cplx c);
  /// c * x1^p1 x2^p2 x3^p3.
  static ExpPoly monomial(cplx c, std::array<int, 3> powers);
  /// c * exp(i (w.x + phase)).
  static ExpPoly plane_wave(cplx c, const Vec3& freq, double phase = 0.0);
  /// c * cos(w.x + phase), c * sin(w.x + phase).
  static ExpPoly cosine(double c, const Vec3& freq, double phase = 0.0);
  static ExpPoly sine(double c, const Vec3& freq, double phase = 0.0);
  static ExpPoly coordinate(int i) { return monomial(1.0, {i == 0, i == 1, i == 2}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExpPoly derivative(int i) const;
  ExpPoly conj() const;

  cplx value(const Vec3& x) const;
  ComplexJet jet(const Vec3& x) const;
  /// Real part of jet(x); meaningful for conjugate-symmetric (real) sums.
  RealJet real_jet(const Vec3& x) const;

  /// True when every term has x3-power 0 and an x3 frequency in 2*pi*Z.
  bool periodic_in_x3(double tol = 1e-12) const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(cplx s);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator-(ExpPoly a) { return a *= -1.0; }
  friend ExpPoly operator*(ExpPoly a, cplx s) { return a *= s; }
  friend ExpPoly operator*(cplx s, ExpPoly a) { return a *= s; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);

 private:
  explicit ExpPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void canonicalize();

  std::vector<Term> terms_;
};

/// Vector of three exponential polynomials with symbolic curl/div/gradient.
using ExpPolyVec = std::array<ExpPoly, 3>;

ExpPolyVec curl(const ExpPolyVec& a);
ExpPoly div(const ExpPolyVec& a);
ExpPolyVec gradient(const ExpPoly& f);
ExpPolyVec operator*(const ExpPoly& f, const ExpPolyVec& a);
ExpPolyVec operator+(const ExpPolyVec& a, const ExpPolyVec& b);

}  // namespace maxcyl
