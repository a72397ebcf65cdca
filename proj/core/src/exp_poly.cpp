#include "maxcyl/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace maxcyl {

namespace {

bool key_less(const ExpPoly::Term& a, const ExpPoly::Term& b) {
  return std::tie(a.powers[0], a.powers[1], a.powers[2], a.freq[0], a.freq[1], a.freq[2]) <
         std::tie(b.powers[0], b.powers[1], b.powers[2], b.freq[0], b.freq[1], b.freq[2]);
}

bool key_equal(const ExpPoly::Term& a, const ExpPoly::Term& b) {
  return a.powers == b.powers && a.freq == b.freq;
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

ExpPoly ExpPoly::constant(cplx c) { return monomial(c, {0, 0, 0}); }

ExpPoly ExpPoly::monomial(cplx c, std::array<int, 3> powers) {
  for (int p : powers) {
    if (p < 0) throw DomainError("monomial powers must be nonnegative");
  }
  if (c == cplx(0.0)) return ExpPoly();
  return ExpPoly(std::vector<Term>{Term{c, powers, Vec3::Zero()}});
}

ExpPoly ExpPoly::plane_wave(cplx c, const Vec3& freq, double phase) {
  if (c == cplx(0.0)) return ExpPoly();
  return ExpPoly(std::vector<Term>{Term{c * std::polar(1.0, phase), {0, 0, 0}, freq}});
}

ExpPoly ExpPoly::cosine(double c, const Vec3& freq, double phase) {
  ExpPoly r = plane_wave(0.5 * c, freq, phase) + plane_wave(0.5 * c, -freq, -phase);
  return r;
}

ExpPoly ExpPoly::sine(double c, const Vec3& freq, double phase) {
  // sin t = (e^{it} - e^{-it}) / (2i)
  return plane_wave(cplx(0.0, -0.5 * c), freq, phase) + plane_wave(cplx(0.0, 0.5 * c), -freq, -phase);
}

void ExpPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), key_less);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!merged.empty() && key_equal(merged.back(), t)) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == cplx(0.0); });
  terms_ = std::move(merged);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (Term t : o.terms_) {
    t.coef = -t.coef;
    terms_.push_back(t);
  }
  canonicalize();
  return *this;
}

ExpPoly& ExpPoly::operator*=(cplx s) {
  for (Term& t : terms_) t.coef *= s;
  canonicalize();
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      ExpPoly::Term p;
      p.coef = s.coef * t.coef;
      for (int d = 0; d < 3; ++d) p.powers[d] = s.powers[d] + t.powers[d];
      p.freq = s.freq + t.freq;
      out.push_back(p);
    }
  }
  ExpPoly r(std::move(out));
  r.canonicalize();
  return r;
}

ExpPoly ExpPoly::derivative(int i) const {
  std::vector<Term> out;
  out.reserve(2 * terms_.size());
  for (const Term& t : terms_) {
    if (t.powers[i] > 0) {
      Term d = t;
      d.coef *= double(t.powers[i]);
      d.powers[i] -= 1;
      out.push_back(d);
    }
    if (t.freq[i] != 0.0) {
      Term d = t;
      d.coef *= cplx(0.0, t.freq[i]);
      out.push_back(d);
    }
  }
  ExpPoly r(std::move(out));
  r.canonicalize();
  return r;
}

ExpPoly ExpPoly::conj() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    t.coef = std::conj(t.coef);
    t.freq = -t.freq;
  }
  ExpPoly r(std::move(out));
  r.canonicalize();
  return r;
}

cplx ExpPoly::value(const Vec3& x) const {
  cplx sum = 0.0;
  for (const Term& t : terms_) {
    const double mono = ipow(x[0], t.powers[0]) * ipow(x[1], t.powers[1]) * ipow(x[2], t.powers[2]);
    sum += t.coef * mono * std::polar(1.0, t.freq.dot(x));
  }
  return sum;
}

ComplexJet ExpPoly::jet(const Vec3& x) const {
  ComplexJet out = ComplexJet::constant(0.0);
  for (const Term& t : terms_) {
    // Monomial factor m(x) = prod_d x_d^{p_d} with exact first and second derivatives.
    double m0[3], m1[3], m2[3];
    for (int d = 0; d < 3; ++d) {
      const int p = t.powers[d];
      m0[d] = ipow(x[d], p);
      m1[d] = p >= 1 ? p * ipow(x[d], p - 1) : 0.0;
      m2[d] = p >= 2 ? p * (p - 1) * ipow(x[d], p - 2) : 0.0;
    }
    const double M = m0[0] * m0[1] * m0[2];
    Vec3 gM(m1[0] * m0[1] * m0[2], m0[0] * m1[1] * m0[2], m0[0] * m0[1] * m1[2]);
    Mat3 hM;
    hM(0, 0) = m2[0] * m0[1] * m0[2];
    hM(1, 1) = m0[0] * m2[1] * m0[2];
    hM(2, 2) = m0[0] * m0[1] * m2[2];
    hM(0, 1) = hM(1, 0) = m1[0] * m1[1] * m0[2];
    hM(0, 2) = hM(2, 0) = m1[0] * m0[1] * m1[2];
    hM(1, 2) = hM(2, 1) = m0[0] * m1[1] * m1[2];

    const cplx E = t.coef * std::polar(1.0, t.freq.dot(x));
    const CVec3 iw = cplx(0.0, 1.0) * t.freq.cast<cplx>();
    const CVec3 gMc = gM.cast<cplx>();

    out.value += M * E;
    out.grad += (gMc + M * iw) * E;
    out.hess += (hM.cast<cplx>() + gMc * iw.transpose() + iw * gMc.transpose() + M * (iw * iw.transpose())) * E;
  }
  return out;
}

RealJet ExpPoly::real_jet(const Vec3& x) const {
  const ComplexJet j = jet(x);
  return RealJet{j.value.real(), j.grad.real(), j.hess.real()};
}

bool ExpPoly::periodic_in_x3(double tol) const {
  for (const Term& t : terms_) {
    if (t.powers[2] != 0) return false;
    const double n = t.freq[2] / kTwoPi;
    if (std::abs(n - std::round(n)) > tol) return false;
  }
  return true;
}

ExpPolyVec curl(const ExpPolyVec& a) {
  return {a[2].derivative(1) - a[1].derivative(2), a[0].derivative(2) - a[2].derivative(0),
          a[1].derivative(0) - a[0].derivative(1)};
}

ExpPoly div(const ExpPolyVec& a) { return a[0].derivative(0) + a[1].derivative(1) + a[2].derivative(2); }

ExpPolyVec gradient(const ExpPoly& f) { return {f.derivative(0), f.derivative(1), f.derivative(2)}; }

ExpPolyVec operator*(const ExpPoly& f, const ExpPolyVec& a) { return {f * a[0], f * a[1], f * a[2]}; }

ExpPolyVec operator+(const ExpPolyVec& a, const ExpPolyVec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

}  // namespace maxcyl
