#include "maxcyl/fields.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace maxcyl {

RealField real_field(const ExpPoly& p) {
  return RealField([p](const Vec3& x) { return p.real_jet(x); });
}

ComplexField complex_field(const ExpPoly& p) {
  return ComplexField([p](const Vec3& x) { return p.jet(x); });
}

ComplexField to_complex(const RealField& f) {
  return ComplexField([f](const Vec3& x) { return promote(f(x)); });
}

ComplexField operator*(const RealField& a, const ComplexField& b) {
  return ComplexField([a, b](const Vec3& x) { return a(x) * b(x); });
}

CMat3 VectorJet::jacobian() const {
  CMat3 J;
  for (int i = 0; i < 3; ++i) J.row(i) = comp[i].grad.transpose();
  return J;
}

CVec3 VectorJet::curl() const {
  return CVec3(comp[2].grad[1] - comp[1].grad[2], comp[0].grad[2] - comp[2].grad[0],
               comp[1].grad[0] - comp[0].grad[1]);
}

cplx VectorJet::div() const { return comp[0].grad[0] + comp[1].grad[1] + comp[2].grad[2]; }

VectorField::VectorField()
    : comps_{ComplexField::constant(0.0), ComplexField::constant(0.0), ComplexField::constant(0.0)} {}

VectorField::VectorField(const ExpPolyVec& p)
    : comps_{complex_field(p[0]), complex_field(p[1]), complex_field(p[2])} {}

VectorJet VectorField::operator()(const Vec3& x) const { return VectorJet{{comps_[0](x), comps_[1](x), comps_[2](x)}}; }

VectorField operator+(const VectorField& a, const VectorField& b) {
  return VectorField({a.comps_[0] + b.comps_[0], a.comps_[1] + b.comps_[1], a.comps_[2] + b.comps_[2]});
}

VectorField operator*(const RealField& s, const VectorField& v) {
  return VectorField({s * v.comps_[0], s * v.comps_[1], s * v.comps_[2]});
}

VectorField operator*(const ComplexField& s, const VectorField& v) {
  return VectorField({s * v.comps_[0], s * v.comps_[1], s * v.comps_[2]});
}

VectorField cross(const VectorField& a, const VectorField& b) {
  return VectorField({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

CVec3 curl(const VectorField& f, const Vec3& x) { return f(x).curl(); }

cplx div(const VectorField& f, const Vec3& x) { return f(x).div(); }

// ---- Coefficient fields ----------------------------------------------------

ExpPoly to_exp_poly(const std::vector<CoefficientTerm>& terms) {
  ExpPoly sum;
  for (const CoefficientTerm& t : terms) {
    if (t.kind == CoefficientTerm::Kind::Trig) {
      sum += ExpPoly::cosine(t.amp, Vec3(t.k1, t.k2, kTwoPi * t.n3), t.phase);
    } else {
      if (t.powers[0] < 0 || t.powers[1] < 0) throw CoefficientError("polynomial powers must be nonnegative");
      sum += ExpPoly::monomial(1.0, {t.powers[0], t.powers[1], 0}) *
             ExpPoly::cosine(t.amp, Vec3(0.0, 0.0, kTwoPi * t.n3), t.phase);
    }
  }
  return sum;
}

namespace {

std::vector<Vec3> validation_grid(const CrossSection& cs, int n) {
  std::vector<Vec3> pts;
  pts.reserve(std::size_t(n) * n * n);
  for (int k = 0; k < n; ++k) {
    const double x3 = double(k) / n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (cs.is_rectangle()) {
          pts.emplace_back(cs.a() * i / (n - 1), cs.b() * j / (n - 1), x3);
        } else {
          const double r = cs.radius() * i / (n - 1);
          const double t = kTwoPi * j / n;
          pts.emplace_back(r * std::cos(t), r * std::sin(t), x3);
        }
      }
    }
  }
  return pts;
}

std::string format_point(const Vec3& x) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << x[0] << ", " << x[1] << ", " << x[2] << ")";
  return os.str();
}

}  // namespace

BoundsReport sample_bounds(const std::vector<CoefficientTerm>& terms, const CrossSection& cs, int n) {
  if (n < 2) throw DomainError("validation grid needs at least 2 points per direction");
  const ExpPoly poly = to_exp_poly(terms);
  BoundsReport rep;
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.max_value = -std::numeric_limits<double>::infinity();
  for (const Vec3& x : validation_grid(cs, n)) {
    const double v = poly.value(x).real();
    if (v < rep.min_value) {
      rep.min_value = v;
      rep.argmin = x;
    }
    if (v > rep.max_value) {
      rep.max_value = v;
      rep.argmax = x;
    }
  }
  return rep;
}

CoefficientField::CoefficientField(std::vector<CoefficientTerm> terms, double lower, double upper,
                                   const CrossSection& cs)
    : terms_(std::move(terms)), lower_(lower), upper_(upper), cs_(cs), poly_(to_exp_poly(terms_)),
      field_(real_field(poly_)) {}

CoefficientField CoefficientField::create(std::vector<CoefficientTerm> terms, double lower_bound,
                                          double upper_bound, const CrossSection& cs) {
  if (!(lower_bound > 0.0)) throw CoefficientError("coefficient lower bound must be positive");
  if (!(upper_bound >= lower_bound)) throw CoefficientError("coefficient upper bound is below the lower bound");
  const BoundsReport rep = sample_bounds(terms, cs);
  if (rep.min_value < lower_bound) {
    std::ostringstream os;
    os << "coefficient minimum " << rep.min_value << " at " << format_point(rep.argmin) << " is below lower bound "
       << lower_bound;
    throw CoefficientError(os.str());
  }
  if (rep.max_value > upper_bound) {
    std::ostringstream os;
    os << "coefficient maximum " << rep.max_value << " at " << format_point(rep.argmax) << " exceeds upper bound "
       << upper_bound;
    throw CoefficientError(os.str());
  }
  return CoefficientField(std::move(terms), lower_bound, upper_bound, cs);
}

CoefficientField CoefficientField::constant(double c, const CrossSection& cs) {
  return create({CoefficientTerm::constant(c)}, c, c, cs);
}

RealJet CoefficientField::eval(const Vec3& x) const {
  if (!cs_.contains(x)) throw DomainError("point " + format_point(x) + " lies outside " + cs_.describe());
  return poly_.real_jet(x);
}

bool CoefficientField::is_constant() const {
  for (const auto& t : poly_.terms()) {
    if (t.powers != std::array<int, 3>{0, 0, 0} || !t.freq.isZero()) return false;
  }
  return true;
}

RealJet eval_scalar(const CoefficientField& field, const Vec3& x) { return field.eval(x); }

}  // namespace maxcyl
