#include "maxcyl/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace maxcyl {

IdentityReport IdentityReport::compare(std::string name, cplx lhs, cplx rhs, double tol) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs - rhs);
  r.scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  r.tol = tol;
  r.passed = r.residual <= tol * r.scale;
  return r;
}

cplx IdentityReport::term(const std::string& key) const {
  for (const auto& [k, v] : terms) {
    if (k == key) return v;
  }
  throw std::out_of_range("identity report " + name + " has no term " + key);
}

std::vector<Vec3> random_points(const CrossSection& cs, int count, Rng& rng) {
  std::vector<Vec3> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (cs.is_rectangle()) {
      const double x1 = cs.a() * rng.uniform();
      const double x2 = cs.b() * rng.uniform();
      pts.emplace_back(x1, x2, rng.uniform());
    } else {
      const double r = cs.radius() * std::sqrt(rng.uniform());
      const double t = kTwoPi * rng.uniform();
      pts.emplace_back(r * std::cos(t), r * std::sin(t), rng.uniform());
    }
  }
  return pts;
}

namespace {

VectorJet scaled(const RealJet& s, const VectorJet& v) {
  VectorJet r;
  for (int i = 0; i < 3; ++i) r.comp[i] = s * v.comp[i];
  return r;
}

/// sum_j <d_j a, d_j b>.
cplx gradient_inner(const CMat3& Ja, const CMat3& Jb) { return Ja.cwiseProduct(Jb.conjugate()).sum(); }

CVec3 rcross(const Vec3& a, const CVec3& b) { return cross(CVec3(a.cast<cplx>()), b); }

/// Tracks the point with the largest residual/scale ratio.
class WorstPoint {
 public:
  void add(double lhs_norm, double rhs_norm, double residual) {
    const double scale = std::max({lhs_norm, rhs_norm, 1.0});
    if (residual / scale > ratio_) {
      ratio_ = residual / scale;
      lhs_ = lhs_norm;
      rhs_ = rhs_norm;
      residual_ = residual;
      scale_ = scale;
    }
  }
  void add(const CVec3& lhs, const CVec3& rhs) { add(lhs.norm(), rhs.norm(), (lhs - rhs).norm()); }
  void add(cplx lhs, cplx rhs) { add(std::abs(lhs), std::abs(rhs), std::abs(lhs - rhs)); }

  IdentityReport report(std::string name, double tol) const {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = lhs_;
    r.rhs = rhs_;
    r.residual = residual_;
    r.scale = scale_;
    r.tol = tol;
    r.passed = residual_ <= tol * scale_;
    return r;
  }

 private:
  double ratio_ = -1.0;
  double lhs_ = 0.0, rhs_ = 0.0, residual_ = 0.0, scale_ = 1.0;
};

double trace_violation(const VectorJet& a, TraceCase trace, const BoundaryPoint& bp) {
  const CVec3 v = a.value();
  const CVec3 n = bp.normal.cast<cplx>();
  const double res = trace == TraceCase::NormalZero ? std::abs(n.dot(v)) : (v - n * n.dot(v)).norm();
  return res / std::max(1.0, v.norm());
}

void require_trace(const VectorField& a, TraceCase trace, const std::vector<BoundaryPoint>& pts, const char* which,
                   double tol = 1e-12) {
  for (const auto& bp : pts) {
    const double res = trace_violation(a(bp.position), trace, bp);
    if (res > tol) {
      std::ostringstream os;
      os << "field " << which << " violates the "
         << (trace == TraceCase::NormalZero ? "normal-trace" : "tangential-trace") << " condition: relative residual "
         << res << " at (" << bp.position[0] << ", " << bp.position[1] << ", " << bp.position[2] << ")";
      throw ConstraintError(os.str());
    }
  }
}

/// max over nodes of |div(c a)| / max(1, |c| |grad a| + |grad c| |a|).
double weighted_divergence(const VectorField& a, const RealField& c, const QuadratureRule& rule) {
  double worst = 0.0;
  for (const Vec3& x : rule.nodes) {
    const VectorJet aj = a(x);
    const RealJet cj = c(x);
    const cplx d = cj.value * aj.div() + (cj.grad.cast<cplx>().transpose() * aj.value())(0);
    const double scale = std::max(1.0, std::abs(cj.value) * aj.jacobian().norm() + cj.grad.norm() * aj.value().norm());
    worst = std::max(worst, std::abs(d) / scale);
  }
  return worst;
}

void require_divergence_free(double residual, const char* what) {
  if (residual > 1e-10) {
    std::ostringstream os;
    os << what << " is not divergence free: relative residual " << residual;
    throw ConstraintError(os.str());
  }
}

template <class Fn>
cplx integrate(const QuadratureRule& rule, Fn&& fn) {
  cplx sum = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) sum += rule.weights[q] * fn(q);
  return sum;
}

}  // namespace

// ---- Pointwise -------------------------------------------------------------

IdentityReport check_product_curl(const ComplexField& phi, const VectorField& a, const std::vector<Vec3>& points,
                                  double tol) {
  WorstPoint worst;
  for (const Vec3& x : points) {
    const ComplexJet p = phi(x);
    const VectorJet aj = a(x);
    VectorJet prod;
    for (int i = 0; i < 3; ++i) prod.comp[i] = p * aj.comp[i];
    const CVec3 lhs = prod.curl();
    const CVec3 rhs = p.value * aj.curl() + cross(p.grad, aj.value());
    worst.add(lhs, rhs);
  }
  return worst.report("product_curl", tol);
}

IdentityReport check_curl_of_cross(const VectorField& a, const VectorField& b, const std::vector<Vec3>& points,
                                   double tol) {
  const VectorField ab = cross(a, b);
  WorstPoint worst;
  for (const Vec3& x : points) {
    const VectorJet aj = a(x);
    const VectorJet bj = b(x);
    const CVec3 av = aj.value();
    const CVec3 bv = bj.value();
    const CVec3 lhs = ab(x).curl();
    const CVec3 rhs = av * bj.div() - bv * aj.div() - bj.jacobian() * av + aj.jacobian() * bv;
    worst.add(lhs, rhs);
  }
  return worst.report("curl_of_cross", tol);
}

IdentityReport check_w0_identity(const VectorField& v, const CoefficientField& mu, const std::vector<Vec3>& points,
                                 double tol) {
  WorstPoint worst;
  for (const Vec3& x : points) {
    const RealJet m = mu.eval(x);
    const Jet1<double> inv = reciprocal(m).truncate();
    // g_j = mu^-1 d_j mu as first-order jets; G(j, k) = d_k g_j.
    Vec3 g;
    Mat3 G;
    for (int j = 0; j < 3; ++j) {
      const Jet1<double> gj = inv * m.partial(j);
      g[j] = gj.value;
      G.row(j) = gj.grad.transpose();
    }
    const double div_g = G.trace();
    const CVec3 vv = v(x).value();
    const CVec3 lhs = (div_g + g.squaredNorm()) * vv - G.cast<cplx>() * vv;
    const CVec3 rhs = w0_matrix(m).cast<cplx>() * vv;
    worst.add(lhs, rhs);
  }
  return worst.report("w0_identity", tol);
}

IdentityReport check_curvature_identity(const VectorField& a, const VectorField& b, const CrossSection& cs,
                                        TraceCase trace, const std::vector<BoundaryPoint>& points, double tol) {
  (void)cs;
  require_trace(a, trace, points, "a");
  require_trace(b, trace, points, "b");
  const Mat3 P = projector_e3_perp();
  WorstPoint worst;
  for (const auto& bp : points) {
    const VectorJet aj = a(bp.position);
    const VectorJet bj = b(bp.position);
    const CVec3 av = aj.value();
    const CVec3 n = bp.normal.cast<cplx>();
    const cplx I = (n.transpose() * av)(0) * std::conj(bj.div()) - (n.transpose() * (bj.jacobian().conjugate() * av))(0);
    const cplx rhs = bp.curvature * inner(P.cast<cplx>() * av, bj.value());
    worst.add(I, rhs);
  }
  return worst.report(trace == TraceCase::NormalZero ? "curvature_normal_zero" : "curvature_tangential_zero", tol);
}

IdentityReport check_zeroth_order_algebra(const std::vector<ZerothOrderSample>& samples, double tol) {
  WorstPoint worst;
  for (const auto& s : samples) {
    const double e = s.eps.value;
    const double m = s.mu.value;
    const double lam = s.lambda;
    const Vec3 g = reciprocal(s.eps * s.mu).grad;
    const cplx i(0.0, 1.0);
    const CVec3 curl_u = i * lam * m * s.v;
    const CVec3 curl_v = -i * lam * e * s.u;
    const cplx lhs = -inner(curl_u, e * rcross(g, s.w)) - inner(curl_v, m * rcross(g, s.f)) +
                     inner(w_matrix(s.eps).cast<cplx>() * s.u, s.w) / m +
                     inner(w_matrix(s.mu).cast<cplx>() * s.v, s.f) / e;
    CVec6 phi, psi;
    phi << std::sqrt(e) * s.u, std::sqrt(m) * s.v;
    psi << s.w / (std::sqrt(e) * m), s.f / (e * std::sqrt(m));
    const cplx rhs = inner(CVec6(v_matrix(s.eps, s.mu, lam) * phi), psi) +
                     lam * lam * (e * inner(s.u, s.w) + m * inner(s.v, s.f));
    worst.add(lhs, rhs);
  }
  return worst.report("zeroth_order_algebra", tol);
}

std::vector<ZerothOrderSample> random_zeroth_order_samples(const Medium& medium, double lambda, int count, Rng& rng) {
  std::vector<ZerothOrderSample> out;
  out.reserve(count);
  for (const Vec3& x : random_points(medium.eps.cross_section(), count, rng)) {
    ZerothOrderSample s;
    s.u = rng.complex_vector();
    s.v = rng.complex_vector();
    s.w = rng.complex_vector();
    s.f = rng.complex_vector();
    s.eps = medium.eps.eval(x);
    s.mu = medium.mu.eval(x);
    s.lambda = lambda;
    out.push_back(s);
  }
  return out;
}

// ---- Integral --------------------------------------------------------------

IdentityReport check_curl_ibp(const VectorField& c, const VectorField& d, const QuadraturePair& quad, double tol) {
  const auto& cell = quad.cell;
  const auto& bdry = quad.boundary;
  cplx lhs = 0.0, volume = 0.0;
  for (std::size_t q = 0; q < cell.size(); ++q) {
    const VectorJet cj = c(cell.nodes[q]);
    const VectorJet dj = d(cell.nodes[q]);
    lhs += cell.weights[q] * inner(cj.curl(), dj.value());
    volume += cell.weights[q] * inner(cj.value(), dj.curl());
  }
  const cplx boundary = integrate(bdry, [&](std::size_t q) {
    const auto& bp = bdry.frames[q];
    return inner(c(bp.position).value(), rcross(-bp.normal, d(bp.position).value()));
  });
  auto r = IdentityReport::compare("curl_ibp", lhs, volume + boundary, tol);
  r.terms = {{"volume", volume}, {"boundary", boundary}};
  return r;
}

IdentityReport check_curlcurl_decomposition(const VectorField& a, const VectorField& b, const CrossSection& cs,
                                            TraceCase trace, const QuadraturePair& quad, double tol) {
  (void)cs;
  require_trace(a, trace, quad.boundary.frames, "a");
  require_trace(b, trace, quad.boundary.frames, "b");
  const auto& cell = quad.cell;
  cplx lhs = 0.0, grad_term = 0.0, div_term = 0.0;
  for (std::size_t q = 0; q < cell.size(); ++q) {
    const VectorJet aj = a(cell.nodes[q]);
    const VectorJet bj = b(cell.nodes[q]);
    lhs += cell.weights[q] * inner(aj.curl(), bj.curl());
    grad_term += cell.weights[q] * gradient_inner(aj.jacobian(), bj.jacobian());
    div_term += cell.weights[q] * aj.div() * std::conj(bj.div());
  }
  const Mat3 P = projector_e3_perp();
  const cplx boundary = integrate(quad.boundary, [&](std::size_t q) {
    const auto& bp = quad.boundary.frames[q];
    return bp.curvature * inner(P.cast<cplx>() * a(bp.position).value(), b(bp.position).value());
  });
  auto r = IdentityReport::compare(
      trace == TraceCase::NormalZero ? "curlcurl_normal_zero" : "curlcurl_tangential_zero", lhs,
      grad_term - div_term + boundary, tol);
  r.terms = {{"gradient", grad_term}, {"divergence", -div_term}, {"boundary", boundary}};
  return r;
}

IdentityReport check_weighted_ibp(const VectorField& a, const VectorField& b, const CoefficientField& mu,
                                  const QuadraturePair& quad, double tol) {
  const auto& cell = quad.cell;
  cplx lhs = 0.0, half = 0.0, drift = 0.0, potential = 0.0;
  for (std::size_t q = 0; q < cell.size(); ++q) {
    const Vec3& x = cell.nodes[q];
    const double wq = cell.weights[q];
    const RealJet m = mu.field()(x);
    const VectorJet aj = a(x);
    const VectorJet bj = b(x);
    const CVec3 av = aj.value();
    const CVec3 bv = bj.value();
    lhs += wq * gradient_inner(scaled(m, aj).jacobian(), scaled(reciprocal(m), bj).jacobian());
    half += wq * gradient_inner(scaled(pow(m, 0.5), aj).jacobian(), scaled(pow(m, -0.5), bj).jacobian());
    drift -= wq * inner(CVec3(aj.jacobian() * m.grad.cast<cplx>()), bv) / m.value;
    const double c = m.grad.squaredNorm() / (4.0 * m.value * m.value) + m.laplacian() / (2.0 * m.value);
    potential -= wq * c * inner(av, bv);
  }
  const cplx boundary = integrate(quad.boundary, [&](std::size_t q) {
    const auto& bp = quad.boundary.frames[q];
    const RealJet m = mu.field()(bp.position);
    return bp.normal.dot(m.grad) / (2.0 * m.value) * inner(a(bp.position).value(), b(bp.position).value());
  });
  auto r = IdentityReport::compare("weighted_ibp", lhs, half + drift + potential + boundary, tol);
  r.terms = {{"half_weights", half}, {"drift", drift}, {"potential", potential}, {"boundary", boundary}};
  return r;
}

IdentityReport check_curlcurl_ibp(const VectorField& v, const VectorField& f, const Medium& medium,
                               const QuadraturePair& quad, double tol) {
  const RealField& eps = medium.eps.field();
  const RealField& mu = medium.mu.field();
  const double div_res = weighted_divergence(v, mu, quad.cell);
  require_divergence_free(div_res, "mu v");
  const auto& cell = quad.cell;
  cplx lhs = 0.0, t_curl = 0.0, t_cross = 0.0, t_w0 = 0.0, t_drift = 0.0;
  for (std::size_t q = 0; q < cell.size(); ++q) {
    const Vec3& x = cell.nodes[q];
    const double wq = cell.weights[q];
    const RealJet e = eps(x);
    const RealJet m = mu(x);
    const RealJet inv_em = reciprocal(e * m);
    const VectorJet vj = v(x);
    const VectorJet fj = f(x);
    const CVec3 vv = vj.value();
    const CVec3 fv = fj.value();
    const CVec3 curl_v = vj.curl();
    lhs += wq * inner(curl_v, fj.curl()) / e.value;
    t_curl += wq * inner(scaled(m, vj).curl(), scaled(inv_em, fj).curl());
    t_cross -= wq * inner(curl_v, m.value * rcross(inv_em.grad, fv));
    t_w0 += wq * inner(CVec3(w0_matrix(m).cast<cplx>() * vv), fv) / e.value;
    t_drift += wq * inv_em.value * inner(CVec3(vj.jacobian() * m.grad.cast<cplx>()), fv);
  }
  const cplx boundary = integrate(quad.boundary, [&](std::size_t q) {
    const auto& bp = quad.boundary.frames[q];
    const Vec3& x = bp.position;
    const RealJet e = eps(x);
    const RealJet m = mu(x);
    return inner(rcross(m.grad, v(x).value()), rcross(-bp.normal, f(x).value())) / (e.value * m.value);
  });
  auto r = IdentityReport::compare("curlcurl_ibp", lhs, t_curl + t_cross + t_w0 + t_drift + boundary, tol);
  r.constraint_residual = div_res;
  r.terms = {{"curl_weighted", t_curl}, {"cross", t_cross}, {"w0", t_w0}, {"drift", t_drift}, {"boundary", boundary}};
  return r;
}

namespace {

/// Terms of the reduced form for the pair (p, q), where c_div is the
/// coefficient in the divergence constraint div(c_div p) = 0 and c_other the
/// remaining one. normal_case selects the (v, f) form; otherwise the (u, w) form.
struct ReducedTerms {
  cplx lhs = 0.0;
  cplx laplace = 0.0;
  cplx cross = 0.0;
  cplx potential = 0.0;
  cplx boundary = 0.0;

  cplx rhs() const { return laplace + cross + potential + boundary; }
};

using CurlOverride = std::function<CVec3(const Vec3&)>;

ReducedTerms reduced_terms(const VectorField& p, const VectorField& q, const RealField& c_div,
                           const RealField& c_other, bool normal_case, const QuadraturePair& quad,
                           const CurlOverride& curl_p = nullptr) {
  ReducedTerms t;
  const auto& cell = quad.cell;
  for (std::size_t n = 0; n < cell.size(); ++n) {
    const Vec3& x = cell.nodes[n];
    const double wq = cell.weights[n];
    const RealJet d = c_div(x);
    const RealJet o = c_other(x);
    const VectorJet pj = p(x);
    const VectorJet qj = q(x);
    const CVec3 curl = pj.curl();
    const CVec3 curl_used = curl_p ? curl_p(x) : curl;
    if (!curl_p) t.lhs += wq * inner(curl, qj.curl()) / o.value;
    const RealJet q_weight = reciprocal(o * pow(d, 0.5));
    t.laplace += wq * gradient_inner(scaled(pow(d, 0.5), pj).jacobian(), scaled(q_weight, qj).jacobian());
    const Vec3 g = reciprocal(d * o).grad;
    t.cross -= wq * inner(curl_used, d.value * rcross(g, qj.value()));
    t.potential += wq * inner(CVec3(w_matrix(d).cast<cplx>() * pj.value()), qj.value()) / o.value;
  }
  const Mat3 P = projector_e3_perp();
  t.boundary = integrate(quad.boundary, [&](std::size_t n) {
    const auto& bp = quad.boundary.frames[n];
    const Vec3& x = bp.position;
    const RealJet d = c_div(x);
    const RealJet o = c_other(x);
    const double dn = bp.normal.dot(d.grad) / (2.0 * d.value * o.value);
    const CVec3 pv = p(x).value();
    const CVec3 qv = q(x).value();
    if (normal_case) {
      return inner(CVec3((bp.curvature / o.value) * P.cast<cplx>() * pv - dn * pv), qv);
    }
    return (bp.curvature / o.value + dn) * inner(pv, qv);
  });
  return t;
}

IdentityReport reduced_report(const std::string& name, const ReducedTerms& t, double tol, double constraint) {
  auto r = IdentityReport::compare(name, t.lhs, t.rhs(), tol);
  r.constraint_residual = constraint;
  r.terms = {{"laplace", t.laplace}, {"cross", t.cross}, {"potential", t.potential}, {"boundary", t.boundary}};
  return r;
}

}  // namespace

IdentityReport check_reduced_normal(const VectorField& v, const VectorField& f, const Medium& medium,
                             const QuadraturePair& quad, double tol) {
  const double div_res = weighted_divergence(v, medium.mu.field(), quad.cell);
  require_divergence_free(div_res, "mu v");
  require_trace(v, TraceCase::NormalZero, quad.boundary.frames, "v");
  require_trace(f, TraceCase::NormalZero, quad.boundary.frames, "f");
  const auto t = reduced_terms(v, f, medium.mu.field(), medium.eps.field(), true, quad);
  return reduced_report("reduced_normal", t, tol, div_res);
}

IdentityReport check_reduced_tangential(const VectorField& u, const VectorField& w, const Medium& medium,
                             const QuadraturePair& quad, double tol) {
  const double div_res = weighted_divergence(u, medium.eps.field(), quad.cell);
  require_divergence_free(div_res, "eps u");
  require_trace(u, TraceCase::TangentialZero, quad.boundary.frames, "u");
  require_trace(w, TraceCase::TangentialZero, quad.boundary.frames, "w");
  const auto t = reduced_terms(u, w, medium.eps.field(), medium.mu.field(), false, quad);
  return reduced_report("reduced_tangential", t, tol, div_res);
}

cplx schrodinger_form(const SixVectorField& phi, const SixVectorField& psi, const PotentialSampler& V,
                      const BoundarySampler& sigma, const QuadraturePair& quad) {
  require_hhat1(phi, quad.boundary.frames);
  require_hhat1(psi, quad.boundary.frames);
  const cplx volume = integrate(quad.cell, [&](std::size_t q) {
    const Vec3& x = quad.cell.nodes[q];
    const CVec6 pv = phi.value(x);
    return phi.gradient(x).cwiseProduct(psi.gradient(x).conjugate()).sum() + inner(CVec6(V(x) * pv), psi.value(x));
  });
  const cplx boundary = integrate(quad.boundary, [&](std::size_t q) {
    const auto& bp = quad.boundary.frames[q];
    return inner(CVec6(sigma(bp).cast<cplx>() * phi.value(bp.position)), psi.value(bp.position));
  });
  return volume + boundary;
}

IdentityReport check_end_to_end(const VectorField& u, const VectorField& v, const VectorField& w,
                                const VectorField& f, const Medium& medium, double lambda,
                                const QuadraturePair& quad, double tol) {
  const RealField& eps = medium.eps.field();
  const RealField& mu = medium.mu.field();
  const cplx i(0.0, 1.0);
  const CurlOverride curl_v = [&](const Vec3& x) -> CVec3 { return -i * lambda * eps(x).value * u(x).value(); };
  const CurlOverride curl_u = [&](const Vec3& x) -> CVec3 { return i * lambda * mu(x).value * v(x).value(); };
  const auto t32 = reduced_terms(v, f, mu, eps, true, quad, curl_v);
  const auto t33 = reduced_terms(u, w, eps, mu, false, quad, curl_u);
  const cplx lhs = t32.rhs() + t33.rhs();

  const PhiPsi maps = phi_psi_maps(u, v, w, f, medium.eps, medium.mu);
  const cplx form = schrodinger_form(
      maps.phi, maps.psi, [&](const Vec3& x) { return medium.v(x, lambda); },
      [&](const BoundaryPoint& bp) { return medium.sigma(bp); }, quad);
  const cplx mass = integrate(quad.cell, [&](std::size_t q) {
    const Vec3& x = quad.cell.nodes[q];
    return eps(x).value * inner(u(x).value(), w(x).value()) + mu(x).value * inner(v(x).value(), f(x).value());
  });
  auto r = IdentityReport::compare("end_to_end", lhs, form + lambda * lambda * mass, tol);
  r.terms = {{"schrodinger_form", form},
             {"mass", lambda * lambda * mass},
             {"boundary", t32.boundary + t33.boundary}};
  return r;
}

}  // namespace maxcyl
