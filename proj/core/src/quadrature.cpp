#include "maxcyl/quadrature.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace maxcyl {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be at least 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double QuadratureRule::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

namespace {

void check_order(const QuadratureOrder& order, bool disk) {
  if (order.planar < 2 || order.axial < 2 || (disk && order.angular < 2)) {
    throw DomainError("quadrature orders must be at least 2 in every direction");
  }
}

// Gauss rule mapped to (lo, hi).
GaussRule mapped(const GaussRule& ref, double lo, double hi) {
  GaussRule r = ref;
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    r.nodes[i] = lo + half * (ref.nodes[i] + 1.0);
    r.weights[i] = half * ref.weights[i];
  }
  return r;
}

}  // namespace

QuadratureRule cell_quadrature(const CrossSection& cs, const QuadratureOrder& order) {
  check_order(order, cs.is_disk());
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::Cell;
  const GaussRule ref = gauss_legendre(order.planar);
  const double wz = 1.0 / order.axial;

  if (cs.is_rectangle()) {
    const GaussRule g1 = mapped(ref, 0.0, cs.a());
    const GaussRule g2 = mapped(ref, 0.0, cs.b());
    rule.nodes.reserve(g1.nodes.size() * g2.nodes.size() * order.axial);
    for (int k = 0; k < order.axial; ++k) {
      const double x3 = k * wz;
      for (std::size_t i = 0; i < g1.nodes.size(); ++i) {
        for (std::size_t j = 0; j < g2.nodes.size(); ++j) {
          rule.nodes.emplace_back(g1.nodes[i], g2.nodes[j], x3);
          rule.weights.push_back(g1.weights[i] * g2.weights[j] * wz);
        }
      }
    }
    return rule;
  }

  const double R = cs.radius();
  const GaussRule gr = mapped(ref, 0.0, R);
  const double wt = kTwoPi / order.angular;
  for (int k = 0; k < order.axial; ++k) {
    const double x3 = k * wz;
    for (std::size_t i = 0; i < gr.nodes.size(); ++i) {
      const double r = gr.nodes[i];
      for (int j = 0; j < order.angular; ++j) {
        const double t = j * wt;
        rule.nodes.emplace_back(r * std::cos(t), r * std::sin(t), x3);
        rule.weights.push_back(gr.weights[i] * r * wt * wz);
      }
    }
  }
  return rule;
}

QuadratureRule boundary_quadrature(const CrossSection& cs, const QuadratureOrder& order) {
  check_order(order, cs.is_disk());
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::Boundary;
  const double wz = 1.0 / order.axial;

  auto push = [&rule](const BoundaryPoint& bp, double w) {
    rule.nodes.push_back(bp.position);
    rule.weights.push_back(w);
    rule.frames.push_back(bp);
  };

  if (cs.is_rectangle()) {
    const GaussRule ref = gauss_legendre(order.planar);
    const double a = cs.a();
    const double b = cs.b();
    // Face start offsets along the counter-clockwise arc-length parameter.
    const double starts[] = {0.0, a, a + b, 2.0 * a + b};
    const double lengths[] = {a, b, a, b};
    for (int k = 0; k < order.axial; ++k) {
      const double x3 = k * wz;
      for (int face = 0; face < 4; ++face) {
        const GaussRule g = mapped(ref, starts[face], starts[face] + lengths[face]);
        for (std::size_t i = 0; i < g.nodes.size(); ++i) push(boundary_frame(cs, g.nodes[i], x3), g.weights[i] * wz);
      }
    }
    return rule;
  }

  const double wt = kTwoPi / order.angular;
  const double R = cs.radius();
  for (int k = 0; k < order.axial; ++k) {
    const double x3 = k * wz;
    for (int j = 0; j < order.angular; ++j) push(boundary_frame(cs, j * wt, x3), R * wt * wz);
  }
  return rule;
}

}  // namespace maxcyl
