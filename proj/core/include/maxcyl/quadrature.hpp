#pragma once

// Quadrature over one period cell U x [0,1) and over its lateral boundary.

#include <vector>

#include "maxcyl/geometry.hpp"

namespace maxcyl {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

struct QuadratureOrder {
  int planar = 16;   // Gauss points per planar direction (rectangle) or radially (disk)
  int angular = 32;  // uniform angle nodes (disk only)
  int axial = 32;    // uniform nodes in x3 over [0, 1)
};

struct QuadratureRule {
  enum class Kind { Cell, Boundary };

  Kind kind = Kind::Cell;
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  std::vector<BoundaryPoint> frames;  // boundary rules only, parallel to nodes

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
};

/// Tensor rule on U x [0,1): Gauss x Gauss (rectangle) or polar Gauss x
/// uniform angle (disk), times uniform nodes in x3. Weights sum to |U|.
QuadratureRule cell_quadrature(const CrossSection& cs, const QuadratureOrder& order = {});

/// Rule on dU x [0,1): per-face Gauss nodes (no corner nodes) or uniform
/// angle (disk), times uniform nodes in x3. Weights sum to |dU|.
QuadratureRule boundary_quadrature(const CrossSection& cs, const QuadratureOrder& order = {});

/// Cell and boundary rules used together by the integral identities.
struct QuadraturePair {
  QuadratureRule cell;
  QuadratureRule boundary;

  static QuadraturePair build(const CrossSection& cs, const QuadratureOrder& order = {}) {
    return QuadraturePair{cell_quadrature(cs, order), boundary_quadrature(cs, order)};
  }
};

}  // namespace maxcyl
