#include "maxcyl/spectral/yee.hpp"

#include <cmath>
#include <sstream>

namespace maxcyl {

StaggeredGrid::StaggeredGrid(const CrossSection& cs, int n1, int n2, int n3)
    : cs_(cs), n1_(n1), n2_(n2), n3_(n3) {
  if (!cs.is_rectangle()) {
    throw UnsupportedGeometryError("band structures are only available for rectangle cross-sections, got " +
                                   cs.describe());
  }
  if (n1 < 4 || n2 < 4 || n3 < 4) {
    std::ostringstream os;
    os << "grid needs at least 4 cells per direction, got (" << n1 << ", " << n2 << ", " << n3 << ")";
    throw DomainError(os.str());
  }
  h1_ = cs.a() / n1;
  h2_ = cs.b() / n2;
  h3_ = 1.0 / n3;
}

int StaggeredGrid::ex(int i, int j, int k) const {
  if (i < 0 || i >= n1_ || j < 1 || j > n2_ - 1) return -1;
  return (k * (n2_ - 1) + (j - 1)) * n1_ + i;
}

int StaggeredGrid::ey(int i, int j, int k) const {
  if (i < 1 || i > n1_ - 1 || j < 0 || j >= n2_) return -1;
  return ex_count() + (k * n2_ + j) * (n1_ - 1) + (i - 1);
}

int StaggeredGrid::ez(int i, int j, int k) const {
  if (i < 1 || i > n1_ - 1 || j < 1 || j > n2_ - 1) return -1;
  return ex_count() + ey_count() + (k * (n2_ - 1) + (j - 1)) * (n1_ - 1) + (i - 1);
}

int StaggeredGrid::hx(int i, int j, int k) const { return (k * n2_ + j) * (n1_ + 1) + i; }

int StaggeredGrid::hy(int i, int j, int k) const { return hx_count() + (k * (n2_ + 1) + j) * n1_ + i; }

int StaggeredGrid::hz(int i, int j, int k) const { return hx_count() + hy_count() + (k * n2_ + j) * n1_ + i; }

int StaggeredGrid::vertex(int i, int j, int k) const {
  if (i < 1 || i > n1_ - 1 || j < 1 || j > n2_ - 1) return -1;
  return (k * (n2_ - 1) + (j - 1)) * (n1_ - 1) + (i - 1);
}

std::vector<Vec3> StaggeredGrid::edge_positions() const {
  std::vector<Vec3> pos(edge_count());
  for (int k = 0; k < n3_; ++k) {
    for (int j = 0; j <= n2_; ++j) {
      for (int i = 0; i <= n1_; ++i) {
        if (int e = ex(i, j, k); e >= 0) pos[e] = Vec3((i + 0.5) * h1_, j * h2_, k * h3_);
        if (int e = ey(i, j, k); e >= 0) pos[e] = Vec3(i * h1_, (j + 0.5) * h2_, k * h3_);
        if (int e = ez(i, j, k); e >= 0) pos[e] = Vec3(i * h1_, j * h2_, (k + 0.5) * h3_);
      }
    }
  }
  return pos;
}

std::vector<Vec3> StaggeredGrid::face_positions() const {
  std::vector<Vec3> pos(face_count());
  for (int k = 0; k < n3_; ++k) {
    for (int j = 0; j <= n2_; ++j) {
      for (int i = 0; i <= n1_; ++i) {
        if (j < n2_) pos[hx(i, j, k)] = Vec3(i * h1_, (j + 0.5) * h2_, (k + 0.5) * h3_);
        if (i < n1_) pos[hy(i, j, k)] = Vec3((i + 0.5) * h1_, j * h2_, (k + 0.5) * h3_);
        if (i < n1_ && j < n2_) pos[hz(i, j, k)] = Vec3((i + 0.5) * h1_, (j + 0.5) * h2_, k * h3_);
      }
    }
  }
  return pos;
}

double StaggeredGrid::gradient_norm_bound() const {
  return 2.0 * std::sqrt(1.0 / (h1_ * h1_) + 1.0 / (h2_ * h2_) + 1.0 / (h3_ * h3_));
}

namespace {

/// Collects triplets; entries whose column is -1 (a wall unknown) are dropped.
class Builder {
 public:
  void add(int row, int col, cplx value) {
    if (col >= 0) trip_.emplace_back(row, col, value);
  }
  SpMat build(int rows, int cols) {
    SpMat m(rows, cols);
    m.setFromTriplets(trip_.begin(), trip_.end());
    return m;
  }

 private:
  std::vector<Eigen::Triplet<cplx>> trip_;
};

RVec sample(const CoefficientField& c, const std::vector<Vec3>& pos, const char* name) {
  RVec v(pos.size());
  for (std::size_t n = 0; n < pos.size(); ++n) {
    const double val = c.eval(pos[n]).value;
    if (!(val >= c.lower_bound() && val <= c.upper_bound())) {
      std::ostringstream os;
      os << name << " = " << val << " at (" << pos[n][0] << ", " << pos[n][1] << ", " << pos[n][2]
         << ") lies outside its declared bounds [" << c.lower_bound() << ", " << c.upper_bound() << "]";
      throw CoefficientError(os.str());
    }
    v[n] = val;
  }
  return v;
}

}  // namespace

YeeOperators assemble_yee(const StaggeredGrid& g, const CoefficientField& eps, const CoefficientField& mu, double k) {
  const int N1 = g.n1(), N2 = g.n2(), N3 = g.n3();
  const double i1 = 1.0 / g.h1(), i2 = 1.0 / g.h2(), i3 = 1.0 / g.h3();
  const cplx fwd = std::polar(1.0, k);

  // Next x3 layer and the Bloch factor picked up when wrapping around.
  auto up = [&](int kk) { return kk + 1 == N3 ? 0 : kk + 1; };
  auto phase = [&](int kk) { return kk + 1 == N3 ? fwd : cplx(1.0); };

  YeeOperators ops;

  Builder curl;
  for (int kk = 0; kk < N3; ++kk) {
    const int ku = up(kk);
    const cplx p = phase(kk);
    for (int j = 0; j <= N2; ++j) {
      for (int i = 0; i <= N1; ++i) {
        if (j < N2) {
          const int r = g.hx(i, j, kk);
          curl.add(r, g.ez(i, j + 1, kk), i2);
          curl.add(r, g.ez(i, j, kk), -i2);
          curl.add(r, g.ey(i, j, ku), -i3 * p);
          curl.add(r, g.ey(i, j, kk), i3);
        }
        if (i < N1) {
          const int r = g.hy(i, j, kk);
          curl.add(r, g.ex(i, j, ku), i3 * p);
          curl.add(r, g.ex(i, j, kk), -i3);
          curl.add(r, g.ez(i + 1, j, kk), -i1);
          curl.add(r, g.ez(i, j, kk), i1);
        }
        if (i < N1 && j < N2) {
          const int r = g.hz(i, j, kk);
          curl.add(r, g.ey(i + 1, j, kk), i1);
          curl.add(r, g.ey(i, j, kk), -i1);
          curl.add(r, g.ex(i, j + 1, kk), -i2);
          curl.add(r, g.ex(i, j, kk), i2);
        }
      }
    }
  }
  ops.curl = curl.build(g.face_count(), g.edge_count());

  Builder grad;
  for (int kk = 0; kk < N3; ++kk) {
    const int ku = up(kk);
    const cplx p = phase(kk);
    for (int j = 0; j <= N2; ++j) {
      for (int i = 0; i <= N1; ++i) {
        if (int r = g.ex(i, j, kk); r >= 0) {
          grad.add(r, g.vertex(i + 1, j, kk), i1);
          grad.add(r, g.vertex(i, j, kk), -i1);
        }
        if (int r = g.ey(i, j, kk); r >= 0) {
          grad.add(r, g.vertex(i, j + 1, kk), i2);
          grad.add(r, g.vertex(i, j, kk), -i2);
        }
        if (int r = g.ez(i, j, kk); r >= 0) {
          grad.add(r, g.vertex(i, j, ku), i3 * p);
          grad.add(r, g.vertex(i, j, kk), -i3);
        }
      }
    }
  }
  ops.gradient = grad.build(g.edge_count(), g.vertex_count());

  Builder div;
  for (int kk = 0; kk < N3; ++kk) {
    const int ku = up(kk);
    const cplx p = phase(kk);
    for (int j = 0; j < N2; ++j) {
      for (int i = 0; i < N1; ++i) {
        const int r = g.cell(i, j, kk);
        div.add(r, g.hx(i + 1, j, kk), i1);
        div.add(r, g.hx(i, j, kk), -i1);
        div.add(r, g.hy(i, j + 1, kk), i2);
        div.add(r, g.hy(i, j, kk), -i2);
        div.add(r, g.hz(i, j, ku), i3 * p);
        div.add(r, g.hz(i, j, kk), -i3);
      }
    }
  }
  ops.divergence = div.build(g.cell_count(), g.face_count());

  ops.eps_edges = sample(eps, g.edge_positions(), "eps");
  ops.inv_mu_faces = sample(mu, g.face_positions(), "mu").cwiseInverse();
  return ops;
}

CurlCurlPencil assemble_curlcurl(const StaggeredGrid& grid, const CoefficientField& eps, const CoefficientField& mu,
                                 double k) {
  YeeOperators ops = assemble_yee(grid, eps, mu, k);
  CurlCurlPencil p;
  const SpMat weighted = ops.inv_mu_faces.cast<cplx>().asDiagonal() * ops.curl;
  p.K = SpMat(ops.curl.adjoint()) * weighted;
  p.K.prune(cplx(0.0));
  p.M = std::move(ops.eps_edges);
  p.gradient = std::move(ops.gradient);
  return p;
}

double divergence_residual(const StaggeredGrid& grid, const SpMat& gradient, const RVec& M, const CVec& e) {
  const CVec Me = M.cast<cplx>().cwiseProduct(e);
  const double denom = grid.gradient_norm_bound() * Me.norm();
  if (denom == 0.0) return 0.0;
  return (gradient.adjoint() * Me).norm() / denom;
}

}  // namespace maxcyl
