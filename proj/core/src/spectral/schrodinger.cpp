#include "maxcyl/spectral/schrodinger.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <sstream>

#include "maxcyl/rng.hpp"

namespace maxcyl {

namespace {

struct WallInfo {
  int face = -1;  // rectangle face index or -1
  int axis = 0;   // 0 for x1 walls, 1 for x2 walls
};

/// Walls touching vertex (i, j): up to two.
std::vector<WallInfo> walls_at(const StaggeredGrid& g, int i, int j) {
  std::vector<WallInfo> w;
  if (i == 0) w.push_back({3, 0});
  if (i == g.n1()) w.push_back({1, 0});
  if (j == 0) w.push_back({0, 1});
  if (j == g.n2()) w.push_back({2, 1});
  return w;
}

bool is_dirichlet(const std::vector<WallInfo>& walls, int comp) {
  for (const auto& w : walls) {
    if (comp < 3 && comp != w.axis) return true;  // tangential part of the first triple
    if (comp == 3 + w.axis) return true;          // normal part of the second triple
  }
  return false;
}

}  // namespace

SchrodingerOperator assemble_schrodinger(const StaggeredGrid& g, const PotentialSampler& V,
                                         const BoundarySampler& sigma, double k) {
  const int N1 = g.n1(), N2 = g.n2(), N3 = g.n3();
  const CrossSection& cs = g.cross_section();
  auto vid = [&](int i, int j, int kk) { return (kk * (N2 + 1) + j) * (N1 + 1) + i; };
  const int nv = (N1 + 1) * (N2 + 1) * N3;

  SchrodingerOperator op;
  op.unknown_index.assign(std::size_t(6 * nv), -1);
  int count = 0;
  for (int kk = 0; kk < N3; ++kk) {
    for (int j = 0; j <= N2; ++j) {
      for (int i = 0; i <= N1; ++i) {
        const auto walls = walls_at(g, i, j);
        for (int c = 0; c < 6; ++c) {
          if (!is_dirichlet(walls, c)) op.unknown_index[std::size_t(6 * vid(i, j, kk) + c)] = count++;
        }
      }
    }
  }

  const double h[3] = {g.h1(), g.h2(), g.h3()};
  const cplx fwd = std::polar(1.0, k);
  std::vector<Eigen::Triplet<cplx>> trip;
  auto add = [&](int row, int vertex, int comp, cplx value) {
    const int col = op.unknown_of(vertex, comp);
    if (col >= 0 && value != cplx(0.0)) trip.emplace_back(row, col, value);
  };

  for (int kk = 0; kk < N3; ++kk) {
    const int kp = kk + 1 == N3 ? 0 : kk + 1;
    const int km = kk == 0 ? N3 - 1 : kk - 1;
    const cplx pp = kk + 1 == N3 ? fwd : cplx(1.0);
    const cplx pm = kk == 0 ? std::conj(fwd) : cplx(1.0);
    for (int j = 0; j <= N2; ++j) {
      for (int i = 0; i <= N1; ++i) {
        const int v = vid(i, j, kk);
        const Vec3 x(i * h[0], j * h[1], kk * h[2]);
        const auto walls = walls_at(g, i, j);
        const CMat6 Vx = V(x);
        // Robin data per in-plane axis, evaluated with that wall's frame.
        Mat6 robin[2] = {Mat6::Zero(), Mat6::Zero()};
        for (const auto& w : walls) robin[w.axis] = sigma(rectangle_face_frame(cs, w.face, x));

        for (int c = 0; c < 6; ++c) {
          const int row = op.unknown_of(v, c);
          if (row < 0) continue;
          cplx diag = 0.0;
          for (int d = 0; d < 2; ++d) {
            const double ih2 = 1.0 / (h[d] * h[d]);
            const int idx = d == 0 ? i : j;
            const int last = d == 0 ? N1 : N2;
            const int vminus = d == 0 ? vid(i - 1, j, kk) : vid(i, j - 1, kk);
            const int vplus = d == 0 ? vid(i + 1, j, kk) : vid(i, j + 1, kk);
            diag += 2.0 * ih2;
            if (idx > 0 && idx < last) {
              add(row, vminus, c, -ih2);
              add(row, vplus, c, -ih2);
            } else {
              // Ghost value mirrored across the wall: -(2 Phi_mirror - 2 h Sigma Phi_0) / h^2.
              add(row, idx == 0 ? vplus : vminus, c, -2.0 * ih2);
              for (int c2 = 0; c2 < 6; ++c2) add(row, v, c2, 2.0 * h[d] * ih2 * robin[d](c, c2));
            }
          }
          const double ih3 = 1.0 / (h[2] * h[2]);
          diag += 2.0 * ih3;
          add(row, vid(i, j, kp), c, -ih3 * pp);
          add(row, vid(i, j, km), c, -ih3 * pm);
          add(row, v, c, diag);
          for (int c2 = 0; c2 < 6; ++c2) add(row, v, c2, Vx(c, c2));
        }
      }
    }
  }
  op.A.resize(count, count);
  op.A.setFromTriplets(trip.begin(), trip.end());
  return op;
}

namespace {

bool by_real_part(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Eigen::VectorXcd dense_smallest(const SpMat& A, int count) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(A), false);
  if (es.info() != Eigen::Success) throw NumericalError("dense eigensolve of the Schroedinger matrix failed");
  std::vector<cplx> vals(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(vals.begin(), vals.end(), by_real_part);
  Eigen::VectorXcd out(count);
  for (int n = 0; n < count; ++n) out[n] = vals[std::size_t(n)];
  return out;
}

/// Shift-invert subspace iteration around a Gershgorin lower bound of the
/// real parts, so the eigenvalues nearest the shift are the leftmost ones.
Eigen::VectorXcd sparse_smallest(const SpMat& A, int count, const SchrodingerOptions& opt) {
  const int n = int(A.rows());
  const int p = std::min(n, count + opt.extra);
  double lower = std::numeric_limits<double>::infinity();
  {
    Eigen::VectorXd off = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd dre = Eigen::VectorXd::Zero(n);
    for (int col = 0; col < A.outerSize(); ++col) {
      for (SpMat::InnerIterator it(A, col); it; ++it) {
        if (it.row() == it.col()) dre[it.row()] = it.value().real();
        else off[it.row()] += std::abs(it.value());
      }
    }
    for (int r = 0; r < n; ++r) lower = std::min(lower, dre[r] - off[r]);
  }
  const double shift = lower - 1.0;
  SpMat B = A;
  for (int r = 0; r < n; ++r) B.coeffRef(r, r) -= shift;
  Eigen::SparseLU<SpMat> lu;
  lu.analyzePattern(B);
  lu.factorize(B);
  if (lu.info() != Eigen::Success) throw NumericalError("sparse LU factorization of the Schroedinger matrix failed");

  Rng rng(opt.seed);
  Eigen::MatrixXcd Q(n, p);
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < n; ++r) Q(r, c) = rng.complex_uniform();
  }
  Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(Q).householderQ() * Eigen::MatrixXcd::Identity(n, p);
  std::vector<cplx> theta;
  double worst = 0.0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    Eigen::MatrixXcd Y = lu.solve(Q);
    Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(Y).householderQ() * Eigen::MatrixXcd::Identity(n, p);
    const Eigen::MatrixXcd AQ = A * Q;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Q.adjoint() * AQ);
    std::vector<int> order(static_cast<std::size_t>(p));
    for (int c = 0; c < p; ++c) order[std::size_t(c)] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return by_real_part(es.eigenvalues()[a], es.eigenvalues()[b]); });
    Eigen::MatrixXcd S(p, p);
    theta.clear();
    for (int c = 0; c < p; ++c) {
      S.col(c) = es.eigenvectors().col(order[std::size_t(c)]);
      theta.push_back(es.eigenvalues()[order[std::size_t(c)]]);
    }
    worst = 0.0;
    for (int c = 0; c < count; ++c) {
      const Eigen::VectorXcd y = Q * S.col(c);
      const double r = (A * y - theta[std::size_t(c)] * y).norm() / ((std::abs(theta[std::size_t(c)]) + 1.0) * y.norm());
      worst = std::max(worst, r);
    }
    Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(Q * S).householderQ() * Eigen::MatrixXcd::Identity(n, p);
    if (worst <= opt.tol) break;
  }
  if (worst > opt.tol) {
    std::ostringstream os;
    os << "Schroedinger eigensolver did not converge: worst relative residual " << worst;
    throw NumericalError(os.str());
  }
  Eigen::VectorXcd out(count);
  for (int c = 0; c < count; ++c) out[c] = theta[std::size_t(c)];
  return out;
}

}  // namespace

BandStructure schrodinger_bands(const StaggeredGrid& grid, const PotentialSampler& V, const BoundarySampler& sigma,
                                const std::vector<double>& k_list, int n_bands, const SchrodingerOptions& options) {
  if (k_list.empty()) throw DomainError("band computation needs at least one k sample");
  BandStructure bs;
  bs.k_samples = k_list;
  bs.n1 = grid.n1();
  bs.n2 = grid.n2();
  bs.n3 = grid.n3();
  bs.bands.resize(Eigen::Index(k_list.size()), n_bands);
  bs.div_residuals = Eigen::MatrixXd::Zero(Eigen::Index(k_list.size()), n_bands);
  for (std::size_t j = 0; j < k_list.size(); ++j) {
    const SchrodingerOperator op = assemble_schrodinger(grid, V, sigma, k_list[j]);
    if (n_bands < 1 || n_bands > op.A.rows()) throw DomainError("n_bands exceeds the Schroedinger unknown count");
    const Eigen::VectorXcd vals =
        op.A.rows() <= options.dense_limit ? dense_smallest(op.A, n_bands) : sparse_smallest(op.A, n_bands, options);
    bs.bands.row(Eigen::Index(j)) = vals.transpose();
  }
  return bs;
}

}  // namespace maxcyl
