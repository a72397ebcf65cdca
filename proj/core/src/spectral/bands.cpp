#include "maxcyl/spectral/bands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace maxcyl {

double default_shift(const CrossSection& cs, const CoefficientField& eps, const CoefficientField& mu) {
  const double L = std::max(cs.a(), cs.b());
  return 0.5 * (kPi / L) * (kPi / L) / (eps.upper_bound() * mu.upper_bound());
}

BandStructure maxwell_bands(const StaggeredGrid& grid, const CoefficientField& eps, const CoefficientField& mu,
                            const std::vector<double>& k_list, int n_bands, const BandOptions& options) {
  if (k_list.empty()) throw DomainError("band computation needs at least one k sample");
  if (n_bands < 1 || n_bands > grid.edge_count() / 10) {
    std::ostringstream os;
    os << "n_bands = " << n_bands << " must lie in [1, " << grid.edge_count() / 10 << "] for this grid";
    throw DomainError(os.str());
  }
  BandStructure bs;
  bs.k_samples = k_list;
  bs.n1 = grid.n1();
  bs.n2 = grid.n2();
  bs.n3 = grid.n3();
  bs.bands.resize(Eigen::Index(k_list.size()), n_bands);
  bs.div_residuals.resize(Eigen::Index(k_list.size()), n_bands);

  for (std::size_t j = 0; j < k_list.size(); ++j) {
    const CurlCurlPencil pencil = assemble_curlcurl(grid, eps, mu, k_list[j]);
    if (grid.edge_count() <= options.dense_limit) {
      const RVec vals = dense_nonzero_eigenvalues(pencil, n_bands);
      bs.bands.row(Eigen::Index(j)) = vals.cast<cplx>().transpose();
      bs.div_residuals.row(Eigen::Index(j)).setZero();
      continue;
    }
    const EigenResult er = smallest_divfree_eigenpairs(grid, pencil, n_bands, options.eigen);
    bs.iterations = std::max(bs.iterations, er.iterations);
    for (int n = 0; n < n_bands; ++n) {
      bs.bands(Eigen::Index(j), n) = er.values[n];
      bs.div_residuals(Eigen::Index(j), n) = er.div_residuals[std::size_t(n)];
    }
  }
  return bs;
}

std::vector<double> analytic_empty_bands(double a, double b, double k, int count) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("waveguide side lengths must be positive");
  if (count < 1) return {};
  // Collect every value below a cutoff; grow the cutoff until enough are found.
  const double base = std::pow(kPi / std::max(a, b), 2);
  for (double cutoff = 4.0 * base;; cutoff *= 2.0) {
    std::vector<double> vals;
    const double root = std::sqrt(cutoff);
    const int mmax = int(std::floor(root * a / kPi));
    const int nmax = int(std::floor(root * b / kPi));
    const int lmax = int(std::ceil((root + std::abs(k)) / kTwoPi));
    for (int m = 0; m <= mmax; ++m) {
      for (int n = 0; n <= nmax; ++n) {
        if (m == 0 && n == 0) continue;
        const double planar = std::pow(m * kPi / a, 2) + std::pow(n * kPi / b, 2);
        const int families = (m >= 1 && n >= 1) ? 2 : 1;  // TE always, TM when m, n >= 1
        for (int l = -lmax; l <= lmax; ++l) {
          const double v = planar + std::pow(k + kTwoPi * l, 2);
          if (v <= cutoff) {
            for (int f = 0; f < families; ++f) vals.push_back(v);
          }
        }
      }
    }
    if (int(vals.size()) >= count) {
      std::sort(vals.begin(), vals.end());
      vals.resize(std::size_t(count));
      return vals;
    }
  }
}

std::vector<double> uniform_k_samples(int count) {
  if (count < 1) throw DomainError("k sample count must be positive");
  std::vector<double> ks(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) ks[std::size_t(j)] = kTwoPi * j / count;
  return ks;
}

FlatBandReport flat_band_scan(const BandStructure& bs, double rel_tol) {
  if (bs.k_samples.size() < 16) {
    std::ostringstream os;
    os << "flat-band scan needs at least 16 k samples, got " << bs.k_samples.size();
    throw DomainError(os.str());
  }
  FlatBandReport rep;
  rep.rel_tol = rel_tol;
  for (int n = 0; n < bs.band_count(); ++n) {
    const Eigen::VectorXd col = bs.bands.col(n).real();
    BandStatistics st;
    st.band = n + 1;
    st.min = col.minCoeff();
    st.max = col.maxCoeff();
    st.variation = st.max - st.min;
    st.rel_variation = st.variation / std::max(1.0, col.mean());
    st.flat = st.rel_variation < rel_tol;
    rep.any_flat = rep.any_flat || st.flat;
    rep.bands.push_back(st);
  }
  rep.verdict = rep.any_flat ? "flat-band candidate at resolution" : "no flat-band candidate at resolution";
  return rep;
}

ContinuityReport continuity_report(const BandStructure& bs) {
  ContinuityReport rep;
  const std::size_t nk = bs.k_samples.size();
  for (int n = 0; n < bs.band_count(); ++n) {
    std::vector<double> slopes;
    for (std::size_t j = 0; j + 1 < nk; ++j) {
      const double dk = std::abs(bs.k_samples[j + 1] - bs.k_samples[j]);
      if (dk == 0.0) continue;
      slopes.push_back(std::abs(bs.bands(Eigen::Index(j + 1), n).real() - bs.bands(Eigen::Index(j), n).real()) / dk);
    }
    if (slopes.empty()) {
      rep.lipschitz.push_back(0.0);
      continue;
    }
    std::vector<double> sorted = slopes;
    std::sort(sorted.begin(), sorted.end());
    double L = sorted[sorted.size() / 2];
    if (L == 0.0) L = sorted.back();
    rep.lipschitz.push_back(L);
    if (L == 0.0) continue;
    for (double s : slopes) {
      rep.worst_ratio = std::max(rep.worst_ratio, s / L);
      if (s > 10.0 * L) ++rep.jumps;
    }
  }
  return rep;
}

}  // namespace maxcyl
