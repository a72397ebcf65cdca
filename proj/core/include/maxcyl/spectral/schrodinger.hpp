#pragma once

// Finite-difference bands of the matrix Schroedinger operator -Lap + V on
// 6-component vertex fields of the rectangle cell.
//
// Boundary conditions on each wall: the first triple has zero tangential
// components and the second triple a zero normal component (Dirichlet, the
// unknowns are removed); every other component obeys d_nu Phi + Sigma Phi = 0,
// imposed by eliminating a mirrored ghost value
//   Phi_ghost = Phi_mirror - 2 h Sigma Phi_wall.

#include <vector>

#include "maxcyl/reduction.hpp"
#include "maxcyl/spectral/bands.hpp"

namespace maxcyl {

struct SchrodingerOptions {
  /// Dense general eigensolve up to this many unknowns.
  int dense_limit = 2500;
  int extra = 10;
  double tol = 1e-9;
  int max_iterations = 1000;
  std::uint64_t seed = 0x5eed;
};

/// Vertex operator at quasimomentum k. unknown_of(v, c) maps a vertex index
/// ((k*(n2+1) + j)*(n1+1) + i) and component c to the unknown or -1.
struct SchrodingerOperator {
  SpMat A;
  std::vector<int> unknown_index;  // size 6 * vertices

  int unknown_of(int vertex, int comp) const { return unknown_index[std::size_t(6 * vertex + comp)]; }
};

SchrodingerOperator assemble_schrodinger(const StaggeredGrid& grid, const PotentialSampler& V,
                                         const BoundarySampler& sigma, double k);

/// n_bands eigenvalues with smallest real part at each k, ordered by real part.
/// V is never symmetrized; eigenvalues may be complex.
BandStructure schrodinger_bands(const StaggeredGrid& grid, const PotentialSampler& V, const BoundarySampler& sigma,
                                const std::vector<double>& k_list, int n_bands, const SchrodingerOptions& options = {});

}  // namespace maxcyl
