#pragma once

#include <Eigen/Sparse>

#include "vpl/velocity_grid.hpp"

namespace vpl {

using SpMat = Eigen::SparseMatrix<double>;

/// Finite-difference machinery on the velocity lattice.
///
/// grad[a]  : second-order d/dv_a, centered inside, one-sided 2nd order at
///            the lattice edge (exact on quadratics everywhere).
/// conj_minus[a] : mu^{1/2} d/dv_a (mu^{-1/2} .)  = d/dv_a - v_a/2 applied in
///            conjugated form; annihilates Maxwellian-profile fields exactly
///            at the stencil level.
/// conj_plus[a]  : mu^{-1/2} d/dv_a (mu^{1/2} .)  = d/dv_a + v_a/2, the
///            conjugate used by the field-drift term; its moments against
///            polynomials telescope to lattice-edge terms.
///
/// The collision assembly uses B_a = mu grad[a] mu^{-1/2} = mu^{1/2} *
/// conj_minus[a]; it is kept as an explicit sparse matrix so the transpose
/// (the weak-form divergence) is exact.
struct Stencils {
  explicit Stencils(const VelocityGrid& grid);

  std::array<SpMat, 3> grad;        // d/dv_a
  std::array<SpMat, 3> B;           // mu grad_a mu^{-1/2}
  std::array<SpMat, 3> Bt;          // B^T
  std::array<SpMat, 3> drift;       // mu^{-1/2} grad_a mu^{1/2}

  /// y = M x for complex x with a real sparse M.
  static CVec apply(const SpMat& M, const CVec& x);
};

}  // namespace vpl
