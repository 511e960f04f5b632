#pragma once

#include <array>
#include <vector>

#include "vpl/types.hpp"

namespace vpl {

/// Uniform Cartesian velocity lattice on [-v_max, v_max]^3.
///
/// Nodes per axis run from -v_max to +v_max inclusive with spacing
/// h = 2 v_max / (n-1); n must be even so the lattice contains no v=0 node
/// and is closed under every axis reflection v_i -> -v_i. Quadrature is the
/// uniform rule with weight h^3 per node.
class VelocityGrid {
 public:
  VelocityGrid(int n_per_axis, double v_max);

  int n() const { return n_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(n_) * n_ * n_; }
  double v_max() const { return v_max_; }
  double h() const { return h_; }
  double weight() const { return w_; }  // h^3, same at every node

  double axis(int i) const { return axis_[i]; }
  Eigen::Index index(int i, int j, int k) const {
    return (static_cast<Eigen::Index>(i) * n_ + j) * n_ + k;
  }

  // Per-node fields, all of length size().
  const Vec& v1() const { return v_[0]; }
  const Vec& v2() const { return v_[1]; }
  const Vec& v3() const { return v_[2]; }
  const Vec& v(int axis) const { return v_[axis]; }
  const Vec& vsq() const { return vsq_; }      // |v|^2
  const Vec& mu() const { return mu_; }        // (2 pi)^{-3/2} exp(-|v|^2/2)
  const Vec& sqrt_mu() const { return sqrt_mu_; }
  const Vec& inv_sqrt_mu() const { return inv_sqrt_mu_; }

  /// Index of the node reflected along one axis (v_a -> -v_a).
  Eigen::Index reflect(int axis, Eigen::Index id) const;
  /// Index of the antipodal node (v -> -v).
  Eigen::Index reflect_all(Eigen::Index id) const;

  /// Discrete moment sum_w v1^p1 v2^p2 v3^p3 mu(v).
  double moment(int p1, int p2, int p3) const;

  /// L^2_v inner product (f, g) = sum w f conj(g) for single fields.
  cplx inner(const CVec& f, const CVec& g) const;
  double inner(const Vec& f, const Vec& g) const;
  /// Pair version, summed over species.
  cplx inner(const SpeciesPair& f, const SpeciesPair& g) const;

  double norm(const CVec& f) const;
  double norm(const SpeciesPair& f) const;

 private:
  int n_;
  double v_max_, h_, w_;
  std::vector<double> axis_;
  std::array<Vec, 3> v_;
  Vec vsq_, mu_, sqrt_mu_, inv_sqrt_mu_;
};

/// One-dimensional Gaussian moment of Eq.-(25) type: for even p >= 0,
/// integral of z^p exp(-z^2/2) over R equals (p-1)!! sqrt(2 pi), with
/// (-1)!! = 1. Analytic oracle, evaluated by the double factorial, not by
/// quadrature.
double gaussian_moment_1d(int p);

}  // namespace vpl
