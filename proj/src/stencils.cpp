#include "vpl/stencils.hpp"

#include <vector>

namespace vpl {

namespace {

// Triplets of the 1D second-order derivative lifted to the 3D lattice along
// one axis.
SpMat axis_gradient(const VelocityGrid& g, int axis) {
  const int n = g.n();
  const double h = g.h();
  const Eigen::Index N = g.size();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(N) * 3);

  auto id = [&](int i, int j, int k) { return g.index(i, j, k); };
  auto node = [&](int line, int pos, int i, int j) {
    // Compose the 3D index with `pos` along `axis`; (i,j) fill the others.
    switch (axis) {
      case 0: return id(pos, i, j);
      case 1: return id(i, pos, j);
      default: return id(i, j, pos);
    }
    (void)line;
  };

  // Dyadic raw coefficients, one global 1/h scale at the end: row sums are
  // exactly zero, so constants are differentiated to exact zero.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p) {
        const Eigen::Index r = node(0, p, i, j);
        if (p == 0) {
          trip.emplace_back(r, node(0, 0, i, j), -1.5);
          trip.emplace_back(r, node(0, 1, i, j), 2.0);
          trip.emplace_back(r, node(0, 2, i, j), -0.5);
        } else if (p == n - 1) {
          trip.emplace_back(r, node(0, n - 1, i, j), 1.5);
          trip.emplace_back(r, node(0, n - 2, i, j), -2.0);
          trip.emplace_back(r, node(0, n - 3, i, j), 0.5);
        } else {
          trip.emplace_back(r, node(0, p + 1, i, j), 0.5);
          trip.emplace_back(r, node(0, p - 1, i, j), -0.5);
        }
      }
  SpMat M(N, N);
  M.setFromTriplets(trip.begin(), trip.end());
  M *= 1.0 / h;
  M.makeCompressed();
  return M;
}

SpMat diag_scale(const Vec& left, const SpMat& M, const Vec& right) {
  SpMat out = left.asDiagonal() * M * right.asDiagonal();
  out.makeCompressed();
  return out;
}

}  // namespace

Stencils::Stencils(const VelocityGrid& grid) {
  for (int a = 0; a < 3; ++a) {
    grad[a] = axis_gradient(grid, a);
    B[a] = diag_scale(grid.mu(), grad[a], grid.inv_sqrt_mu());
    Bt[a] = SpMat(B[a].transpose());
    Bt[a].makeCompressed();
    drift[a] = diag_scale(grid.inv_sqrt_mu(), grad[a], grid.sqrt_mu());
  }
}

CVec Stencils::apply(const SpMat& M, const CVec& x) {
  CVec y(x.size());
  y.real() = M * x.real();
  y.imag() = M * x.imag();
  return y;
}

}  // namespace vpl
