#include "vpl/velocity_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vpl {

VelocityGrid::VelocityGrid(int n_per_axis, double v_max)
    : n_(n_per_axis), v_max_(v_max) {
  if (n_ < 4 || n_ % 2 != 0)
    throw std::invalid_argument("velocity grid: n_per_axis must be even and >= 4");
  if (!(v_max > 0.0))
    throw std::invalid_argument("velocity grid: v_max must be positive");

  h_ = 2.0 * v_max_ / (n_ - 1);
  w_ = h_ * h_ * h_;
  axis_.resize(n_);
  for (int i = 0; i < n_; ++i) axis_[i] = -v_max_ + i * h_;
  // Force exact symmetry of the axis under reflection.
  for (int i = 0; i < n_ / 2; ++i) axis_[n_ - 1 - i] = -axis_[i];

  const Eigen::Index N = size();
  for (auto& c : v_) c.resize(N);
  vsq_.resize(N);
  mu_.resize(N);
  sqrt_mu_.resize(N);
  inv_sqrt_mu_.resize(N);

  const double c0 = std::pow(2.0 * std::numbers::pi, -1.5);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        const Eigen::Index id = index(i, j, k);
        v_[0][id] = axis_[i];
        v_[1][id] = axis_[j];
        v_[2][id] = axis_[k];
        const double s = axis_[i] * axis_[i] + axis_[j] * axis_[j] + axis_[k] * axis_[k];
        vsq_[id] = s;
        mu_[id] = c0 * std::exp(-0.5 * s);
        sqrt_mu_[id] = std::sqrt(mu_[id]);
        inv_sqrt_mu_[id] = 1.0 / sqrt_mu_[id];
      }
}

Eigen::Index VelocityGrid::reflect(int axis, Eigen::Index id) const {
  const Eigen::Index n = n_;
  Eigen::Index i = id / (n * n), j = (id / n) % n, k = id % n;
  if (axis == 0) i = n - 1 - i;
  else if (axis == 1) j = n - 1 - j;
  else k = n - 1 - k;
  return (i * n + j) * n + k;
}

Eigen::Index VelocityGrid::reflect_all(Eigen::Index id) const {
  const Eigen::Index n = n_;
  const Eigen::Index i = id / (n * n), j = (id / n) % n, k = id % n;
  return ((n - 1 - i) * n + (n - 1 - j)) * n + (n - 1 - k);
}

double VelocityGrid::moment(int p1, int p2, int p3) const {
  if (p1 < 0 || p2 < 0 || p3 < 0)
    throw std::invalid_argument("moment: exponents must be nonnegative");
  // Odd exponents vanish exactly by node pairing; return 0 without summing
  // rounding noise.
  if (p1 % 2 || p2 % 2 || p3 % 2) return 0.0;
  // Separable: per-axis sums.
  double s[3] = {0.0, 0.0, 0.0};
  const int p[3] = {p1, p2, p3};
  const double c1 = std::pow(2.0 * std::numbers::pi, -0.5);
  for (int a = 0; a < 3; ++a) {
    double acc = 0.0;
    for (int i = 0; i < n_; ++i)
      acc += std::pow(axis_[i], p[a]) * std::exp(-0.5 * axis_[i] * axis_[i]);
    s[a] = acc * h_ * c1;
  }
  return s[0] * s[1] * s[2];
}

cplx VelocityGrid::inner(const CVec& f, const CVec& g) const {
  if (f.size() != size() || g.size() != size())
    throw std::invalid_argument("inner: field length does not match grid");
  // Linear in f, conjugate in g. Eigen's dot conjugates its caller.
  return w_ * g.dot(f);
}

double VelocityGrid::inner(const Vec& f, const Vec& g) const {
  if (f.size() != size() || g.size() != size())
    throw std::invalid_argument("inner: field length does not match grid");
  return w_ * f.dot(g);
}

cplx VelocityGrid::inner(const SpeciesPair& f, const SpeciesPair& g) const {
  return inner(f.plus, g.plus) + inner(f.minus, g.minus);
}

double VelocityGrid::norm(const CVec& f) const {
  return std::sqrt(w_) * f.norm();
}

double VelocityGrid::norm(const SpeciesPair& f) const {
  return std::sqrt(w_ * (f.plus.squaredNorm() + f.minus.squaredNorm()));
}

double gaussian_moment_1d(int p) {
  if (p < 0 || p % 2 != 0)
    throw std::invalid_argument("gaussian_moment_1d: p must be even and >= 0");
  double df = 1.0;  // (-1)!! = 1
  for (int m = p - 1; m > 1; m -= 2) df *= m;
  return df * std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace vpl
