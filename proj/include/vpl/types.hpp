#pragma once

#include <complex>

#include <Eigen/Dense>

namespace vpl {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

/// Two-species field on the velocity grid: f = [f_plus, f_minus].
struct SpeciesPair {
  CVec plus;
  CVec minus;

  SpeciesPair() = default;
  explicit SpeciesPair(Eigen::Index n) : plus(CVec::Zero(n)), minus(CVec::Zero(n)) {}

  Eigen::Index size() const { return plus.size(); }
  CVec sum() const { return plus + minus; }
  CVec diff() const { return plus - minus; }

  SpeciesPair& operator+=(const SpeciesPair& o) {
    plus += o.plus;
    minus += o.minus;
    return *this;
  }
  SpeciesPair& operator*=(cplx a) {
    plus *= a;
    minus *= a;
    return *this;
  }
  friend SpeciesPair operator+(SpeciesPair a, const SpeciesPair& b) { return a += b; }
  friend SpeciesPair operator*(cplx a, SpeciesPair f) { return f *= a; }
};

}  // namespace vpl
