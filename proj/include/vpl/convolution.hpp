#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "vpl/velocity_grid.hpp"

namespace vpl {

/// Discrete velocity convolution (K * u)(v) = sum_{v'} h^3 K(v - v') u(v')
/// for translation-invariant kernels on the lattice.
///
/// The fast path embeds the n^3 field in a zero-padded (2n)^3 box and uses
/// FFTW; plans use FFTW_ESTIMATE so results are run-to-run deterministic.
/// convolve_direct is the O(N^2) reference sum the fast path is anchored to
/// in the tests.
class ConvolutionEngine {
 public:
  explicit ConvolutionEngine(const VelocityGrid& grid);
  ~ConvolutionEngine();

  ConvolutionEngine(const ConvolutionEngine&) = delete;
  ConvolutionEngine& operator=(const ConvolutionEngine&) = delete;

  /// Precompute the padded spectrum of a kernel given by its value at each
  /// lattice difference d = v - v'. Returns a handle index.
  int add_kernel(const std::function<double(double, double, double)>& kernel);

  /// Fast convolution of the stored kernel `k` with a complex field.
  CVec convolve(int k, const CVec& u) const;

  /// Reference direct sum (same kernel handle).
  CVec convolve_direct(int k, const CVec& u) const;

  /// Convolve one field against several kernels at once (one forward FFT).
  void convolve_many(const std::vector<int>& ks, const CVec& u,
                     std::vector<CVec>& out) const;

  /// Accumulate sum_j kernel[ks[j]] * u[j] with one inverse FFT.
  CVec convolve_accumulate(const std::vector<int>& ks,
                           const std::vector<const CVec*>& u) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vpl
