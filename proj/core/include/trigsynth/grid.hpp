#pragma once

#include <functional>
#include <span>
#include <vector>

#include "trigsynth/trig_poly.hpp"

namespace trigsynth {

namespace fft {

/// In-place radix-2 FFT, X[j] = sum_l x[l] e^{-2*pi*i*j*l/N}. N must be a
/// power of two.
void forward_inplace(std::span<cplx> data);
/// Inverse of forward_inplace, including the 1/N normalization.
void inverse_inplace(std::span<cplx> data);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace fft

/// Samples of a function on the uniform grid t_j = 2*pi*j/N with N a power
/// of two.
class GridFunction {
public:
  GridFunction(std::vector<cplx> samples);

  static GridFunction sample(const TrigPoly& p, std::size_t n);
  static GridFunction from_function(std::size_t n, const std::function<cplx(double)>& f);

  std::size_t size() const { return samples_.size(); }
  std::span<const cplx> samples() const { return samples_; }
  double t(std::size_t j) const { return two_pi * static_cast<double>(j) / static_cast<double>(size()); }
  double max_abs() const;

  /// Discrete Fourier coefficients c_k = (1/N) sum_j f_j e^{-ik t_j},
  /// returned as a polynomial of degree N/2 - 1. For samples of a
  /// polynomial of degree d with 2d + 1 <= N the coefficients are exact.
  TrigPoly fourier_coeffs() const;

private:
  std::vector<cplx> samples_;
};

}  // namespace trigsynth
