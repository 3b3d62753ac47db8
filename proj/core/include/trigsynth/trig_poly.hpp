#pragma once

#include <complex>
#include <span>
#include <vector>

#include "trigsynth/circle.hpp"

namespace trigsynth {

using cplx = std::complex<double>;

/// Closed frequency range [lo, hi] occupied by a polynomial's spectrum.
struct SpectralBand {
  int lo = 0;
  int hi = 0;
};

/// Trigonometric polynomial p(t) = sum_{|k| <= d} c_k e^{ikt}.
///
/// The coefficient vector always covers the full symmetric range -d..d, so a
/// polynomial whose spectrum sits in an asymmetric band simply carries zeros
/// on the other side. Values are immutable; every operation returns a new
/// polynomial.
class TrigPoly {
public:
  TrigPoly() : degree_(0), coeffs_(1, cplx(0.0)) {}

  static TrigPoly zero() { return TrigPoly(); }
  static TrigPoly constant(cplx c);
  /// c * e^{ikt}
  static TrigPoly harmonic(int k, cplx c = cplx(1.0));
  /// coeffs lists c_{-d}..c_d and must have size 2*degree + 1.
  static TrigPoly from_coeffs(int degree, std::vector<cplx> coeffs);

  int degree() const { return degree_; }
  /// c_k, zero outside [-degree, degree].
  cplx coeff(int k) const {
    if (k < -degree_ || k > degree_) return cplx(0.0);
    return coeffs_[static_cast<std::size_t>(k + degree_)];
  }
  std::span<const cplx> coeffs() const { return coeffs_; }

  cplx eval(double t) const { return partial_sum_at(degree_, t); }
  cplx eval(CirclePoint t) const { return eval(t.angle()); }
  /// Value of the n-th partial sum at t, without materializing the truncation.
  cplx partial_sum_at(int n, double t) const;

  /// Truncation to frequencies |k| <= n. For n >= degree this is the
  /// identity; coefficients are copied verbatim, never recomputed.
  TrigPoly partial_sum(int n) const;
  /// e^{i*shift*t} * p(t)
  TrigPoly modulate(int shift) const;
  /// t -> p(t - a)
  TrigPoly translate(double a) const;
  TrigPoly conjugate() const;
  /// Drops outermost coefficient pairs with |c| <= tol. The default trims
  /// exact zeros only.
  TrigPoly trimmed(double tol = 0.0) const;

  bool is_zero() const;
  /// Largest violation of the conjugate-symmetry condition c_{-k} == conj(c_k)
  /// that characterizes real-valued polynomials.
  double realness_defect() const;
  double coeff_l1() const;
  double coeff_l2() const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(cplx s, const TrigPoly& p);
  friend TrigPoly operator*(const TrigPoly& p, cplx s) { return s * p; }
  /// Pointwise product (coefficient convolution).
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

private:
  int degree_;
  std::vector<cplx> coeffs_;
};

/// Band [lo, hi] spanned by coefficients with |c_k| > tol. The zero
/// polynomial reports [0, 0].
SpectralBand spectral_band(const TrigPoly& p, double tol = 0.0);

/// Values of p on the uniform grid t_j = 2*pi*j/n, computed by padded
/// inverse FFT. Requires power-of-two n >= 2*degree + 1.
std::vector<cplx> sample_values(const TrigPoly& p, std::size_t n);

}  // namespace trigsynth
