#include "trigsynth/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "trigsynth/errors.hpp"
#include "trigsynth/quadrature.hpp"

namespace trigsynth {

TrigPoly dirichlet_kernel(int n) {
  if (n < 0) throw std::invalid_argument("kernel order must be >= 0");
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(n) + 1, cplx(1.0));
  return TrigPoly::from_coeffs(n, std::move(coeffs));
}

double dirichlet_eval(int n, double t) {
  if (n < 0) throw std::invalid_argument("kernel order must be >= 0");
  const double s = std::sin(0.5 * t);
  if (std::fabs(s) < 1e-8) return 2.0 * n + 1.0;
  return std::sin((n + 0.5) * t) / s;
}

namespace {

TrigPoly scaled_truncation(const TrigPoly& p, int out_degree,
                           const std::function<double(int)>& weight) {
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(out_degree) + 1, cplx(0.0));
  for (int k = -out_degree; k <= out_degree; ++k)
    coeffs[static_cast<std::size_t>(k + out_degree)] = p.coeff(k) * weight(std::abs(k));
  return TrigPoly::from_coeffs(out_degree, std::move(coeffs));
}

void require_grid_order(const GridFunction& f, int needed) {
  if (needed > static_cast<int>(f.size() / 2) - 1)
    throw std::invalid_argument("grid too coarse for the requested mean order");
}

}  // namespace

TrigPoly fejer_mean(const TrigPoly& p, int m) {
  if (m < 0) throw std::invalid_argument("mean order must be >= 0");
  const int d = std::min(m, p.degree());
  const double denom = static_cast<double>(m) + 1.0;
  return scaled_truncation(p, d, [&](int k) { return 1.0 - k / denom; });
}

TrigPoly fejer_mean(const GridFunction& f, int m) {
  if (m < 0) throw std::invalid_argument("mean order must be >= 0");
  require_grid_order(f, m);
  return fejer_mean(f.fourier_coeffs(), m);
}

TrigPoly vallee_poussin_mean(const TrigPoly& p, int m) {
  if (m < 0) throw std::invalid_argument("mean order must be >= 0");
  const int d = std::min(2 * m + 1, p.degree());
  const double denom = 2.0 * m + 2.0;
  return scaled_truncation(p, d, [&](int k) {
    return k <= m + 1 ? 1.0 : 2.0 * (1.0 - k / denom);
  });
}

TrigPoly vallee_poussin_mean(const GridFunction& f, int m) {
  if (m < 0) throw std::invalid_argument("mean order must be >= 0");
  require_grid_order(f, 2 * m + 1);
  return vallee_poussin_mean(f.fourier_coeffs(), m);
}

double jackson_peak_eval(int w, double t) {
  if (w < 1) throw std::invalid_argument("peak order must be >= 1");
  const double s = std::sin(0.5 * t);
  if (std::fabs(s) < 1e-9) return 1.0;
  const double r = std::sin(0.5 * w * t) / (w * s);
  return r * r * r * r;
}

TrigPoly jackson_peak(int w) {
  if (w < 1) throw std::invalid_argument("peak order must be >= 1");
  const int d = 2 * w - 2;
  const std::size_t n = fft::next_power_of_two(2 * static_cast<std::size_t>(d) + 2);
  const GridFunction g = GridFunction::from_function(
      n, [w](double t) { return cplx(jackson_peak_eval(w, t)); });
  TrigPoly p = g.fourier_coeffs().partial_sum(d);
  // The kernel is real and even, so keep the coefficients exactly so.
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    const double c = 0.5 * (p.coeff(k).real() + p.coeff(-k).real());
    coeffs[static_cast<std::size_t>(d + k)] = c;
    coeffs[static_cast<std::size_t>(d - k)] = c;
  }
  return TrigPoly::from_coeffs(d, std::move(coeffs));
}

double jackson_tail_mass(int w, double r) {
  if (r <= 0.0) return 1.0;
  if (r >= std::numbers::pi) return 0.0;
  const TrigPoly p = jackson_peak(w);
  const double total = p.coeff(0).real() * two_pi;
  const double tail =
      2.0 * integrate([w](double t) { return jackson_peak_eval(w, t); }, r,
                      std::numbers::pi, 1e-12 * total + 1e-300);
  return tail / total;
}

double lebesgue_constant(int n, double abs_tol) {
  if (n < 0) throw std::invalid_argument("kernel order must be >= 0");
  if (abs_tol <= 0.0) throw std::invalid_argument("quadrature accuracy must be positive");
  const int pieces = 2 * n + 1;
  const double piece_tol = abs_tol * two_pi / pieces;
  double total = 0.0;
  for (int k = 0; k <= 2 * n; ++k) {
    const double a = two_pi * k / pieces;
    const double b = two_pi * (k + 1) / pieces;
    total += integrate([n](double t) { return std::fabs(dirichlet_eval(n, t)); },
                       a, b, piece_tol);
  }
  return total / two_pi;
}

double lebesgue_upper_bound(int n) {
  if (n < 0) throw std::invalid_argument("kernel order must be >= 0");
  return (4.0 / (std::numbers::pi * std::numbers::pi)) *
             std::log(static_cast<double>(std::max(n, 1))) +
         1.5;
}

}  // namespace trigsynth
