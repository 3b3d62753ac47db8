#include "trigsynth/grid.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace trigsynth {

namespace fft {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  return n <= 1 ? 1 : std::bit_ceil(n);
}

namespace {

void transform(std::span<cplx> a, bool invert) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cplx> w(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (invert ? 1.0 : -1.0) * two_pi / static_cast<double>(len);
    const std::size_t half = len >> 1;
    for (std::size_t j = 0; j < half; ++j) w[j] = std::polar(1.0, ang * static_cast<double>(j));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + half] * w[j];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
  if (invert) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= scale;
  }
}

}  // namespace

void forward_inplace(std::span<cplx> data) { transform(data, false); }
void inverse_inplace(std::span<cplx> data) { transform(data, true); }

}  // namespace fft

GridFunction::GridFunction(std::vector<cplx> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2 || !fft::is_power_of_two(samples_.size()))
    throw std::invalid_argument("grid size must be a power of two >= 2");
}

GridFunction GridFunction::sample(const TrigPoly& p, std::size_t n) {
  return GridFunction(sample_values(p, n));
}

GridFunction GridFunction::from_function(std::size_t n, const std::function<cplx(double)>& f) {
  if (n < 2 || !fft::is_power_of_two(n))
    throw std::invalid_argument("grid size must be a power of two >= 2");
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = f(two_pi * static_cast<double>(j) / static_cast<double>(n));
  return GridFunction(std::move(v));
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const auto& s : samples_) m = std::max(m, std::abs(s));
  return m;
}

TrigPoly GridFunction::fourier_coeffs() const {
  const std::size_t n = size();
  std::vector<cplx> work(samples_.begin(), samples_.end());
  fft::forward_inplace(work);
  const int max_k = static_cast<int>(n / 2) - 1;
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(max_k) + 1);
  const double scale = 1.0 / static_cast<double>(n);
  for (int k = -max_k; k <= max_k; ++k) {
    const std::size_t bin = static_cast<std::size_t>((k + static_cast<int>(n)) % static_cast<int>(n));
    coeffs[static_cast<std::size_t>(k + max_k)] = work[bin] * scale;
  }
  return TrigPoly::from_coeffs(max_k, std::move(coeffs));
}

}  // namespace trigsynth
