#include "trigsynth/sup_norm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trigsynth/grid.hpp"

namespace trigsynth {

SupNormBound certified_sup_norm(const TrigPoly& p, int oversample) {
  if (oversample < 8) throw std::invalid_argument("oversample must be >= 8");
  const int d = p.degree();
  const auto wanted = static_cast<std::size_t>(
      std::ceil(2.6 * oversample * std::max(d, 1)));
  const std::size_t n = fft::next_power_of_two(wanted);
  const std::vector<cplx> samples = sample_values(p, n);
  double lower = 0.0;
  for (const cplx& v : samples) lower = std::max(lower, std::abs(v));
  const double gap = std::numbers::pi * d / static_cast<double>(n);
  return SupNormBound{lower, lower / (1.0 - gap)};
}

int default_oversample_for_degree(int degree) {
  if (degree <= 4096) return 64;
  if (degree <= 65536) return 16;
  return 8;
}

}  // namespace trigsynth
