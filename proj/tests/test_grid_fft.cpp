#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "trigsynth/grid.hpp"

using namespace trigsynth;

TEST_CASE("power of two helpers") {
  CHECK(fft::is_power_of_two(1));
  CHECK(fft::is_power_of_two(2));
  CHECK(fft::is_power_of_two(1024));
  CHECK(!fft::is_power_of_two(0));
  CHECK(!fft::is_power_of_two(3));
  CHECK(!fft::is_power_of_two(1023));
  CHECK(fft::next_power_of_two(1) == 1);
  CHECK(fft::next_power_of_two(2) == 2);
  CHECK(fft::next_power_of_two(3) == 4);
  CHECK(fft::next_power_of_two(1025) == 2048);
}

TEST_CASE("fft inverts itself across sizes") {
  oracles::Rng rng(61);
  for (std::size_t n : {1u, 2u, 4u, 8u, 64u, 256u, 1024u}) {
    std::vector<cplx> data(n);
    for (auto& x : data) x = cplx(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
    std::vector<cplx> copy = data;
    fft::forward_inplace(copy);
    fft::inverse_inplace(copy);
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(copy[j] - data[j]));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("fft matches the quadratic-time dft") {
  oracles::Rng rng(67);
  for (std::size_t n : {2u, 8u, 32u, 128u}) {
    std::vector<cplx> data(n);
    for (auto& x : data) x = cplx(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
    std::vector<cplx> transformed = data;
    fft::forward_inplace(transformed);
    for (std::size_t j = 0; j < n; ++j) {
      cplx direct(0.0);
      for (std::size_t l = 0; l < n; ++l)
        direct += data[l] * std::polar(1.0, -oracles::kTwoPi *
                                                static_cast<double>(j * l) /
                                                static_cast<double>(n));
      CHECK(std::abs(transformed[j] - direct) < 1e-10);
    }
  }
}

TEST_CASE("fft rejects non power-of-two input") {
  std::vector<cplx> data(3, cplx(1.0));
  CHECK_THROWS_AS(fft::forward_inplace(data), std::invalid_argument);
  CHECK_THROWS_AS(fft::inverse_inplace(data), std::invalid_argument);
}

TEST_CASE("grid sampling recovers polynomial coefficients exactly") {
  oracles::Rng rng(71);
  for (int i = 0; i < 25; ++i) {
    const TrigPoly p = oracles::random_poly(rng, 20);
    const std::size_t n = fft::next_power_of_two(
        static_cast<std::size_t>(2 * p.degree() + 1));
    const GridFunction g = GridFunction::sample(p, n);
    const TrigPoly back = g.fourier_coeffs();
    double worst = 0.0;
    for (int k = -p.degree(); k <= p.degree(); ++k)
      worst = std::max(worst, std::abs(back.coeff(k) - p.coeff(k)));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("grid coefficients match the dft oracle") {
  oracles::Rng rng(73);
  const std::size_t n = 64;
  GridFunction g = GridFunction::from_function(n, [&rng](double) {
    return cplx(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
  });
  const TrigPoly coeffs = g.fourier_coeffs();
  const int k_max = static_cast<int>(n) / 2 - 1;
  const std::vector<cplx> reference = oracles::dft_coeffs(
      std::vector<cplx>(g.samples().begin(), g.samples().end()), k_max);
  for (int k = -k_max; k <= k_max; ++k)
    CHECK(std::abs(coeffs.coeff(k) - reference[static_cast<std::size_t>(k + k_max)]) <
          1e-12);
}

TEST_CASE("grid function basics") {
  const GridFunction g = GridFunction::from_function(
      8, [](double t) { return cplx(std::cos(t), 0.0); });
  CHECK(g.size() == 8);
  CHECK(g.t(0) == 0.0);
  CHECK(g.t(4) == doctest::Approx(std::numbers::pi));
  CHECK(g.max_abs() == doctest::Approx(1.0));
  CHECK_THROWS_AS(GridFunction({cplx(1.0), cplx(2.0), cplx(3.0)}),
                  std::invalid_argument);
}
