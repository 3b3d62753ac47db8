#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "trigsynth/circle.hpp"
#include "trigsynth/trig_poly.hpp"

using namespace trigsynth;

TEST_CASE("circle points canonicalize into [0, 2pi)") {
  CHECK(CirclePoint(0.0).angle() == 0.0);
  CHECK(CirclePoint(two_pi).angle() == 0.0);
  CHECK(CirclePoint(-1.0).angle() == doctest::Approx(two_pi - 1.0));
  CHECK(CirclePoint(3.0 * two_pi + 0.5).angle() == doctest::Approx(0.5));
  CHECK(CirclePoint(two_pi) == CirclePoint(0.0));
  CHECK(CirclePoint(1.0) < CirclePoint(2.0));
}

TEST_CASE("circle distance is geodesic and wraps") {
  CHECK(circle_distance(0.0, 0.0) == 0.0);
  CHECK(circle_distance(0.0, std::numbers::pi) ==
        doctest::Approx(std::numbers::pi));
  CHECK(circle_distance(0.1, two_pi - 0.1) == doctest::Approx(0.2));
  oracles::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.range(0.0, two_pi);
    const double b = rng.range(0.0, two_pi);
    const double d = circle_distance(a, b);
    CHECK(d == circle_distance(b, a));
    CHECK(d >= 0.0);
    CHECK(d <= std::numbers::pi + 1e-15);
  }
}

TEST_CASE("constant and harmonic polynomials carry the right coefficients") {
  const TrigPoly c = TrigPoly::constant(cplx(2.0, -1.0));
  CHECK(c.degree() == 0);
  CHECK(c.coeff(0) == cplx(2.0, -1.0));
  CHECK(c.coeff(1) == cplx(0.0));

  const TrigPoly h = TrigPoly::harmonic(-3, cplx(0.0, 1.0));
  CHECK(h.degree() == 3);
  CHECK(h.coeff(-3) == cplx(0.0, 1.0));
  CHECK(h.coeff(3) == cplx(0.0));
  CHECK(h.coeff(9) == cplx(0.0));
}

TEST_CASE("from_coeffs validates the coefficient count") {
  CHECK_THROWS_AS(TrigPoly::from_coeffs(1, {cplx(1.0)}), std::invalid_argument);
  CHECK_THROWS_AS(TrigPoly::from_coeffs(-1, {cplx(1.0)}),
                  std::invalid_argument);
  const TrigPoly p = TrigPoly::from_coeffs(1, {cplx(1.0), cplx(2.0), cplx(3.0)});
  CHECK(p.coeff(-1) == cplx(1.0));
  CHECK(p.coeff(0) == cplx(2.0));
  CHECK(p.coeff(1) == cplx(3.0));
}

TEST_CASE("evaluation matches the term-by-term oracle") {
  oracles::Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const TrigPoly p = oracles::random_poly(rng, 24);
    for (int j = 0; j < 8; ++j) {
      const double t = rng.range(0.0, two_pi);
      CHECK(std::abs(p.eval(t) - oracles::eval(p, t)) < 1e-11);
    }
  }
}

TEST_CASE("partial sums match the oracle at every order") {
  oracles::Rng rng(29);
  for (int i = 0; i < 30; ++i) {
    const TrigPoly p = oracles::random_poly(rng, 16);
    const double t = rng.range(0.0, two_pi);
    for (int n = 0; n <= p.degree() + 3; ++n)
      CHECK(std::abs(p.partial_sum_at(n, t) - oracles::partial_sum(p, n, t)) <
            1e-11);
  }
  CHECK_THROWS_AS(TrigPoly::constant(1.0).partial_sum_at(-1, 0.0),
                  std::invalid_argument);
}

TEST_CASE("partial_sum truncates coefficients verbatim") {
  oracles::Rng rng(31);
  const TrigPoly p = oracles::random_poly(rng, 12);
  const TrigPoly q = p.partial_sum(5);
  CHECK(q.degree() <= 5);
  for (int k = -5; k <= 5; ++k) CHECK(q.coeff(k) == p.coeff(k));
  CHECK(q.coeff(6) == cplx(0.0));
  const TrigPoly full = p.partial_sum(p.degree() + 10);
  for (int k = -p.degree(); k <= p.degree(); ++k)
    CHECK(full.coeff(k) == p.coeff(k));
}

TEST_CASE("modulate shifts the spectrum") {
  const TrigPoly p = TrigPoly::harmonic(2, cplx(1.0, 1.0));
  const TrigPoly q = p.modulate(5);
  CHECK(q.coeff(7) == cplx(1.0, 1.0));
  CHECK(q.coeff(2) == cplx(0.0));
  oracles::Rng rng(37);
  const TrigPoly r = oracles::random_poly(rng, 6);
  const TrigPoly m = r.modulate(-4);
  const double t = 1.234;
  CHECK(std::abs(m.eval(t) - std::polar(1.0, -4.0 * t) * r.eval(t)) < 1e-12);
}

TEST_CASE("translate moves the argument") {
  oracles::Rng rng(41);
  const TrigPoly p = oracles::random_poly(rng, 10);
  const double a = 0.7;
  const TrigPoly q = p.translate(a);
  for (int j = 0; j < 16; ++j) {
    const double t = rng.range(0.0, two_pi);
    CHECK(std::abs(q.eval(t) - p.eval(t - a)) < 1e-11);
  }
}

TEST_CASE("conjugate flips the function values") {
  oracles::Rng rng(43);
  const TrigPoly p = oracles::random_poly(rng, 8);
  const TrigPoly q = p.conjugate();
  for (int j = 0; j < 16; ++j) {
    const double t = rng.range(0.0, two_pi);
    CHECK(std::abs(q.eval(t) - std::conj(p.eval(t))) < 1e-12);
  }
}

TEST_CASE("product convolves coefficients") {
  oracles::Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    const TrigPoly a = oracles::random_poly(rng, 6);
    const TrigPoly b = oracles::random_poly(rng, 6);
    const TrigPoly ab = a * b;
    CHECK(ab.degree() == a.degree() + b.degree());
    for (int k = -ab.degree(); k <= ab.degree(); ++k) {
      cplx conv(0.0);
      for (int j = -a.degree(); j <= a.degree(); ++j)
        conv += a.coeff(j) * b.coeff(k - j);
      CHECK(std::abs(ab.coeff(k) - conv) < 1e-12);
    }
    const double t = rng.range(0.0, two_pi);
    CHECK(std::abs(ab.eval(t) - a.eval(t) * b.eval(t)) < 1e-10);
  }
}

TEST_CASE("linear operations act coefficientwise") {
  const TrigPoly a = TrigPoly::harmonic(1, 2.0);
  const TrigPoly b = TrigPoly::harmonic(-2, cplx(0.0, 1.0));
  const TrigPoly s = a + b;
  CHECK(s.coeff(1) == cplx(2.0));
  CHECK(s.coeff(-2) == cplx(0.0, 1.0));
  const TrigPoly d = s - a;
  CHECK(d.coeff(1) == cplx(0.0));
  CHECK(d.coeff(-2) == cplx(0.0, 1.0));
  const TrigPoly scaled = cplx(0.0, 2.0) * a;
  CHECK(scaled.coeff(1) == cplx(0.0, 4.0));
  CHECK((a * cplx(0.0, 2.0)).coeff(1) == cplx(0.0, 4.0));
}

TEST_CASE("realness defect separates real from complex polynomials") {
  oracles::Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const TrigPoly p = oracles::random_real_poly(rng, 12);
    CHECK(p.realness_defect() == 0.0);
    for (int j = 0; j < 4; ++j)
      CHECK(std::fabs(p.eval(rng.range(0.0, two_pi)).imag()) < 1e-11);
  }
  const TrigPoly h = TrigPoly::harmonic(1, cplx(1.0, 0.0));
  CHECK(h.realness_defect() == 1.0);
}

TEST_CASE("coefficient norms and trimming") {
  const TrigPoly p =
      TrigPoly::from_coeffs(2, {cplx(0.0), cplx(3.0), cplx(0.0), cplx(4.0),
                                cplx(0.0)});
  CHECK(p.coeff_l1() == doctest::Approx(7.0));
  CHECK(p.coeff_l2() == doctest::Approx(5.0));
  const TrigPoly t = p.trimmed();
  CHECK(t.degree() == 1);
  CHECK(t.coeff(-1) == cplx(3.0));
  CHECK(TrigPoly::zero().is_zero());
  CHECK(!p.is_zero());
  CHECK(TrigPoly::zero().trimmed().degree() == 0);
}

TEST_CASE("spectral band tracks nonzero coefficients") {
  TrigPoly p = TrigPoly::harmonic(3) + TrigPoly::harmonic(7);
  const SpectralBand band = spectral_band(p);
  CHECK(band.lo == 3);
  CHECK(band.hi == 7);
  const SpectralBand zero_band = spectral_band(TrigPoly::zero());
  CHECK(zero_band.lo == 0);
  CHECK(zero_band.hi == 0);
}

TEST_CASE("sample_values agrees with direct evaluation") {
  oracles::Rng rng(59);
  std::vector<cplx> coeffs;
  for (int k = -9; k <= 9; ++k)
    coeffs.emplace_back(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
  const TrigPoly p = TrigPoly::from_coeffs(9, std::move(coeffs));
  const std::size_t n = 32;
  const std::vector<cplx> vals = sample_values(p, n);
  REQUIRE(vals.size() == n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(n);
    CHECK(std::abs(vals[j] - oracles::eval(p, t)) < 1e-11);
  }
  CHECK_THROWS_AS(sample_values(p, 24), std::invalid_argument);
  CHECK_THROWS_AS(sample_values(p, 16), std::invalid_argument);
}
