#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "trigsynth/gadgets.hpp"
#include "trigsynth/sup_norm.hpp"
#include "trigsynth/synthesizer.hpp"
#include "trigsynth/verify.hpp"

using namespace trigsynth;

namespace {

FiniteCompactum make_set(std::initializer_list<double> angles) {
  std::vector<CirclePoint> pts;
  for (double a : angles) pts.emplace_back(a);
  return FiniteCompactum(std::move(pts));
}

}  // namespace

TEST_CASE("finite compacta sort and deduplicate their points") {
  const FiniteCompactum f = make_set({3.0, 1.0, 1.0 + two_pi, 2.0});
  REQUIRE(f.size() == 3);
  CHECK(f.points()[0].angle() == 1.0);
  CHECK(f.points()[1].angle() == 2.0);
  CHECK(f.points()[2].angle() == 3.0);
  CHECK_THROWS_AS(FiniteCompactum({}), std::invalid_argument);
}

TEST_CASE("hausdorff distance on hand-checked pairs") {
  CHECK(hausdorff_distance(make_set({0.0}), make_set({0.0})) == 0.0);
  CHECK(hausdorff_distance(make_set({0.0}), make_set({std::numbers::pi})) ==
        doctest::Approx(std::numbers::pi));
  CHECK(hausdorff_distance(make_set({0.0}),
                           make_set({0.0, std::numbers::pi / 2.0})) ==
        doctest::Approx(std::numbers::pi / 2.0));
  CHECK(hausdorff_distance(make_set({0.1}), make_set({two_pi - 0.1})) ==
        doctest::Approx(0.2));
}

TEST_CASE("hausdorff distance satisfies the metric axioms") {
  oracles::Rng rng(139);
  for (int i = 0; i < 300; ++i) {
    std::vector<CirclePoint> a, b, c;
    for (int j = 0, na = rng.uniform_int(1, 5); j < na; ++j)
      a.emplace_back(rng.range(0.0, two_pi));
    for (int j = 0, nb = rng.uniform_int(1, 5); j < nb; ++j)
      b.emplace_back(rng.range(0.0, two_pi));
    for (int j = 0, nc = rng.uniform_int(1, 5); j < nc; ++j)
      c.emplace_back(rng.range(0.0, two_pi));
    const FiniteCompactum A(a), B(b), C(c);
    const double ab = hausdorff_distance(A, B);
    const double bc = hausdorff_distance(B, C);
    const double ac = hausdorff_distance(A, C);
    CHECK(ab >= 0.0);
    CHECK(ab == hausdorff_distance(B, A));
    CHECK(ac <= ab + bc + 1e-12);
    if (ab == 0.0) {
      REQUIRE(A.size() == B.size());
      for (std::size_t j = 0; j < A.size(); ++j)
        CHECK(A.points()[j] == B.points()[j]);
    }
  }
}

TEST_CASE("sup norms over nearby compacta differ by at most the Bernstein bound") {
  oracles::Rng rng(149);
  for (int i = 0; i < 60; ++i) {
    const TrigPoly p = oracles::random_poly(rng, 20);
    std::vector<CirclePoint> base, moved;
    const int m = rng.uniform_int(2, 6);
    for (int j = 0; j < m; ++j) {
      const double t = rng.range(0.0, two_pi);
      base.emplace_back(t);
      moved.emplace_back(t + rng.range(-0.05, 0.05));
    }
    const FiniteCompactum E1(base), E2(moved);
    double sup1 = 0.0, sup2 = 0.0;
    for (const CirclePoint& t : E1.points())
      sup1 = std::max(sup1, std::abs(oracles::eval(p, t.angle())));
    for (const CirclePoint& t : E2.points())
      sup2 = std::max(sup2, std::abs(oracles::eval(p, t.angle())));
    const double d = hausdorff_distance(E1, E2);
    const double norm = certified_sup_norm(p).upper;
    CHECK(std::fabs(sup1 - sup2) <= p.degree() * norm * d + 1e-9);
  }
}

TEST_CASE("localization residues vanish for the zero function") {
  BumpSpec spec;
  spec.ones_region = {Arc(CirclePoint(2.0), 1.0)};
  spec.zeros_region = {Arc(CirclePoint(5.5), 0.8)};
  const TrigPoly phi = bump(spec).phi;
  const auto rows = localization_report(TrigPoly::zero(), phi,
                                        make_set({2.2, 2.6}), CirclePoint(5.9),
                                        {0, 4, 16});
  REQUIRE(rows.size() == 3);
  for (const LocalizationRow& row : rows) {
    CHECK(row.drift_on_set == 0.0);
    CHECK(row.leak_at_split == 0.0);
    CHECK(row.drift_at_split == 0.0);
    CHECK(row.leak_on_set == 0.0);
  }
}

TEST_CASE("constant bumps zero out the residues on their flat side") {
  oracles::Rng rng(151);
  const TrigPoly u = oracles::random_poly(rng, 12);
  const FiniteCompactum F = make_set({1.0, 3.0});
  const CirclePoint t0(5.0);
  // phi = 1: multiplying by the bump is the identity on the set side, and
  // nothing remains of u (1 - phi) anywhere
  for (const LocalizationRow& row :
       localization_report(u, TrigPoly::constant(1.0), F, t0, {2, 8, 20})) {
    CHECK(row.drift_on_set < 1e-12);
    CHECK(row.leak_on_set < 1e-12);
  }
  // phi = 0: the mirror image around the split point
  for (const LocalizationRow& row :
       localization_report(u, TrigPoly::constant(0.0), F, t0, {2, 8, 20})) {
    CHECK(row.leak_at_split < 1e-12);
    CHECK(row.drift_at_split < 1e-12);
  }
}

TEST_CASE("past the product degree the residues settle at the bump flatness") {
  oracles::Rng rng(157);
  const TrigPoly u = oracles::random_real_poly(rng, 20);
  BumpSpec spec;
  spec.ones_region = {Arc(CirclePoint(0.8), 1.2)};
  spec.zeros_region = {Arc(CirclePoint(4.0), 1.0)};
  spec.flatness = 1e-4;
  const BumpResult b = bump(spec);
  const FiniteCompactum F = make_set({1.0, 1.4, 1.9});
  const CirclePoint t0(4.5);
  const int settled = u.degree() + b.phi.degree();
  const auto rows = localization_report(u, b.phi, F, t0, {settled});
  REQUIRE(rows.size() == 1);
  const double scale = certified_sup_norm(u).upper;
  // at full order s_n(u phi) = u phi exactly, so only the plateau error is
  // left; the factor 2 covers the gap between the bump's sampled residue
  // and its continuum maximum
  const double cap = 2.0 * scale * b.flatness_achieved + 1e-12;
  CHECK(rows[0].drift_on_set <= cap);
  CHECK(rows[0].leak_at_split <= cap);
  CHECK(rows[0].drift_at_split <= cap);
  CHECK(rows[0].leak_on_set <= cap);
}

TEST_CASE("localization csv lists one row per index") {
  const auto rows = localization_report(
      TrigPoly::harmonic(1), TrigPoly::constant(1.0), make_set({0.5}),
      CirclePoint(3.0), {1, 2});
  const std::string csv = localization_csv(rows);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,drift_on_set,leak_at_split,drift_at_split,leak_on_set");
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  CHECK(count == 2);
  CHECK(localization_csv(rows) == csv);
}

TEST_CASE("return report validates its inputs") {
  const TrigPoly f = TrigPoly::harmonic(2);
  CHECK_THROWS_AS(carleson_return_report(f, {}, 64, {0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(carleson_return_report(f, {4, 4}, 64, {0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(carleson_return_report(f, {4, 2}, 64, {0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(carleson_return_report(f, {-1, 4}, 64, {0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(carleson_return_report(f, {2, 4}, 0, {0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(carleson_return_report(f, {2, 4}, 64, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(carleson_return_report(f, {2, 4}, 64, {0.5, -0.1}),
                  std::invalid_argument);
}

TEST_CASE("indices past the degree return exactly") {
  oracles::Rng rng(163);
  const TrigPoly f = oracles::random_poly(rng, 10);
  const ReturnReport r =
      carleson_return_report(f, {10, 20, 40}, 256, {0.5, 0.1});
  CHECK(r.grid == 256);
  REQUIRE(r.best_residual.size() == 256);
  for (double v : r.best_residual) CHECK(v < 1e-10);
  for (const auto& row : r.densities)
    for (double d : row) CHECK(d == 1.0);
}

TEST_CASE("return densities improve with more indices and looser thresholds") {
  oracles::Rng rng(167);
  const TrigPoly f = oracles::random_poly(rng, 24);
  const std::vector<double> thresholds = default_return_thresholds();
  REQUIRE(thresholds.size() == 10);
  CHECK(thresholds[0] == 1.0);
  CHECK(thresholds[9] == doctest::Approx(0.1));
  const ReturnReport r =
      carleson_return_report(f, {2, 6, 12, 24}, 512, thresholds);
  REQUIRE(r.densities.size() == 4);
  for (std::size_t m = 0; m < r.densities.size(); ++m) {
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      const double d = r.densities[m][k];
      CHECK(d >= 0.0);
      CHECK(d <= 1.0);
      if (m > 0) CHECK(d >= r.densities[m - 1][k]);     // more indices help
      if (k > 0) CHECK(d <= r.densities[m][k - 1]);     // tighter cut hurts
    }
  }
  // the last index reaches the degree, so the final row is all ones
  for (double d : r.densities.back()) CHECK(d == 1.0);
}

TEST_CASE("return report serializations are deterministic") {
  const TrigPoly f = TrigPoly::harmonic(3, cplx(0.4, 0.2));
  const ReturnReport r = carleson_return_report(f, {1, 3}, 64, {0.5, 0.25});
  const std::string csv = return_report_csv(r);
  const std::string json = return_report_summary_json(r);
  CHECK(csv == return_report_csv(r));
  CHECK(json == return_report_summary_json(r));
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "index,t,best_residual");
  int count = 0;
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  CHECK(count == 64);
  CHECK(json.find("\"grid\": 64") != std::string::npos);
}

TEST_CASE("universality report finds the function inside its own sums") {
  oracles::Rng rng(173);
  const TrigPoly f = oracles::random_poly(rng, 15);
  const FiniteCompactum E = make_set({0.3, 1.7, 3.3, 5.2});
  const auto rows = uniform_universality_report(f, E, {f}, 40);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].entry == 0);
  CHECK(rows[0].best_error < 1e-12);
  CHECK(rows[0].best_n <= 15);
}

TEST_CASE("universality report scans every dictionary entry") {
  const TrigPoly f = TrigPoly::harmonic(1) + TrigPoly::constant(0.3);
  const FiniteCompactum E = make_set({0.0, 2.0});
  std::vector<TrigPoly> dictionary = {TrigPoly::constant(0.3),
                                      TrigPoly::harmonic(5),
                                      TrigPoly::zero()};
  const auto rows = uniform_universality_report(f, E, dictionary, 8);
  REQUIRE(rows.size() == 3);
  // s_0 f is the constant 0.3, matching the first entry exactly
  CHECK(rows[0].best_error < 1e-14);
  CHECK(rows[0].best_n == 0);
  for (const auto& row : rows) {
    CHECK(row.best_n >= 0);
    CHECK(row.best_n <= 8);
    CHECK(row.best_error >= 0.0);
  }
  const std::string csv = universality_csv(rows);
  CHECK(csv.find("entry,best_error,best_n") == 0);
}

TEST_CASE("multi point synthesis toward a dictionary entry shows up in the report") {
  TargetSpec target;
  target.points = {CirclePoint(1.0), CirclePoint(3.0), CirclePoint(5.0)};
  const TrigPoly q = TrigPoly::constant(cplx(0.2, -0.1));
  for (const CirclePoint& p : target.points) target.values.push_back(q.eval(p));
  const SynthesisResult sr = multi_point_target(
      TrigPoly::zero(), target, 0.4, IndexSetSpec::all(0, 100000));
  const FiniteCompactum E(target.points);
  const auto rows =
      uniform_universality_report(sr.f, E, {q}, sr.f.degree());
  REQUIRE(rows.size() == 1);
  // at n = sr.n the partial sums hit the targets within the synthesis
  // tolerance, so the best error over all n can only be smaller
  CHECK(rows[0].best_error < 0.4);
  CHECK(rows[0].best_n <= sr.f.degree());
}
