#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "trigsynth/errors.hpp"
#include "trigsynth/sup_norm.hpp"
#include "trigsynth/synthesizer.hpp"

using namespace trigsynth;

namespace {

TargetSpec three_point_demo() {
  TargetSpec t;
  t.points = {CirclePoint(0.0), CirclePoint(two_pi / 3.0),
              CirclePoint(2.0 * two_pi / 3.0)};
  t.values = {cplx(0.4, 0.0), cplx(-0.35, 0.1), cplx(0.0, 0.45)};
  return t;
}

// Re-verifies a synthesis result against the oracle evaluation paths,
// independent of everything the certificate recomputed.
void check_result(const TrigPoly& g, const TargetSpec& target, double eps,
                  const SynthesisResult& r) {
  CHECK(r.cert.pass());
  CHECK(r.cert.n == r.n);
  const SupNormBound diff = certified_sup_norm(r.f - g);
  CHECK(diff.upper < eps);
  CHECK(oracles::grid_sup(r.f - g, 4096) < eps);
  for (std::size_t i = 0; i < target.points.size(); ++i)
    CHECK(std::abs(oracles::partial_sum(r.f, r.n, target.points[i].angle()) -
                   target.values[i]) < eps);
}

}  // namespace

TEST_CASE("target specs validate their shape") {
  TargetSpec empty;
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

  TargetSpec mismatched;
  mismatched.points = {CirclePoint(0.0)};
  CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);

  TargetSpec duplicated;
  duplicated.points = {CirclePoint(1.0), CirclePoint(1.0 + two_pi)};
  duplicated.values = {cplx(1.0), cplx(2.0)};
  CHECK_THROWS_AS(duplicated.validate(), std::invalid_argument);

  TargetSpec single;
  single.points = {CirclePoint(1.0)};
  single.values = {cplx(1.0)};
  single.validate();
  CHECK(single.min_gap() == two_pi);

  const TargetSpec demo = three_point_demo();
  demo.validate();
  CHECK(demo.min_gap() == doctest::Approx(two_pi / 3.0));
}

TEST_CASE("multi point synthesis hits a three point target") {
  const TargetSpec target = three_point_demo();
  const SynthesisResult r = multi_point_target(
      TrigPoly::zero(), target, 1.0, IndexSetSpec::all(0, 100000));
  check_result(TrigPoly::zero(), target, 1.0, r);
  // the residue audit recorded per level stays within its budget
  for (int level = 0;; ++level) {
    const auto sum_it =
        r.cert.parameters.find("audit_sum_level_" + std::to_string(level));
    if (sum_it == r.cert.parameters.end()) {
      CHECK(level == 2);  // three points peel into two levels
      break;
    }
    const double sum = std::stod(sum_it->second);
    const double bound = std::stod(
        r.cert.parameters.at("audit_bound_level_" + std::to_string(level)));
    CHECK(sum < bound);
  }
}

TEST_CASE("multi point synthesis works on top of a nonzero base") {
  oracles::Rng rng(113);
  const TrigPoly g = oracles::random_poly(rng, 6);
  TargetSpec target;
  target.points = {CirclePoint(0.7), CirclePoint(2.9), CirclePoint(5.1)};
  const double eps = 0.6;
  for (const CirclePoint& p : target.points)
    target.values.push_back(g.eval(p) + rng.in_disk(0.15 * eps));
  const SynthesisResult r =
      multi_point_target(g, target, eps, IndexSetSpec::all(0, 100000));
  CHECK(r.n >= g.degree());
  check_result(g, target, eps, r);
}

TEST_CASE("a singleton target delegates to the single point path") {
  oracles::Rng rng(127);
  const TrigPoly g = oracles::random_poly(rng, 4);
  TargetSpec target;
  target.points = {CirclePoint(1.9)};
  target.values = {g.eval(CirclePoint(1.9)) + cplx(0.1, 0.1)};
  const IndexSetSpec lambda = IndexSetSpec::all(0, 100000);
  const SynthesisResult multi = multi_point_target(g, target, 0.5, lambda);
  const SynthesisResult single =
      single_point_target(g, target.points[0], target.values[0], 0.5, lambda);
  CHECK(multi.n == single.n);
  CHECK(multi.f.degree() == single.f.degree());
  for (int k = -multi.f.degree(); k <= multi.f.degree(); ++k)
    CHECK(multi.f.coeff(k) == single.f.coeff(k));
}

TEST_CASE("values already attained by g leave g untouched") {
  oracles::Rng rng(131);
  const TrigPoly g = oracles::random_poly(rng, 9);
  TargetSpec target;
  target.points = {CirclePoint(0.5), CirclePoint(2.5), CirclePoint(4.5)};
  for (const CirclePoint& p : target.points) target.values.push_back(g.eval(p));
  const SynthesisResult r =
      multi_point_target(g, target, 0.3, IndexSetSpec::all(0, 1000));
  CHECK(r.cert.pass());
  CHECK(r.n >= g.degree());
  for (int k = -g.degree(); k <= g.degree(); ++k)
    CHECK(r.f.coeff(k) == g.coeff(k));
}

TEST_CASE("relabeling the target points still certifies the same request") {
  // the construction peels points in a data-dependent order, so permuted
  // input may synthesize a different polynomial; the guarantees must hold
  // either way
  const TargetSpec target = three_point_demo();
  TargetSpec permuted;
  permuted.points = {target.points[2], target.points[0], target.points[1]};
  permuted.values = {target.values[2], target.values[0], target.values[1]};
  const IndexSetSpec lambda = IndexSetSpec::all(0, 100000);
  const SynthesisResult a =
      multi_point_target(TrigPoly::zero(), target, 1.0, lambda);
  const SynthesisResult b =
      multi_point_target(TrigPoly::zero(), permuted, 1.0, lambda);
  check_result(TrigPoly::zero(), target, 1.0, a);
  check_result(TrigPoly::zero(), permuted, 1.0, b);
}

TEST_CASE("multi point synthesis reports infeasible budgets honestly") {
  TargetSpec target;
  target.points = {CirclePoint(0.0), CirclePoint(two_pi / 3.0),
                   CirclePoint(2.0 * two_pi / 3.0)};
  target.values = {cplx(1.0), cplx(-2.0), cplx(0.0, 3.0)};
  CHECK_THROWS_AS(multi_point_target(TrigPoly::zero(), target, 0.5,
                                     IndexSetSpec::all(0, 100000)),
                  SearchExhausted);
  // scaled into reach, the same geometry synthesizes fine
  TargetSpec scaled = target;
  for (cplx& v : scaled.values) v *= 0.05;
  const SynthesisResult ok = multi_point_target(TrigPoly::zero(), scaled, 0.5,
                                                IndexSetSpec::all(0, 100000));
  check_result(TrigPoly::zero(), scaled, 0.5, ok);
}

TEST_CASE("multi point synthesis rejects degenerate geometry and budgets") {
  TargetSpec close;
  close.points = {CirclePoint(1.0), CirclePoint(1.0 + 5e-5)};
  close.values = {cplx(0.1), cplx(0.2)};
  CHECK_THROWS_AS(multi_point_target(TrigPoly::zero(), close, 1.0,
                                     IndexSetSpec::all(0, 1000)),
                  GapTooSmall);

  const TargetSpec demo = three_point_demo();
  CHECK_THROWS_AS(multi_point_target(TrigPoly::zero(), demo, 0.0,
                                     IndexSetSpec::all(0, 1000)),
                  std::invalid_argument);
  CHECK_THROWS_AS(multi_point_target(TrigPoly::zero(), demo, -1.0,
                                     IndexSetSpec::all(0, 1000)),
                  std::invalid_argument);
}

TEST_CASE("certificates recompute their clauses from the result alone") {
  const TargetSpec target = three_point_demo();
  const double eps = 1.0;
  const SynthesisResult r = multi_point_target(
      TrigPoly::zero(), target, eps, IndexSetSpec::all(0, 100000));
  REQUIRE(r.cert.clauses.size() == 1 + target.points.size());
  for (const CertificateClause& clause : r.cert.clauses) {
    CHECK(clause.verified);
    CHECK(clause.achieved < clause.bound);
    CHECK(clause.n == r.n);
  }
  // clause 0 is the norm bound; its achieved value must match a fresh
  // certified enclosure of f - g
  const SupNormBound diff = certified_sup_norm(
      r.f, default_oversample_for_degree(r.f.degree()));
  CHECK(r.cert.clauses[0].achieved == doctest::Approx(diff.upper));
  // the attained clauses match direct partial sums
  for (std::size_t i = 0; i < target.points.size(); ++i) {
    const double direct = std::abs(
        oracles::partial_sum(r.f, r.n, target.points[i].angle()) -
        target.values[i]);
    CHECK(r.cert.clauses[i + 1].achieved == doctest::Approx(direct));
  }
}

TEST_CASE("exhaustion schedules build nested prefixes with 1/j tolerances") {
  const TargetSpec target = three_point_demo();
  const ExhaustionSchedule s =
      ExhaustionSchedule::prefixes(target, {1, 2, 3});
  REQUIRE(s.stages.size() == 3);
  REQUIRE(s.tolerances.size() == 3);
  CHECK(s.tolerances[0] == 1.0);
  CHECK(s.tolerances[1] == 0.5);
  CHECK(s.tolerances[2] == doctest::Approx(1.0 / 3.0));
  CHECK(s.stages[0].points.size() == 1);
  CHECK(s.stages[2].points.size() == 3);
  s.validate();

  CHECK_THROWS_AS(ExhaustionSchedule::prefixes(target, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExhaustionSchedule::prefixes(target, {2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExhaustionSchedule::prefixes(target, {1, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExhaustionSchedule::prefixes(target, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("schedule validation rejects broken stage data") {
  const TargetSpec target = three_point_demo();
  ExhaustionSchedule s = ExhaustionSchedule::prefixes(target, {1, 2});

  ExhaustionSchedule bad_tol = s;
  bad_tol.tolerances = {0.5, 1.0};  // increasing
  CHECK_THROWS_AS(bad_tol.validate(), std::invalid_argument);

  ExhaustionSchedule zero_tol = s;
  zero_tol.tolerances = {1.0, 0.0};
  CHECK_THROWS_AS(zero_tol.validate(), std::invalid_argument);

  ExhaustionSchedule not_nested = s;
  not_nested.stages[0].points = {CirclePoint(0.123)};
  not_nested.stages[0].values = {cplx(1.0)};
  CHECK_THROWS_AS(not_nested.validate(), std::invalid_argument);

  ExhaustionSchedule value_drift = s;
  value_drift.stages[0].values = {cplx(9.0)};
  CHECK_THROWS_AS(value_drift.validate(), std::invalid_argument);
}

TEST_CASE("universal synthesis walks a seven point schedule") {
  TargetSpec target;
  for (int k = 0; k < 7; ++k) {
    target.points.emplace_back(two_pi * k / 7.0);
    target.values.push_back(std::polar(1.0, k * std::numbers::pi / 2.0));
  }
  const ExhaustionSchedule schedule =
      ExhaustionSchedule::prefixes(target, {3, 4, 5, 6, 7});
  const UniversalResult r =
      universal_function(TrigPoly::zero(), target, schedule, 1.0);

  REQUIRE(r.indices.size() == 5);
  for (std::size_t j = 1; j < r.indices.size(); ++j)
    CHECK(r.indices[j] > r.indices[j - 1]);
  CHECK(certified_sup_norm(r.f, default_oversample_for_degree(r.f.degree()))
            .upper < 1.0);

  // every stage certificate must hold for the final polynomial
  REQUIRE(r.stages.size() == 5);
  for (std::size_t j = 0; j < r.stages.size(); ++j) {
    CHECK(r.stages[j].cert.pass());
    const TargetSpec& stage = schedule.stages[j];
    double worst = 0.0;
    for (std::size_t i = 0; i < stage.points.size(); ++i)
      worst = std::max(
          worst, std::abs(oracles::partial_sum(r.f, r.indices[j],
                                               stage.points[i].angle()) -
                          stage.values[i]));
    CHECK(worst < schedule.tolerances[j]);
  }
}

TEST_CASE("a one stage schedule reduces to plain multi point synthesis") {
  const TargetSpec target = three_point_demo();
  const ExhaustionSchedule schedule =
      ExhaustionSchedule::prefixes(target, {3});
  const UniversalResult u =
      universal_function(TrigPoly::zero(), target, schedule, 1.0);
  const SynthesisResult m = multi_point_target(
      TrigPoly::zero(), target, 1.0, IndexSetSpec::all(0, 1000000));
  REQUIRE(u.indices.size() == 1);
  CHECK(u.indices[0] == m.n);
  for (int k = -m.f.degree(); k <= m.f.degree(); ++k)
    CHECK(u.f.coeff(k) == m.f.coeff(k));
  CHECK(u.stages[0].cert.pass());
}

TEST_CASE("universal synthesis on already attained values returns g") {
  oracles::Rng rng(137);
  const TrigPoly g = oracles::random_poly(rng, 5);
  TargetSpec target;
  target.points = {CirclePoint(1.0), CirclePoint(4.0)};
  for (const CirclePoint& p : target.points) target.values.push_back(g.eval(p));
  const ExhaustionSchedule schedule =
      ExhaustionSchedule::prefixes(target, {1, 2});
  const UniversalResult r = universal_function(g, target, schedule, 0.5);
  CHECK(certified_sup_norm(r.f - g).upper < 0.5);
  for (std::size_t j = 0; j < r.stages.size(); ++j) CHECK(r.stages[j].cert.pass());
}

TEST_CASE("universal synthesis surfaces an impossible norm budget") {
  const TargetSpec target = three_point_demo();
  const ExhaustionSchedule schedule =
      ExhaustionSchedule::prefixes(target, {1, 2, 3});
  try {
    universal_function(TrigPoly::zero(), target, schedule, 1e-12);
    FAIL("expected StageConflict");
  } catch (const StageConflict& e) {
    CHECK(e.stage == 1);
  }
  // a one stage schedule takes the direct path, where a vanishing tolerance
  // asks the bump for unreachable flatness
  CHECK_THROWS_AS(universal_function(TrigPoly::zero(), target,
                                     ExhaustionSchedule::prefixes(target, {3}),
                                     1e-12),
                  BudgetTooSmall);
  CHECK_THROWS_AS(universal_function(TrigPoly::zero(), target, schedule, 0.0),
                  std::invalid_argument);
}
