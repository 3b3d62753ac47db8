#include "trigsynth/synthesizer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "trigsynth/errors.hpp"
#include "trigsynth/kernels.hpp"
#include "trigsynth/serialization.hpp"
#include "trigsynth/sup_norm.hpp"

namespace trigsynth {

void TargetSpec::validate() const {
  if (points.empty()) throw std::invalid_argument("target set is empty");
  if (points.size() != values.size())
    throw std::invalid_argument("target needs one value per point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("target points must be distinct");
}

double TargetSpec::min_gap() const {
  double best = two_pi;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      best = std::min(best, circle_distance(points[i], points[j]));
  return best;
}

namespace {

// Min pairwise distance below this makes bumps infeasibly sharp.
constexpr double kMinGap = 1e-4;

// Norm budget split per level: the recursive part keeps kShareU, the
// split-point gadget keeps kShareV.  Together with phi in [0, 1] this keeps
// every level's construction at 0.8 of its budget, leaving room for the
// Bernstein correction in the certificate.
constexpr double kShareU = 0.5;
constexpr double kShareV = 0.3;

struct Level {
  CirclePoint t0{0.0};             // split point of this level
  std::vector<CirclePoint> rest;   // remaining points, handled deeper
  std::vector<cplx> rest_targets;  // target offsets on rest
  cplx t0_target;
  TrigPoly phi;   // ~1 near rest, ~0 near t0
  TrigPoly psi;   // 1 - phi
  double tau = 0.0;       // residue threshold for this level
  double v_budget = 0.0;  // norm budget of the split-point gadget
};

std::size_t widest_split(const std::vector<CirclePoint>& pts) {
  std::size_t best = 0;
  double best_gap = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double gap = two_pi;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) gap = std::min(gap, circle_distance(pts[i], pts[j]));
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

Certificate finish_certificate(const TrigPoly& f, const TrigPoly& g, int n,
                               const TargetSpec& target, double eps,
                               const IndexSetSpec& lambda) {
  Certificate cert;
  cert.n = n;
  cert.parameters["eps"] = format_double(eps);
  cert.parameters["points"] = std::to_string(target.points.size());
  cert.parameters["n_min"] = std::to_string(lambda.n_min());
  cert.parameters["n_cap"] = std::to_string(lambda.n_cap());
  const TrigPoly diff = f - g;
  cert.add_clause(
      "norm: ||f - g|| < eps", eps,
      certified_sup_norm(diff, default_oversample_for_degree(diff.degree()))
          .upper,
      n);
  for (std::size_t i = 0; i < target.points.size(); ++i)
    cert.add_clause("attained at point " + std::to_string(i) +
                        ": |s_n f(t_i) - h_i| < eps",
                    eps,
                    std::abs(f.partial_sum_at(n, target.points[i].angle()) -
                             target.values[i]),
                    n);
  return cert;
}

}  // namespace

SynthesisResult multi_point_target(const TrigPoly& g, const TargetSpec& target,
                                   double eps, const IndexSetSpec& lambda) {
  target.validate();
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("eps must be positive and finite");
  if (target.points.size() == 1)
    return single_point_target(g, target.points[0], target.values[0], eps,
                               lambda);
  if (target.min_gap() < kMinGap)
    throw GapTooSmall("target points are closer than the feasibility floor " +
                      format_double(kMinGap));

  std::vector<cplx> offsets(target.points.size());
  double max_offset = 0.0;
  double value_scale = 1.0;
  for (std::size_t i = 0; i < target.points.size(); ++i) {
    offsets[i] = target.values[i] - g.eval(target.points[i]);
    max_offset = std::max(max_offset, std::abs(offsets[i]));
    value_scale = std::max(value_scale, std::abs(target.values[i]));
  }

  const int floor_n = std::max(lambda.n_min(), g.degree());
  if (max_offset <= 1e-13 * value_scale) {
    const std::optional<int> n = lambda.first_admissible(floor_n);
    if (!n) throw SearchExhausted("no admissible index at or above deg g");
    return SynthesisResult{g, *n,
                           finish_certificate(g, g, *n, target, eps, lambda)};
  }

  // Peel one split point per level; the last remaining point is the base.
  std::vector<Level> levels;
  std::vector<CirclePoint> pts = target.points;
  std::vector<cplx> vals = offsets;
  double budget = eps;
  double tau = eps / 3.0;
  while (pts.size() >= 2) {
    const std::size_t split = widest_split(pts);
    Level lev;
    lev.t0 = pts[split];
    lev.t0_target = vals[split];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == split) continue;
      lev.rest.push_back(pts[i]);
      lev.rest_targets.push_back(vals[i]);
    }
    double gap = two_pi;
    for (const CirclePoint& p : lev.rest)
      gap = std::min(gap, circle_distance(lev.t0, p));
    const double radius = 0.25 * gap;
    BumpSpec bs;
    for (const CirclePoint& p : lev.rest)
      bs.ones_region.push_back(Arc(CirclePoint(p.angle() - radius), 2 * radius));
    bs.zeros_region.push_back(
        Arc(CirclePoint(lev.t0.angle() - radius), 2 * radius));
    bs.flatness = std::min(0.02, tau / 8.0);
    bs.degree_budget = 1 << 20;
    BumpResult br = bump(bs);
    lev.phi = std::move(br.phi);
    lev.psi = TrigPoly::constant(1.0) - lev.phi;
    lev.tau = tau;
    lev.v_budget = kShareV * budget;
    pts = lev.rest;
    vals = lev.rest_targets;
    levels.push_back(std::move(lev));
    budget *= kShareU;
    tau /= 3.0;
  }
  const CirclePoint base_point = pts[0];
  const cplx base_target = vals[0];
  const double base_budget = budget;

  for (std::optional<int> cur = lambda.first_admissible(floor_n); cur;
       cur = lambda.next_admissible(*cur)) {
    const int n = *cur;

    // The profile gain never exceeds L_n, so candidates whose Lebesgue
    // bound already falls short of any scaling gate are skipped without
    // building anything.
    const double gain_cap = lebesgue_upper_bound(n);
    if (std::abs(base_target) * (1.0 + 1e-6) > gain_cap * base_budget)
      continue;
    bool plausible = true;
    for (const Level& lev : levels)
      if (std::abs(lev.t0_target) * (1.0 + 1e-6) > gain_cap * lev.v_budget) {
        plausible = false;
        break;
      }
    if (!plausible) continue;

    const TrigPoly profile = correlation_profile(n);
    const double gain = correlation_gain(profile, n);
    if (gain <= 0.0) continue;
    if (std::abs(base_target) * (1.0 + 1e-6) > gain * base_budget) continue;
    bool gates = true;
    for (const Level& lev : levels)
      if (std::abs(lev.t0_target) * (1.0 + 1e-6) > gain * lev.v_budget) {
        gates = false;
        break;
      }
    if (!gates) continue;

    TrigPoly u =
        profile.translate(base_point.angle()) * (base_target / gain);
    std::vector<double> audits(levels.size(), 0.0);
    bool ok = true;
    for (std::size_t ridx = levels.size(); ridx-- > 0 && ok;) {
      const Level& lev = levels[ridx];
      const TrigPoly v =
          profile.translate(lev.t0.angle()) * (lev.t0_target / gain);
      const TrigPoly uphi = u * lev.phi;
      const TrigPoly vpsi = v * lev.psi;
      const double t0a = lev.t0.angle();
      double r1 = 0.0;
      double r4 = 0.0;
      double uq = 0.0;
      for (std::size_t i = 0; i < lev.rest.size(); ++i) {
        const double t = lev.rest[i].angle();
        const cplx su = u.partial_sum_at(n, t);
        r1 = std::max(r1, std::abs(uphi.partial_sum_at(n, t) - su));
        r4 = std::max(r4, std::abs(vpsi.partial_sum_at(n, t)));
        uq = std::max(uq, std::abs(su - lev.rest_targets[i]));
      }
      const double r2 = std::abs(uphi.partial_sum_at(n, t0a));
      const double r3 = std::abs(vpsi.partial_sum_at(n, t0a) -
                                 v.partial_sum_at(n, t0a));
      const double audit = r1 + r4 + uq;
      if (r1 >= lev.tau || r2 >= lev.tau || r3 >= lev.tau || r4 >= lev.tau ||
          audit >= 3.0 * lev.tau) {
        ok = false;
        break;
      }
      audits[ridx] = audit;
      u = uphi + vpsi;
    }
    if (!ok) continue;

    const TrigPoly f = u + g;
    Certificate cert = finish_certificate(f, g, n, target, eps, lambda);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      cert.parameters["audit_sum_level_" + std::to_string(i)] =
          format_double(audits[i]);
      cert.parameters["audit_bound_level_" + std::to_string(i)] =
          format_double(3.0 * levels[i].tau);
    }
    return SynthesisResult{f, n, std::move(cert)};
  }
  throw SearchExhausted(
      "no admissible index passes every localization residue within the cap " +
      std::to_string(lambda.n_cap()));
}

ExhaustionSchedule ExhaustionSchedule::prefixes(const TargetSpec& final_stage,
                                                const std::vector<int>& sizes) {
  final_stage.validate();
  if (sizes.empty()) throw std::invalid_argument("schedule needs stages");
  ExhaustionSchedule sched;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    const int size = sizes[j];
    if (size < 1 || static_cast<std::size_t>(size) > final_stage.points.size())
      throw std::invalid_argument("stage size out of range");
    if (j > 0 && size < sizes[j - 1])
      throw std::invalid_argument("stage sizes must be nondecreasing");
    TargetSpec stage;
    stage.points.assign(final_stage.points.begin(),
                        final_stage.points.begin() + size);
    stage.values.assign(final_stage.values.begin(),
                        final_stage.values.begin() + size);
    sched.stages.push_back(std::move(stage));
    sched.tolerances.push_back(1.0 / static_cast<double>(j + 1));
  }
  return sched;
}

void ExhaustionSchedule::validate() const {
  if (stages.empty()) throw std::invalid_argument("schedule needs stages");
  if (tolerances.size() != stages.size())
    throw std::invalid_argument("schedule needs one tolerance per stage");
  for (std::size_t j = 0; j < stages.size(); ++j) {
    stages[j].validate();
    if (!(tolerances[j] > 0.0))
      throw std::invalid_argument("tolerances must be positive");
    if (j > 0 && tolerances[j] > tolerances[j - 1])
      throw std::invalid_argument("tolerances must be nonincreasing");
  }
  for (std::size_t j = 0; j + 1 < stages.size(); ++j) {
    const TargetSpec& small = stages[j];
    const TargetSpec& big = stages[j + 1];
    for (std::size_t i = 0; i < small.points.size(); ++i) {
      bool found = false;
      for (std::size_t k = 0; k < big.points.size(); ++k) {
        if (small.points[i] == big.points[k]) {
          if (small.values[i] != big.values[k])
            throw std::invalid_argument(
                "stage values disagree on a shared point");
          found = true;
          break;
        }
      }
      if (!found)
        throw std::invalid_argument("stages must be nested point sets");
    }
  }
}

namespace {

cplx lookup_value(const TargetSpec& h_values, CirclePoint p) {
  for (std::size_t i = 0; i < h_values.points.size(); ++i)
    if (h_values.points[i] == p) return h_values.values[i];
  throw std::invalid_argument("stage point missing from the final value map");
}

}  // namespace

UniversalResult universal_function(const TrigPoly& g, const TargetSpec& h_values,
                                   const ExhaustionSchedule& schedule,
                                   double norm_budget) {
  h_values.validate();
  schedule.validate();
  if (!(norm_budget > 0.0) || !std::isfinite(norm_budget))
    throw std::invalid_argument("norm budget must be positive and finite");
  const int J = static_cast<int>(schedule.stages.size());

  // A single stage is exactly the finite-target problem; delegating keeps
  // the one-stage result identical to multi_point_target's.
  if (J == 1) {
    TargetSpec resolved;
    resolved.points = schedule.stages[0].points;
    for (const CirclePoint p : resolved.points)
      resolved.values.push_back(lookup_value(h_values, p));
    const double eps = std::min(schedule.tolerances[0], norm_budget);
    SynthesisResult sr =
        multi_point_target(g, resolved, eps, IndexSetSpec::all(0, 1000000));
    UniversalResult out;
    out.f = sr.f;
    out.indices = {sr.n};
    StageRecord rec;
    rec.stage = 1;
    rec.n = sr.n;
    const TrigPoly corr = sr.f - g;
    rec.norm_added =
        corr.is_zero()
            ? 0.0
            : certified_sup_norm(corr,
                                 default_oversample_for_degree(corr.degree()))
                  .upper;
    rec.cert = std::move(sr.cert);
    out.stages.push_back(std::move(rec));
    return out;
  }

  TrigPoly f = g;
  int n_prev = g.degree();
  std::vector<int> indices;
  std::vector<TrigPoly> corrections;
  std::vector<double> shrinks;
  std::vector<int> peak_orders;

  for (int j = 1; j <= J; ++j) {
    const TargetSpec& stage = schedule.stages[static_cast<std::size_t>(j - 1)];
    const double tol = schedule.tolerances[static_cast<std::size_t>(j - 1)];
    const std::size_t m = stage.points.size();
    std::vector<cplx> h(m);
    std::vector<cplx> desired(m);
    double maxdiff = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      h[i] = lookup_value(h_values, stage.points[i]);
      maxdiff = std::max(maxdiff, std::abs(h[i] - g.eval(stage.points[i])));
    }
    const double shrink =
        maxdiff == 0.0 ? 0.0 : std::min(0.5, tol / (2.0 * maxdiff));
    double max_jump = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const cplx gv = g.eval(stage.points[i]);
      desired[i] = h[i] + shrink * (gv - h[i]);
      max_jump = std::max(max_jump, std::abs(desired[i] - gv));
    }
    if (max_jump >= 0.98 * norm_budget)
      throw StageConflict(
          j, "stage values sit farther from g than the norm budget allows");

    const double delta = std::min(stage.min_gap(), std::numbers::pi);
    int w = std::max(8, static_cast<int>(std::ceil(31.6 / std::sin(0.5 * delta))));
    constexpr int kAttempts = 4;
    bool placed = false;
    for (int attempt = 0; attempt < kAttempts && !placed; ++attempt, w *= 2) {
      const int K = n_prev + 2 * w - 1;
      const TrigPoly peak = jackson_peak(w);
      Eigen::MatrixXcd A(m, m);
      Eigen::VectorXcd beta(m);
      for (std::size_t i = 0; i < m; ++i) {
        beta(static_cast<Eigen::Index>(i)) =
            desired[i] - f.eval(stage.points[i]);
        for (std::size_t k = 0; k < m; ++k) {
          const double d = stage.points[i].angle() - stage.points[k].angle();
          A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
              std::polar(1.0, K * d) * peak.eval(d);
        }
      }
      const Eigen::VectorXcd alpha = A.partialPivLu().solve(beta);
      const double resid = (A * alpha - beta).cwiseAbs().maxCoeff();
      double beta_scale = 1.0;
      for (std::size_t i = 0; i < m; ++i)
        beta_scale =
            std::max(beta_scale, std::abs(beta(static_cast<Eigen::Index>(i))));
      if (resid > 1e-10 * beta_scale) continue;

      TrigPoly p = TrigPoly::zero();
      for (std::size_t k = 0; k < m; ++k) {
        const double tk = stage.points[k].angle();
        const TrigPoly block =
            peak.translate(tk).modulate(K) * std::polar(1.0, -K * tk);
        p = p + block * alpha(static_cast<Eigen::Index>(k));
      }
      const TrigPoly candidate = f + p;
      const TrigPoly accum = candidate - g;
      const double upper =
          certified_sup_norm(accum,
                             default_oversample_for_degree(accum.degree()))
              .upper;
      if (upper >= norm_budget) continue;

      f = candidate;
      n_prev = K + 2 * w - 2;
      indices.push_back(n_prev);
      corrections.push_back(std::move(p));
      shrinks.push_back(shrink);
      peak_orders.push_back(w);
      placed = true;
    }
    if (!placed)
      throw StageConflict(j,
                          "stage correction cannot fit the norm budget even "
                          "with the sharpest retried peaks");
  }

  const TrigPoly total = f - g;
  const double final_upper =
      certified_sup_norm(total, default_oversample_for_degree(total.degree()))
          .upper;
  UniversalResult out;
  out.f = f;
  out.indices = indices;
  for (int j = 1; j <= J; ++j) {
    const TargetSpec& stage = schedule.stages[static_cast<std::size_t>(j - 1)];
    const double tol = schedule.tolerances[static_cast<std::size_t>(j - 1)];
    const int nj = indices[static_cast<std::size_t>(j - 1)];
    double attained = 0.0;
    for (std::size_t i = 0; i < stage.points.size(); ++i)
      attained = std::max(
          attained, std::abs(f.partial_sum_at(nj, stage.points[i].angle()) -
                             lookup_value(h_values, stage.points[i])));
    StageRecord rec;
    rec.stage = j;
    rec.n = nj;
    const TrigPoly& p = corrections[static_cast<std::size_t>(j - 1)];
    rec.norm_added =
        p.is_zero()
            ? 0.0
            : certified_sup_norm(p, default_oversample_for_degree(p.degree()))
                  .upper;
    rec.cert.n = nj;
    rec.cert.parameters["stage"] = std::to_string(j);
    rec.cert.parameters["shrink"] =
        format_double(shrinks[static_cast<std::size_t>(j - 1)]);
    rec.cert.parameters["peak_order"] =
        std::to_string(peak_orders[static_cast<std::size_t>(j - 1)]);
    rec.cert.add_clause("stage attained: max_E |s_n f - h| < tol", tol,
                        attained, nj);
    rec.cert.add_clause("norm: ||f - g|| < budget", norm_budget, final_upper,
                        nj);
    out.stages.push_back(std::move(rec));
  }
  return out;
}

}  // namespace trigsynth
