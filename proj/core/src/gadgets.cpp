#include "trigsynth/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "trigsynth/errors.hpp"
#include "trigsynth/grid.hpp"
#include "trigsynth/kernels.hpp"
#include "trigsynth/serialization.hpp"
#include "trigsynth/sup_norm.hpp"

namespace trigsynth {

namespace {

// Forward (counterclockwise) distance from x to y, in [0, 2pi).
double fwd(double x, double y) {
  double d = std::fmod(y - x, two_pi);
  if (d < 0.0) d += two_pi;
  return d;
}

}  // namespace

Arc::Arc(CirclePoint start_point, double arc_length)
    : start(start_point.angle()), length(arc_length) {
  if (!(arc_length >= 0.0) || arc_length > two_pi)
    throw std::invalid_argument("arc length must lie in [0, 2pi]");
}

bool Arc::contains(double angle) const {
  return fwd(start, CirclePoint(angle).angle()) <= length;
}

namespace {

// Construction margin paired with the certification oversample, so the
// certified upper bound of the scaled profile clears delta strictly even
// after the Bernstein correction.
double construction_margin(int oversample) {
  if (oversample >= 64) return 0.92;
  if (oversample >= 16) return 0.85;
  return 0.80;
}

double scaled_gain(int n) {
  const double margin =
      construction_margin(default_oversample_for_degree(8 * n));
  return margin * correlation_gain(correlation_profile(n), n);
}

// The gain never exceeds L_n (the profile has sup norm at most 1), so a
// candidate whose Lebesgue bound already falls short is skipped without
// building the profile.
bool gain_possibly_sufficient(int n, double needed) {
  const double margin =
      construction_margin(default_oversample_for_degree(8 * n));
  return margin * lebesgue_upper_bound(n) >= needed;
}

}  // namespace

TrigPoly correlation_profile(int n) {
  if (n < 0) throw std::invalid_argument("profile order must be >= 0");
  const int m = 8 * n;
  const std::size_t grid =
      fft::next_power_of_two(4 * static_cast<std::size_t>(m) + 4);
  std::vector<cplx> samples(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(grid);
    samples[j] = dirichlet_eval(n, t) >= 0.0 ? 1.0 : -1.0;
  }
  return fejer_mean(GridFunction(std::move(samples)), m);
}

double correlation_gain(const TrigPoly& profile, int n) {
  cplx sum = 0.0;
  for (int k = -n; k <= n; ++k) sum += profile.coeff(k);
  return sum.real();
}

GadgetResult divergence_gadget(CirclePoint t0, double delta, double M,
                               const IndexSetSpec& lambda) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("gadget norm budget must be positive and finite");
  if (!std::isfinite(M))
    throw std::invalid_argument("gadget target magnitude must be finite");
  const std::optional<int> start = lambda.first_admissible(lambda.n_min());
  if (!start)
    throw SearchExhausted("index set has no admissible indices");
  if (M <= 0.0) return GadgetResult{TrigPoly::zero(), *start, cplx(0.0), 0.0};

  const double needed = M / delta;
  std::optional<int> found;
  std::optional<int> cur = start;
  int tested = 0;
  while (cur) {
    const int n = *cur;
    if (gain_possibly_sufficient(n, needed) && scaled_gain(n) >= needed) {
      found = n;
      break;
    }
    ++tested;
    if (tested < 64) {
      cur = lambda.next_admissible(n);
    } else {
      // Geometric ladder: the gain grows like log n, so dense scanning past
      // the first rungs only burns time.  The topmost admissible index is
      // still tested before giving up.
      const auto jump = static_cast<int>(
          std::min<double>(std::ceil(n * 1.25), lambda.n_cap()));
      std::optional<int> next = lambda.first_admissible(std::max(jump, n + 1));
      if (!next) {
        const std::optional<int> top = lambda.last_admissible();
        if (top && *top > n) next = top;
      }
      cur = next;
    }
  }
  if (!found)
    throw SearchExhausted(
        "no admissible index reaches the requested partial-sum magnitude " +
        format_double(M) + " within the cap " + std::to_string(lambda.n_cap()));

  const int n = *found;
  const double margin =
      construction_margin(default_oversample_for_degree(8 * n));
  const TrigPoly profile = correlation_profile(n);
  const TrigPoly h = (profile * cplx(delta * margin)).translate(t0.angle());
  const cplx attained = h.partial_sum_at(n, t0.angle());
  const double norm_upper =
      certified_sup_norm(h, default_oversample_for_degree(h.degree())).upper;
  return GadgetResult{h, n, attained, norm_upper};
}

TrigPoly scale_to_target(const TrigPoly& h, int n, CirclePoint t0, cplx target) {
  const cplx gain = h.partial_sum_at(n, t0.angle());
  if (std::abs(gain) <= 1e-12)
    throw DegenerateGadget("partial sum at the anchor is too small to scale");
  if (target == cplx(0.0)) return TrigPoly::zero();
  return h * (target / gain);
}

SynthesisResult single_point_target(const TrigPoly& g, CirclePoint t0, cplx c,
                                    double eps, const IndexSetSpec& lambda) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("eps must be positive and finite");
  constexpr double kAttainedTol = 1e-9;
  const cplx w0 = c - g.eval(t0);

  TrigPoly f = g;
  int n = 0;
  if (std::abs(w0) <= 1e-13 * std::max(1.0, std::abs(c))) {
    const std::optional<int> first = lambda.first_admissible(g.degree());
    if (!first)
      throw SearchExhausted("no admissible index at or above deg g");
    n = *first;
  } else {
    const GadgetResult gadget = divergence_gadget(
        t0, 0.5 * eps, std::abs(w0) * (1.0 + 1e-6),
        lambda.restricted_to_at_least(g.degree()));
    f = scale_to_target(gadget.h, gadget.n, t0, w0) + g;
    n = gadget.n;
  }

  Certificate cert;
  cert.n = n;
  cert.parameters["eps"] = format_double(eps);
  cert.parameters["t0"] = format_double(t0.angle());
  cert.parameters["c_re"] = format_double(c.real());
  cert.parameters["c_im"] = format_double(c.imag());
  cert.parameters["n_min"] = std::to_string(lambda.n_min());
  cert.parameters["n_cap"] = std::to_string(lambda.n_cap());
  const TrigPoly diff = f - g;
  cert.add_clause("norm: ||f - g|| < eps", eps,
                  certified_sup_norm(diff, default_oversample_for_degree(
                                               diff.degree()))
                      .upper,
                  n);
  cert.add_clause("attained: |s_n f(t0) - c| < tol", kAttainedTol,
                  std::abs(f.partial_sum_at(n, t0.angle()) - c), n);
  return SynthesisResult{std::move(f), n, std::move(cert)};
}

namespace {

struct LabeledArc {
  double start = 0.0;
  double length = 0.0;
  int label = 0;  // 1 for the ones region, 0 for the zeros region
};

// Union of two intersecting closed arcs; nullopt when disjoint.
std::optional<LabeledArc> merge_pair(const LabeledArc& a, const LabeledArc& b) {
  const double ab = fwd(a.start, b.start);
  const double ba = fwd(b.start, a.start);
  LabeledArc out;
  if (ab <= a.length)
    out = LabeledArc{a.start, std::max(a.length, ab + b.length), a.label};
  else if (ba <= b.length)
    out = LabeledArc{b.start, std::max(b.length, ba + a.length), a.label};
  else
    return std::nullopt;
  out.length = std::min(out.length, two_pi);
  return out;
}

std::vector<LabeledArc> merge_arcs(const std::vector<Arc>& arcs, int label) {
  std::vector<LabeledArc> merged;
  merged.reserve(arcs.size());
  for (const Arc& a : arcs) merged.push_back(LabeledArc{a.start, a.length, label});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < merged.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < merged.size() && !changed; ++j) {
        if (const auto u = merge_pair(merged[i], merged[j])) {
          merged[i] = *u;
          merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const LabeledArc& x, const LabeledArc& y) { return x.start < y.start; });
  return merged;
}

// Strictly positive gap between two disjoint closed arcs.
bool positive_gap(const LabeledArc& a, const LabeledArc& b) {
  return fwd(a.start, b.start) > a.length && fwd(b.start, a.start) > b.length;
}

// One piece of the profile: value alpha + beta * (t - u) on [u, v].
struct Segment {
  double u = 0.0;
  double v = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

cplx segment_integral(const Segment& s, int k) {
  const double len = s.v - s.u;
  if (k == 0) return s.alpha * len + 0.5 * s.beta * len * len;
  const cplx ik(0.0, static_cast<double>(k));
  const cplx eu = std::polar(1.0, -k * s.u);
  const cplx ev = std::polar(1.0, -k * s.v);
  const cplx i0 = (eu - ev) / ik;
  const cplx i1 = (i0 - len * ev) / ik;
  return s.alpha * i0 + s.beta * i1;
}

int minimal_peak_order(double radius, double eta, int degree_budget) {
  const int w_cap = std::max(1, (degree_budget + 2) / 2);
  const double goal = 0.5 * eta;
  auto sharp_enough = [&](int w) { return jackson_tail_mass(w, radius) <= goal; };
  int hi = 1;
  while (hi < w_cap && !sharp_enough(hi)) hi = std::min(2 * hi, w_cap);
  if (!sharp_enough(hi))
    throw BudgetTooSmall(
        "degree budget cannot reach the requested flatness; raise the budget");
  int lo = hi / 2;  // sharp_enough(hi) holds; everything <= lo failed or is untested
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (sharp_enough(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

BumpResult bump(const BumpSpec& spec) {
  if (!(spec.flatness > 0.0) || !(spec.flatness < 0.5))
    throw std::invalid_argument("flatness must lie in (0, 1/2)");
  if (spec.degree_budget < 1)
    throw std::invalid_argument("degree budget must be positive");
  if (spec.ones_region.empty() && spec.zeros_region.empty())
    throw std::invalid_argument("bump needs at least one marked region");
  if (spec.zeros_region.empty())
    return BumpResult{TrigPoly::constant(1.0), 0.0};
  if (spec.ones_region.empty()) return BumpResult{TrigPoly::zero(), 0.0};

  const std::vector<LabeledArc> ones = merge_arcs(spec.ones_region, 1);
  const std::vector<LabeledArc> zeros = merge_arcs(spec.zeros_region, 0);
  for (const LabeledArc& a : ones)
    for (const LabeledArc& b : zeros)
      if (!positive_gap(a, b))
        throw std::invalid_argument(
            "ones and zeros regions must be disjoint with positive gap");

  std::vector<LabeledArc> walk = ones;
  walk.insert(walk.end(), zeros.begin(), zeros.end());
  std::sort(walk.begin(), walk.end(),
            [](const LabeledArc& x, const LabeledArc& y) { return x.start < y.start; });

  double min_gap = two_pi;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const LabeledArc& cur = walk[i];
    const LabeledArc& nxt = walk[(i + 1) % walk.size()];
    if (cur.label != nxt.label)
      min_gap = std::min(min_gap, fwd(cur.start + cur.length, nxt.start));
  }
  if (min_gap < two_pi / spec.degree_budget)
    throw BudgetTooSmall("region gap is below 2pi / degree budget");

  const double radius = 0.25 * min_gap;
  const int w = minimal_peak_order(radius, spec.flatness, spec.degree_budget);
  const int degree = 2 * w - 2;

  // Piecewise-linear profile: constant on each arc, constant across
  // same-label gaps, and a linear ramp across the middle half of each
  // differing-label gap, so every marked point keeps a flat margin of at
  // least radius on both sides.
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const LabeledArc& cur = walk[i];
    const LabeledArc& nxt = walk[(i + 1) % walk.size()];
    const double u = cur.start;
    const double e = cur.start + cur.length;
    const double gap = fwd(cur.start + cur.length, nxt.start);
    const double a = static_cast<double>(cur.label);
    const double b = static_cast<double>(nxt.label);
    if (cur.length > 0.0) segments.push_back(Segment{u, e, a, 0.0});
    if (cur.label == nxt.label) {
      if (gap > 0.0) segments.push_back(Segment{e, e + gap, a, 0.0});
    } else {
      const double margin = 0.25 * gap;
      segments.push_back(Segment{e, e + margin, a, 0.0});
      segments.push_back(
          Segment{e + margin, e + gap - margin, a, (b - a) / (0.5 * gap)});
      segments.push_back(Segment{e + gap - margin, e + gap, b, 0.0});
    }
  }

  const TrigPoly peak = jackson_peak(w);
  const double peak_mass = peak.coeff(0).real();
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    cplx profile_coeff = 0.0;
    for (const Segment& s : segments) profile_coeff += segment_integral(s, k);
    profile_coeff /= two_pi;
    const cplx c = profile_coeff * (peak.coeff(k).real() / peak_mass);
    coeffs[static_cast<std::size_t>(degree + k)] = c;
    coeffs[static_cast<std::size_t>(degree - k)] = std::conj(c);
  }
  TrigPoly phi = TrigPoly::from_coeffs(degree, std::move(coeffs));

  const std::size_t grid = fft::next_power_of_two(
      std::max<std::size_t>(8192, 4 * static_cast<std::size_t>(degree) + 4));
  const std::vector<cplx> samples = sample_values(phi, grid);
  double achieved = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(grid);
    const double val = samples[j].real();
    achieved = std::max(achieved, std::max(val - 1.0, -val));
    for (const LabeledArc& a : ones)
      if (fwd(a.start, t) <= a.length)
        achieved = std::max(achieved, std::fabs(val - 1.0));
    for (const LabeledArc& a : zeros)
      if (fwd(a.start, t) <= a.length)
        achieved = std::max(achieved, std::fabs(val));
  }
  if (achieved > spec.flatness)
    throw BudgetTooSmall("achieved flatness misses the request; raise the budget");
  return BumpResult{std::move(phi), achieved};
}

}  // namespace trigsynth
