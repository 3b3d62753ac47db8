#include "trigsynth/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "trigsynth/errors.hpp"
#include "trigsynth/gadgets.hpp"
#include "trigsynth/index_set.hpp"
#include "trigsynth/kernels.hpp"
#include "trigsynth/serialization.hpp"
#include "trigsynth/sup_norm.hpp"
#include "trigsynth/synthesizer.hpp"
#include "trigsynth/verify.hpp"

namespace trigsynth {
namespace {

// mt19937_64 is bit-stable across platforms; the explicit [0,1) mapping
// avoids the implementation-defined std distributions so that transcripts
// stay portable.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int uniform_int(int lo, int hi) {
    return std::min(hi, lo + static_cast<int>(unit() * (hi - lo + 1)));
  }
  cplx disk(double radius) {
    const double r = radius * std::sqrt(unit());
    return std::polar(r, range(0.0, two_pi));
  }

private:
  std::mt19937_64 eng_;
};

TrigPoly random_poly(Rng& rng, int max_degree) {
  const int d = rng.uniform_int(0, max_degree);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(d) + 1);
  for (cplx& c : coeffs) c = cplx(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
  return TrigPoly::from_coeffs(d, std::move(coeffs));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

double certified_upper(const TrigPoly& p) {
  return certified_sup_norm(p, default_oversample_for_degree(p.degree())).upper;
}

constexpr double kAttainedTol = 1e-9;

struct Context {
  TrigPoly f3;
  std::vector<int> indices3;
  bool have3 = false;
};

CriterionResult criterion_single_point(std::uint64_t seed) {
  CriterionResult res;
  res.id = 1;
  res.name = "single-point certificates";
  const IndexSetSpec lambda = IndexSetSpec::all(0, 100000);
  constexpr int kRuns = 100;

  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  int certified = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < kRuns; ++i) {
    const TrigPoly g = random_poly(rng, 10);
    const CirclePoint t0(rng.range(0.0, two_pi));
    const cplx c = rng.disk(10.0);
    const double eps = rng.range(0.1, 1.0);
    res.transcript += "instance " + std::to_string(i) + "\n";
    try {
      const SynthesisResult sr = single_point_target(g, t0, c, eps, lambda);
      const double norm_ub = certified_upper(sr.f - g);
      const double attained =
          std::abs(sr.f.partial_sum_at(sr.n, t0.angle()) - c);
      if (sr.cert.pass() && norm_ub < eps && attained <= kAttainedTol)
        ++certified;
      res.transcript += certificate_to_json(sr.cert);
    } catch (const SearchExhausted& ex) {
      res.transcript += std::string("SearchExhausted: ") + ex.what() + "\n";
    }
  }
  const double elapsed = seconds_since(start);
  const bool in_budget = elapsed < 120.0;
  res.pass = certified == kRuns && in_budget;
  res.detail = "certified " + std::to_string(certified) + "/" +
               std::to_string(kRuns) + " (required " + std::to_string(kRuns) +
               "); runtime within the 120s budget: " +
               (in_budget ? "yes" : "no");
  res.notes.push_back(
      "reachability ceiling: |s_n(f-g)(t0)| <= L_n*eps and L_100000 ~ 5.94, "
      "so draws with |c - g(t0)| > ~5.9*eps admit no passing index; such "
      "draws dominate the prescribed ranges, making 100/100 unattainable");

  Rng rng2(seed ^ 0xc2b2ae3d27d4eb4full);
  int feasible = 0;
  for (int i = 0; i < kRuns; ++i) {
    const TrigPoly g = random_poly(rng2, 10);
    const CirclePoint t0(rng2.range(0.0, two_pi));
    const double eps = rng2.range(0.1, 1.0);
    const cplx c = g.eval(t0) + rng2.disk(1.5 * eps);
    try {
      const SynthesisResult sr = single_point_target(g, t0, c, eps, lambda);
      const double norm_ub = certified_upper(sr.f - g);
      const double attained =
          std::abs(sr.f.partial_sum_at(sr.n, t0.angle()) - c);
      if (sr.cert.pass() && norm_ub < eps && attained <= kAttainedTol)
        ++feasible;
    } catch (const SearchExhausted&) {
    }
  }
  res.notes.push_back("same machinery on draws inside the ceiling (|c - "
                      "g(t0)| <= 1.5*eps): " +
                      std::to_string(feasible) + "/" + std::to_string(kRuns) +
                      " certified");
  res.transcript +=
      "feasible-scale certified: " + std::to_string(feasible) + "\n";
  return res;
}

CriterionResult criterion_multi_point(std::uint64_t seed) {
  CriterionResult res;
  res.id = 2;
  res.name = "multi-point certificates";
  const IndexSetSpec lambda = IndexSetSpec::all(0, 100000);
  constexpr int kRuns = 30;

  Rng rng(seed ^ 0x165667b19e3779f9ull);
  int certified = 0;
  int audits_ok = 0;
  for (int i = 0; i < kRuns; ++i) {
    const int m = 2 + i % 3;
    TargetSpec spec;
    for (;;) {
      spec.points.clear();
      for (int k = 0; k < m; ++k)
        spec.points.push_back(CirclePoint(rng.range(0.0, two_pi)));
      double gap = two_pi;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          gap = std::min(gap, circle_distance(spec.points[a], spec.points[b]));
      if (gap >= 0.3) break;
    }
    const TrigPoly g = random_poly(rng, 8);
    const double eps = rng.range(0.3, 1.0);
    spec.values.clear();
    for (int k = 0; k < m; ++k)
      spec.values.push_back(g.eval(spec.points[k]) + rng.disk(0.2 * eps));

    res.transcript += "instance " + std::to_string(i) + "\n";
    try {
      const SynthesisResult sr = multi_point_target(g, spec, eps, lambda);
      const double norm_ub = certified_upper(sr.f - g);
      double worst = 0.0;
      for (int k = 0; k < m; ++k)
        worst = std::max(worst,
                         std::abs(sr.f.partial_sum_at(
                                      sr.n, spec.points[k].angle()) -
                                  spec.values[k]));
      const bool ok = sr.cert.pass() && norm_ub < eps && worst < eps;
      if (ok) ++certified;

      bool audits = true;
      int levels = 0;
      for (;; ++levels) {
        const auto sum_it = sr.cert.parameters.find(
            "audit_sum_level_" + std::to_string(levels));
        if (sum_it == sr.cert.parameters.end()) break;
        const auto bound_it = sr.cert.parameters.find(
            "audit_bound_level_" + std::to_string(levels));
        if (bound_it == sr.cert.parameters.end() ||
            !(std::stod(sum_it->second) < std::stod(bound_it->second)))
          audits = false;
      }
      if (audits && levels == m - 1) ++audits_ok;
      res.transcript += certificate_to_json(sr.cert);
    } catch (const SearchExhausted& ex) {
      res.transcript += std::string("SearchExhausted: ") + ex.what() + "\n";
    } catch (const GapTooSmall& ex) {
      res.transcript += std::string("GapTooSmall: ") + ex.what() + "\n";
    }
  }
  res.pass = certified == kRuns && audits_ok == kRuns;
  res.detail = "certified " + std::to_string(certified) + "/" +
               std::to_string(kRuns) + "; residue audit sums within budget " +
               std::to_string(audits_ok) + "/" + std::to_string(kRuns);
  return res;
}

CriterionResult criterion_universal(Context& ctx) {
  CriterionResult res;
  res.id = 3;
  res.name = "universal schedule";

  TargetSpec final7;
  for (int k = 0; k < 7; ++k) {
    final7.points.push_back(CirclePoint(two_pi * k / 7.0));
    final7.values.push_back(std::polar(1.0, k * std::numbers::pi / 2.0));
  }
  const ExhaustionSchedule schedule =
      ExhaustionSchedule::prefixes(final7, {3, 4, 5, 6, 7});
  const TrigPoly g = TrigPoly::zero();

  try {
    const UniversalResult ur = universal_function(g, final7, schedule, 1.0);
    bool increasing = !ur.indices.empty();
    for (std::size_t j = 1; j < ur.indices.size(); ++j)
      if (ur.indices[j] <= ur.indices[j - 1]) increasing = false;
    const double norm_ub = certified_upper(ur.f);
    bool stages_ok = ur.stages.size() == schedule.stages.size();
    for (std::size_t j = 0; j < schedule.stages.size() && stages_ok; ++j) {
      const TargetSpec& stage = schedule.stages[j];
      const int nj = ur.indices[j];
      double worst = 0.0;
      for (std::size_t k = 0; k < stage.points.size(); ++k)
        worst = std::max(
            worst, std::abs(ur.f.partial_sum_at(nj, stage.points[k].angle()) -
                            stage.values[k]));
      if (!(worst < schedule.tolerances[j]) || !ur.stages[j].cert.pass())
        stages_ok = false;
    }
    res.pass = increasing && norm_ub < 1.0 && stages_ok;
    res.detail = "stages re-verified on the final polynomial: " +
                 std::string(stages_ok ? "5/5" : "failed") +
                 "; ||f|| upper bound " + format_double(norm_ub) +
                 " < 1: " + (norm_ub < 1.0 ? "yes" : "no") +
                 "; indices strictly increasing: " +
                 (increasing ? "yes" : "no");
    res.transcript += "indices:";
    for (const int n : ur.indices) res.transcript += " " + std::to_string(n);
    res.transcript += "\nnorm_upper: " + format_double(norm_ub) + "\n";
    for (const StageRecord& rec : ur.stages)
      res.transcript += certificate_to_json(rec.cert);
    ctx.f3 = ur.f;
    ctx.indices3 = ur.indices;
    ctx.have3 = true;
  } catch (const StageConflict& ex) {
    res.pass = false;
    res.detail = std::string("stage conflict: ") + ex.what();
    res.transcript += std::string("StageConflict: ") + ex.what() + "\n";
  } catch (const SearchExhausted& ex) {
    res.pass = false;
    res.detail = std::string("search exhausted: ") + ex.what();
    res.transcript += std::string("SearchExhausted: ") + ex.what() + "\n";
  }
  return res;
}

CriterionResult criterion_kernel_facts() {
  CriterionResult res;
  res.id = 4;
  res.name = "kernel facts";

  bool peak_exact = true;
  for (int n = 0; n <= 1000; ++n)
    if (dirichlet_eval(n, 0.0) != 2.0 * n + 1.0) peak_exact = false;

  const double l0 = lebesgue_constant(0);
  const bool l0_exact = l0 == 1.0;

  const double l1 = lebesgue_constant(1);
  const double l1_closed =
      1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi;
  const double l1_err = std::fabs(l1 - l1_closed);
  const bool l1_ok = l1_err <= 1e-6;

  bool increasing = true;
  double prev = l0;
  res.transcript += "L_0 " + format_double(l0) + "\n";
  for (int n = 1; n <= 50; ++n) {
    const double ln = lebesgue_constant(n);
    if (!(ln > prev)) increasing = false;
    prev = ln;
    res.transcript += "L_" + std::to_string(n) + " " + format_double(ln) + "\n";
  }

  const double l100 = lebesgue_constant(100);
  const double log100 = std::log(100.0);
  const double ratio = l100 / log100;
  const bool ratio_ok = ratio >= 0.38 && ratio <= 0.44;
  const double detrended = (l100 - 1.2706) / log100;
  res.transcript += "L_100 " + format_double(l100) + "\n";
  res.transcript += "ratio " + format_double(ratio) + "\n";

  res.pass = peak_exact && l0_exact && l1_ok && increasing && ratio_ok;
  res.detail = std::string("D_n(0) = 2n+1 exact for n <= 1000: ") +
               (peak_exact ? "yes" : "no") +
               "; L_0 = 1 exactly: " + (l0_exact ? "yes" : "no") +
               "; |L_1 - closed form| = " + format_double(l1_err) +
               "; strictly increasing through n = 50: " +
               (increasing ? "yes" : "no") + "; L_100/ln(100) = " +
               format_double(ratio) +
               " inside [0.38, 0.44]: " + (ratio_ok ? "yes" : "no");
  res.notes.push_back(
      "L_100 = " + format_double(l100) +
      " matches (4/pi^2)ln(100) + 1.27 = " +
      format_double(4.0 / (std::numbers::pi * std::numbers::pi) * log100 +
                    1.2706) +
      "; the quotient L_100/ln(100) is therefore 0.68, not 0.41: the "
      "[0.38, 0.44] window only fits the slope after subtracting the "
      "additive constant, (L_100 - 1.2706)/ln(100) = " +
      format_double(detrended));
  return res;
}

CriterionResult criterion_oracle_equivalence(std::uint64_t seed) {
  CriterionResult res;
  res.id = 5;
  res.name = "oracle equivalence";

  Rng rng(seed ^ 0x27d4eb2f165667c5ull);
  double worst_fft = 0.0;
  double worst_truth = 0.0;
  for (int i = 0; i < 200; ++i) {
    const TrigPoly p = random_poly(rng, 32);
    constexpr std::size_t N = 128;
    std::vector<cplx> samples(N);
    for (std::size_t j = 0; j < N; ++j)
      samples[j] = p.eval(two_pi * static_cast<double>(j) / N);
    const TrigPoly via_fft = GridFunction(samples).fourier_coeffs();
    const int half = static_cast<int>(N) / 2 - 1;
    for (int k = -half; k <= half; ++k) {
      cplx direct(0.0);
      for (std::size_t j = 0; j < N; ++j)
        direct += samples[j] *
                  std::polar(1.0, -k * two_pi * static_cast<double>(j) / N);
      direct /= static_cast<double>(N);
      worst_fft = std::max(worst_fft, std::abs(via_fft.coeff(k) - direct));
      worst_truth = std::max(worst_truth, std::abs(via_fft.coeff(k) - p.coeff(k)));
    }
  }
  const bool coeffs_ok = worst_fft <= 1e-10 && worst_truth <= 1e-10;

  double worst_kernel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = rng.uniform_int(0, 64);
    const double t = rng.range(0.0, two_pi);
    const double closed = dirichlet_eval(n, t);
    const cplx summed = dirichlet_kernel(n).eval(t);
    worst_kernel = std::max(worst_kernel, std::abs(summed - cplx(closed)));
  }
  const bool kernel_ok = worst_kernel <= 1e-10;

  res.pass = coeffs_ok && kernel_ok;
  res.detail = "max |FFT - direct DFT| = " + format_double(worst_fft) +
               ", max |FFT - true coefficient| = " + format_double(worst_truth) +
               ", max |closed form - coefficient sum| = " +
               format_double(worst_kernel) + "; all <= 1e-10: " +
               (res.pass ? "yes" : "no");
  res.transcript += "fft " + format_double(worst_fft) + " truth " +
                    format_double(worst_truth) + " kernel " +
                    format_double(worst_kernel) + "\n";
  return res;
}

CriterionResult criterion_sup_norm(std::uint64_t seed) {
  CriterionResult res;
  res.id = 6;
  res.name = "certified sup norm soundness";

  Rng rng(seed ^ 0x85ebca77c2b2ae63ull);
  bool sound = true;
  double worst_ratio = 1.0;
  for (int i = 0; i < 200; ++i) {
    const TrigPoly p = random_poly(rng, i < 190 ? 64 : 512);
    const SupNormBound bound = certified_sup_norm(p, 64);
    const std::size_t base = fft::next_power_of_two(static_cast<std::size_t>(
        std::ceil(2.6 * 64.0 * std::max(p.degree(), 1))));
    double finer = 0.0;
    for (const cplx& v : sample_values(p, 16 * base))
      finer = std::max(finer, std::abs(v));
    if (!(bound.lower <= finer && finer <= bound.upper)) sound = false;
    const double ratio = bound.lower > 0.0 ? bound.upper / bound.lower : 1.0;
    worst_ratio = std::max(worst_ratio, ratio);
    if (!(ratio <= 1.05)) sound = false;
  }
  res.pass = sound;
  res.detail = "fine-grid sup within [lower, upper] on 200/200; worst "
               "upper/lower ratio " +
               format_double(worst_ratio) + " <= 1.05: " +
               (worst_ratio <= 1.05 ? "yes" : "no");
  res.transcript += "worst_ratio " + format_double(worst_ratio) + "\n";
  return res;
}

CriterionResult criterion_hausdorff(std::uint64_t seed) {
  CriterionResult res;
  res.id = 7;
  res.name = "hausdorff metric axioms";

  Rng rng(seed ^ 0x2545f4914f6cdd1dull);
  const auto random_set = [&rng]() {
    const int m = rng.uniform_int(1, 6);
    std::vector<CirclePoint> pts;
    for (int k = 0; k < m; ++k) pts.push_back(CirclePoint(rng.range(0.0, two_pi)));
    return FiniteCompactum(std::move(pts));
  };
  bool axioms = true;
  double worst_excess = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const FiniteCompactum A = random_set();
    const FiniteCompactum B = random_set();
    const FiniteCompactum C = random_set();
    const double ab = hausdorff_distance(A, B);
    const double bc = hausdorff_distance(B, C);
    const double ac = hausdorff_distance(A, C);
    if (ab < 0.0 || hausdorff_distance(A, A) != 0.0 ||
        ab != hausdorff_distance(B, A))
      axioms = false;
    if (ab == 0.0 && A.points() != B.points()) axioms = false;
    worst_excess = std::max(worst_excess, ac - (ab + bc));
    if (!(ac <= ab + bc + 1e-12)) axioms = false;
  }
  res.pass = axioms;
  res.detail = "nonnegativity, identity, symmetry exact on 1000 triples; "
               "worst triangle excess " +
               format_double(worst_excess) + " <= 1e-12: " +
               (worst_excess <= 1e-12 ? "yes" : "no");
  res.transcript += "worst_excess " + format_double(worst_excess) + "\n";
  return res;
}

CriterionResult criterion_return_density(const Context& ctx) {
  CriterionResult res;
  res.id = 8;
  res.name = "return density shadow";
  if (!ctx.have3) {
    res.pass = false;
    res.detail = "prerequisite construction from criterion 3 unavailable";
    res.transcript += "unavailable\n";
    return res;
  }
  const ReturnReport report = carleson_return_report(
      ctx.f3, ctx.indices3, 4096, default_return_thresholds());
  const std::size_t kThr = 9;  // thresholds are 1/k, k = 1..10; 0.1 is last
  bool monotone = true;
  std::string path;
  for (std::size_t m = 0; m < report.densities.size(); ++m) {
    if (m > 0 && report.densities[m][kThr] < report.densities[m - 1][kThr])
      monotone = false;
    path += (m ? " " : "") + format_double(report.densities[m][kThr]);
  }
  const double final_density = report.densities.back()[kThr];
  res.pass = monotone && final_density > 0.5;
  res.detail = "density at threshold 0.1 per prefix: " + path +
               "; nondecreasing: " + (monotone ? "yes" : "no") +
               "; final " + format_double(final_density) + " > 0.5: " +
               (final_density > 0.5 ? "yes" : "no");
  res.transcript += return_report_summary_json(report);
  return res;
}

CriterionResult criterion_determinism(std::uint64_t seed,
                                      const std::string& first_single,
                                      const std::string& first_multi,
                                      const std::string& first_universal) {
  CriterionResult res;
  res.id = 9;
  res.name = "determinism";
  const std::string again_single = criterion_single_point(seed).transcript;
  const std::string again_multi = criterion_multi_point(seed).transcript;
  Context ctx;
  const std::string again_universal = criterion_universal(ctx).transcript;
  const bool s = again_single == first_single;
  const bool m = again_multi == first_multi;
  const bool u = again_universal == first_universal;
  res.pass = s && m && u;
  res.detail = std::string("rerun transcripts byte-identical: single-point ") +
               (s ? "yes" : "no") + ", multi-point " + (m ? "yes" : "no") +
               ", universal " + (u ? "yes" : "no");
  res.transcript += res.detail + "\n";
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  Context ctx;
  const auto timed = [&out](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = fn();
    r.seconds = seconds_since(start);
    out.push_back(std::move(r));
  };
  timed([&] { return criterion_single_point(seed); });
  timed([&] { return criterion_multi_point(seed); });
  timed([&] { return criterion_universal(ctx); });
  timed([&] { return criterion_kernel_facts(); });
  timed([&] { return criterion_oracle_equivalence(seed); });
  timed([&] { return criterion_sup_norm(seed); });
  timed([&] { return criterion_hausdorff(seed); });
  timed([&] { return criterion_return_density(ctx); });
  const std::string t1 = out[0].transcript;
  const std::string t2 = out[1].transcript;
  const std::string t3 = out[2].transcript;
  timed([&] { return criterion_determinism(seed, t1, t2, t3); });
  return out;
}

std::string render_acceptance(const std::vector<CriterionResult>& results,
                              bool with_timing) {
  std::string s;
  int passed = 0;
  for (const CriterionResult& r : results) {
    s += "criterion " + std::to_string(r.id) + ": " +
         (r.pass ? "PASS" : "FAIL") + " (" + r.name + ") " + r.detail;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.2fs]", r.seconds);
      s += buf;
    }
    s += '\n';
    for (const std::string& note : r.notes) s += "  note: " + note + "\n";
    if (r.pass) ++passed;
  }
  s += "overall: " + std::to_string(passed) + "/" +
       std::to_string(results.size()) + " criteria pass\n";
  return s;
}

bool acceptance_pass(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

}  // namespace trigsynth
