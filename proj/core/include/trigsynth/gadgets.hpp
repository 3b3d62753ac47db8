#pragma once

#include <vector>

#include "trigsynth/certificate.hpp"
#include "trigsynth/circle.hpp"
#include "trigsynth/index_set.hpp"
#include "trigsynth/trig_poly.hpp"

namespace trigsynth {

// Closed arc [start, start + length] on the circle; length 0 marks a point.
struct Arc {
  Arc(CirclePoint start_point, double arc_length);

  double start = 0.0;
  double length = 0.0;

  bool contains(double angle) const;
};

// Polynomial with small norm whose n-th partial sum at the anchor point is
// large: the quantitative engine behind every targeting routine.
struct GadgetResult {
  TrigPoly h;
  int n = 0;
  cplx attained;       // s_n h(t0), reported from the final h
  double norm_upper = 0.0;  // certified upper bound for ||h||
};

// Smoothed clipped sign pattern of the degree-n Dirichlet kernel, centered
// at 0, unscaled.  A Fejer mean of order 8n of unit samples, hence a true
// convex combination with sup norm <= 1; its degree is 8n.
TrigPoly correlation_profile(int n);

// s_n of the profile at its center: the partial-sum gain available at n.
// Grows like the Lebesgue constant, about (4 / pi^2) log n.
double correlation_gain(const TrigPoly& profile, int n);

// Searches lambda upward for an index n at which the correlation profile,
// translated to t0 and scaled inside delta, has |s_n h(t0)| >= M.
//
// Throws SearchExhausted when no admissible index below the cap reaches M.
GadgetResult divergence_gadget(CirclePoint t0, double delta, double M,
                               const IndexSetSpec& lambda);

// h_tilde = (target / s_n h(t0)) * h, making s_n h_tilde(t0) equal target up
// to one complex multiply-divide.  Throws DegenerateGadget when
// |s_n h(t0)| <= 1e-12.
TrigPoly scale_to_target(const TrigPoly& h, int n, CirclePoint t0, cplx target);

struct SynthesisResult {
  TrigPoly f;
  int n = 0;
  Certificate cert;
};

// Finds f with ||f - g|| < eps whose n-th partial sum takes the value c at
// t0, for an admissible n >= deg g.  The certificate re-verifies both
// clauses from (f, n) alone.
SynthesisResult single_point_target(const TrigPoly& g, CirclePoint t0, cplx c,
                                    double eps, const IndexSetSpec& lambda);

// Smoothed indicator: ~1 on ones_region, ~0 on zeros_region, within
// [0, 1] everywhere.
struct BumpSpec {
  std::vector<Arc> ones_region;
  std::vector<Arc> zeros_region;
  double flatness = 1e-3;  // requested eta, in (0, 1/2)
  int degree_budget = 1 << 16;
};

struct BumpResult {
  TrigPoly phi;
  double flatness_achieved = 0.0;  // measured max residue over both regions
};

// Piecewise-linear profile (1 on ones, 0 on zeros, linear ramps across the
// middle half of each gap) convolved with a nonnegative unit-mass peak
// kernel sharp enough that the tail mass within the ramp margin is below
// flatness / 2.  The result is real, lives in [0, 1], and swapping the two
// regions yields 1 - phi.  Throws BudgetTooSmall when the degree budget
// cannot reach the requested flatness.
BumpResult bump(const BumpSpec& spec);

}  // namespace trigsynth
