#pragma once

#include "trigsynth/grid.hpp"
#include "trigsynth/trig_poly.hpp"

namespace trigsynth {

/// D_n(t) = sum_{|k| <= n} e^{ikt}, as a coefficient object.
TrigPoly dirichlet_kernel(int n);

/// Closed-form evaluation sin((n + 1/2)t) / sin(t/2). Near the removable
/// singularity (|sin(t/2)| < 1e-8) the limit value 2n + 1 is returned.
double dirichlet_eval(int n, double t);

/// Fejer mean sigma_m: coefficient k is scaled by (1 - |k|/(m+1)) and
/// frequencies above m are dropped. The grid overload reads coefficients off
/// the FFT of the samples and requires m <= N/2 - 1.
TrigPoly fejer_mean(const TrigPoly& p, int m);
TrigPoly fejer_mean(const GridFunction& f, int m);

/// de la Vallee Poussin mean V_m = 2*sigma_{2m+1} - sigma_m. Coefficients
/// with |k| <= m + 1 pass through with weight exactly 1.
TrigPoly vallee_poussin_mean(const TrigPoly& p, int m);
TrigPoly vallee_poussin_mean(const GridFunction& f, int m);

/// Jackson-type peak (sin(w t/2) / (w sin(t/2)))^4: degree 2w - 2, value 1
/// at t = 0, nonnegative, with t^{-4} sidelobe decay.
TrigPoly jackson_peak(int w);
double jackson_peak_eval(int w, double t);

/// Fraction of the mass of the normalized Jackson kernel lying outside
/// [-r, r]. Controls how far bump plateaus leak into neighbouring regions.
double jackson_tail_mass(int w, double r);

/// Lebesgue constant L_n = (1/2pi) * integral of |D_n|, computed by adaptive
/// quadrature on the subintervals between consecutive zeros of D_n.
double lebesgue_constant(int n, double abs_tol = 1e-8);

/// Cheap upper bound for L_n: (4/pi^2) * ln(max(n,1)) + 1.5. The additive
/// constant dominates the true sequence L_n - (4/pi^2) ln n, which starts at
/// 1.44 and decreases toward 1.27, so the bound is safe for every n >= 0.
/// Used to discard hopeless gadget candidates without building anything.
double lebesgue_upper_bound(int n);

}  // namespace trigsynth
