#pragma once

#include <functional>

namespace trigsynth {

/// Adaptive Simpson integration of f over [a, b] to the requested absolute
/// accuracy. Throws QuadratureError when the subdivision cap is reached
/// before the local error estimate falls under the budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 48);

}  // namespace trigsynth
