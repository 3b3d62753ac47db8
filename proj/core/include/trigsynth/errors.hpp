#pragma once

#include <stdexcept>
#include <string>

namespace trigsynth {

/// No admissible index inside the search window satisfied the requested
/// bounds. Callers can widen the window or relax the request.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The gadget's partial sum at the anchor point vanished, so no rescaling
/// can reach a nonzero target.
struct DegenerateGadget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested bump cannot be realized within the degree budget.
struct BudgetTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Target points are too close together for the bump geometry.
struct GapTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A staged construction could not reconcile one stage with the budget or
/// band constraints. Carries the 1-based index of the failing stage.
struct StageConflict : std::runtime_error {
  StageConflict(int stage_index, const std::string& what)
      : std::runtime_error(what), stage(stage_index) {}
  int stage;
};

/// Adaptive quadrature failed to reach the requested accuracy within the
/// subdivision cap.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace trigsynth
