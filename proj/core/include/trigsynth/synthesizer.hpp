#pragma once

#include <vector>

#include "trigsynth/gadgets.hpp"

namespace trigsynth {

// Finite point set with one complex target value per point.
struct TargetSpec {
  std::vector<CirclePoint> points;
  std::vector<cplx> values;

  // Throws std::invalid_argument unless nonempty, sizes match, and the
  // points are pairwise distinct.
  void validate() const;

  // Minimal pairwise circle distance; 2pi for a singleton.
  double min_gap() const;
};

// Finds f with ||f - g|| < eps whose n-th partial sum matches the target
// values on the whole point set, for one shared admissible n >= deg g.  The
// candidate search walks lambda upward and takes the smallest index at
// which every localization residue and every scaling gate passes.
//
// Throws SearchExhausted when no admissible index works, GapTooSmall when
// two target points are closer than the bump feasibility floor.
SynthesisResult multi_point_target(const TrigPoly& g, const TargetSpec& target,
                                   double eps, const IndexSetSpec& lambda);

// Nested finite stages with per-stage tolerances (default rule 1/j).
struct ExhaustionSchedule {
  std::vector<TargetSpec> stages;
  std::vector<double> tolerances;

  // Stage j = the first sizes[j] points of the final stage, tolerance 1/j.
  static ExhaustionSchedule prefixes(const TargetSpec& final_stage,
                                     const std::vector<int>& sizes);

  // Throws std::invalid_argument unless stages are nested (by exact point
  // identity), values agree across stages, and tolerances are positive and
  // nonincreasing.
  void validate() const;
};

struct StageRecord {
  int stage = 0;
  int n = 0;
  double norm_added = 0.0;  // certified upper bound of this stage's correction
  Certificate cert;
};

struct UniversalResult {
  TrigPoly f;
  std::vector<int> indices;
  std::vector<StageRecord> stages;
};

// One f whose partial sums walk the whole schedule: ||f - g|| < norm_budget
// and ||s_{n_j} f - h||_{E_j} < tolerance(j) for every stage, with strictly
// increasing indices.  Stage corrections occupy disjoint spectral bands
// above the previous index, so every stage certificate holds for the final
// f.  Values on stage points are read from h_values (the final stage set).
//
// Throws StageConflict (with the failing stage) when a stage cannot fit the
// norm budget.
UniversalResult universal_function(const TrigPoly& g, const TargetSpec& h_values,
                                   const ExhaustionSchedule& schedule,
                                   double norm_budget);

}  // namespace trigsynth
