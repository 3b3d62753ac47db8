#pragma once

#include <string>
#include <vector>

#include "trigsynth/trig_poly.hpp"

namespace trigsynth {

/// Finite compact subset of the circle: nonempty, sorted, duplicates merged.
class FiniteCompactum {
public:
  explicit FiniteCompactum(std::vector<CirclePoint> points);

  const std::vector<CirclePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

private:
  std::vector<CirclePoint> points_;
};

/// Hausdorff distance: max over both one-sided excesses, in geodesic metric.
/// Symmetric, zero exactly on equal sets.
double hausdorff_distance(const FiniteCompactum& a, const FiniteCompactum& b);

/// The four quantities the gluing step f = u*phi + v*(1-phi) + g relies on,
/// here probed with a single polynomial u in both roles.  drift_* measure
/// how far multiplying by the bump moves the partial sum where the bump is
/// flat 1; leak_* measure what remains where the bump is flat 0.
struct LocalizationRow {
  int n = 0;
  double drift_on_set = 0.0;    // max_F |s_n(u phi) - s_n u|
  double leak_at_split = 0.0;   // |s_n(u phi)(t0)|
  double drift_at_split = 0.0;  // |s_n(u (1-phi))(t0) - s_n u(t0)|
  double leak_on_set = 0.0;     // max_F |s_n(u (1-phi))|
};

/// One row per requested index, in the given order.  Residue decay along a
/// geometric index list is the expected trend; the report states values and
/// leaves the judgement to the caller.
std::vector<LocalizationRow> localization_report(const TrigPoly& u,
                                                 const TrigPoly& phi,
                                                 const FiniteCompactum& F,
                                                 CirclePoint t0,
                                                 const std::vector<int>& n_list);

/// How often partial sums return to the function itself: per grid point the
/// best residual min_j |s_{n_j} f(t) - f(t)|, and the fraction of the grid
/// below each threshold, tabulated for every prefix of the index list.
struct ReturnReport {
  int grid = 0;
  std::vector<int> indices;
  std::vector<double> thresholds;
  std::vector<double> best_residual;  // one per grid point, all indices used
  // densities[m][k]: fraction of grid points whose best residual over the
  // first m+1 indices is below thresholds[k].
  std::vector<std::vector<double>> densities;
};

/// Defaults used when the caller does not choose: 4096 grid points and
/// thresholds 1/k for k = 1..10.
std::vector<double> default_return_thresholds();

ReturnReport carleson_return_report(const TrigPoly& f,
                                    const std::vector<int>& indices, int grid,
                                    const std::vector<double>& thresholds);

/// Best uniform approximation of each dictionary entry by partial sums of f
/// on E: the smallest max_E |s_n f - q| over n <= n_max, with its argmin.
struct UniversalityRow {
  std::size_t entry = 0;
  double best_error = 0.0;
  int best_n = 0;
};

std::vector<UniversalityRow> uniform_universality_report(
    const TrigPoly& f, const FiniteCompactum& E,
    const std::vector<TrigPoly>& dictionary, int n_max);

/// CSV renderings, one row per index / grid point / dictionary entry, and a
/// JSON summary per report.  Output is deterministic.
std::string localization_csv(const std::vector<LocalizationRow>& rows);
std::string return_report_csv(const ReturnReport& report);
std::string return_report_summary_json(const ReturnReport& report);
std::string universality_csv(const std::vector<UniversalityRow>& rows);

}  // namespace trigsynth
