#include "trigsynth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "trigsynth/serialization.hpp"

namespace trigsynth {

FiniteCompactum::FiniteCompactum(std::vector<CirclePoint> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("compactum must be nonempty");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

namespace {

double one_sided_excess(const FiniteCompactum& from, const FiniteCompactum& to) {
  double worst = 0.0;
  for (CirclePoint a : from.points()) {
    double best = two_pi;
    for (CirclePoint b : to.points())
      best = std::min(best, circle_distance(a, b));
    worst = std::max(worst, best);
  }
  return worst;
}

// e^{ikt} and e^{-ikt} for k = 0, 1, 2, ... with a periodic resync so the
// phase error stays near machine precision for arbitrarily long runs.
class SymmetricPhaseWalker {
public:
  explicit SymmetricPhaseWalker(double t)
      : t_(t), step_(std::polar(1.0, t)) {}
  cplx plus() const { return plus_; }
  cplx minus() const { return minus_; }
  void advance() {
    ++k_;
    if (++since_sync_ == kSyncEvery) {
      plus_ = std::polar(1.0, t_ * static_cast<double>(k_));
      minus_ = std::conj(plus_);
      since_sync_ = 0;
    } else {
      plus_ *= step_;
      minus_ *= std::conj(step_);
    }
  }

private:
  static constexpr int kSyncEvery = 2048;
  double t_;
  cplx step_;
  cplx plus_ = 1.0;
  cplx minus_ = 1.0;
  long long k_ = 0;
  int since_sync_ = 0;
};

// Running partial sums s_0 f(t), s_1 f(t), ..., s_kmax f(t) visited in order.
template <typename Visit>
void walk_partial_sums(const TrigPoly& f, double t, int kmax, Visit visit) {
  SymmetricPhaseWalker w(t);
  cplx acc = f.coeff(0);
  visit(0, acc);
  for (int k = 1; k <= kmax; ++k) {
    w.advance();
    acc += f.coeff(k) * w.plus() + f.coeff(-k) * w.minus();
    visit(k, acc);
  }
}

}  // namespace

double hausdorff_distance(const FiniteCompactum& a, const FiniteCompactum& b) {
  return std::max(one_sided_excess(a, b), one_sided_excess(b, a));
}

std::vector<LocalizationRow> localization_report(const TrigPoly& u,
                                                 const TrigPoly& phi,
                                                 const FiniteCompactum& F,
                                                 CirclePoint t0,
                                                 const std::vector<int>& n_list) {
  const TrigPoly uphi = u * phi;
  const TrigPoly upsi = u - uphi;  // u * (1 - phi), without a second product
  std::vector<LocalizationRow> rows;
  rows.reserve(n_list.size());
  for (const int n : n_list) {
    if (n < 0) throw std::invalid_argument("indices must be >= 0");
    LocalizationRow row;
    row.n = n;
    for (CirclePoint p : F.points()) {
      const double t = p.angle();
      const cplx su = u.partial_sum_at(n, t);
      row.drift_on_set =
          std::max(row.drift_on_set, std::abs(uphi.partial_sum_at(n, t) - su));
      row.leak_on_set =
          std::max(row.leak_on_set, std::abs(upsi.partial_sum_at(n, t)));
    }
    const double a = t0.angle();
    row.leak_at_split = std::abs(uphi.partial_sum_at(n, a));
    row.drift_at_split =
        std::abs(upsi.partial_sum_at(n, a) - u.partial_sum_at(n, a));
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> default_return_thresholds() {
  std::vector<double> out;
  for (int k = 1; k <= 10; ++k) out.push_back(1.0 / k);
  return out;
}

ReturnReport carleson_return_report(const TrigPoly& f,
                                    const std::vector<int>& indices, int grid,
                                    const std::vector<double>& thresholds) {
  if (indices.empty()) throw std::invalid_argument("index list must be nonempty");
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 0) throw std::invalid_argument("indices must be >= 0");
    if (j > 0 && indices[j] <= indices[j - 1])
      throw std::invalid_argument("indices must be strictly increasing");
  }
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  if (thresholds.empty())
    throw std::invalid_argument("threshold list must be nonempty");
  for (const double th : thresholds)
    if (!(th > 0.0)) throw std::invalid_argument("thresholds must be positive");

  const std::size_t J = indices.size();
  const int kmax = std::max(f.degree(), indices.back());

  // residuals[j][i] = |s_{n_j} f(t_i) - f(t_i)|
  std::vector<std::vector<double>> residuals(
      J, std::vector<double>(static_cast<std::size_t>(grid)));
  for (int i = 0; i < grid; ++i) {
    const double t = two_pi * static_cast<double>(i) / grid;
    std::vector<cplx> at_index(J);
    std::size_t next = 0;
    cplx full(0.0);
    walk_partial_sums(f, t, kmax, [&](int k, cplx acc) {
      while (next < J && indices[next] == k) at_index[next++] = acc;
      if (k >= f.degree()) full = acc;
    });
    while (next < J) at_index[next++] = full;  // indices past deg f
    for (std::size_t j = 0; j < J; ++j)
      residuals[j][static_cast<std::size_t>(i)] = std::abs(at_index[j] - full);
  }

  ReturnReport report;
  report.grid = grid;
  report.indices = indices;
  report.thresholds = thresholds;
  std::vector<double> best(residuals[0]);
  for (std::size_t j = 0; j < J; ++j) {
    if (j > 0)
      for (std::size_t i = 0; i < best.size(); ++i)
        best[i] = std::min(best[i], residuals[j][i]);
    std::vector<double> row(thresholds.size());
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      std::size_t count = 0;
      for (const double r : best)
        if (r < thresholds[k]) ++count;
      row[k] = static_cast<double>(count) / static_cast<double>(grid);
    }
    report.densities.push_back(std::move(row));
  }
  report.best_residual = std::move(best);
  return report;
}

std::vector<UniversalityRow> uniform_universality_report(
    const TrigPoly& f, const FiniteCompactum& E,
    const std::vector<TrigPoly>& dictionary, int n_max) {
  if (dictionary.empty())
    throw std::invalid_argument("dictionary must be nonempty");
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

  // sums[e][n] = s_n f(t_e)
  const std::size_t ne = E.size();
  std::vector<std::vector<cplx>> sums(
      ne, std::vector<cplx>(static_cast<std::size_t>(n_max) + 1));
  for (std::size_t e = 0; e < ne; ++e) {
    walk_partial_sums(f, E.points()[e].angle(), n_max, [&](int k, cplx acc) {
      sums[e][static_cast<std::size_t>(k)] = acc;
    });
  }

  std::vector<UniversalityRow> rows;
  rows.reserve(dictionary.size());
  for (std::size_t q = 0; q < dictionary.size(); ++q) {
    std::vector<cplx> target(ne);
    for (std::size_t e = 0; e < ne; ++e)
      target[e] = dictionary[q].eval(E.points()[e]);
    UniversalityRow row;
    row.entry = q;
    row.best_error = -1.0;
    for (int n = 0; n <= n_max; ++n) {
      double err = 0.0;
      for (std::size_t e = 0; e < ne; ++e)
        err = std::max(
            err, std::abs(sums[e][static_cast<std::size_t>(n)] - target[e]));
      if (row.best_error < 0.0 || err < row.best_error) {
        row.best_error = err;
        row.best_n = n;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string localization_csv(const std::vector<LocalizationRow>& rows) {
  std::string out = "n,drift_on_set,leak_at_split,drift_at_split,leak_on_set\n";
  for (const LocalizationRow& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_double(row.drift_on_set);
    out += ',';
    out += format_double(row.leak_at_split);
    out += ',';
    out += format_double(row.drift_at_split);
    out += ',';
    out += format_double(row.leak_on_set);
    out += '\n';
  }
  return out;
}

std::string return_report_csv(const ReturnReport& report) {
  std::string out = "index,t,best_residual\n";
  for (std::size_t i = 0; i < report.best_residual.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(two_pi * static_cast<double>(i) / report.grid);
    out += ',';
    out += format_double(report.best_residual[i]);
    out += '\n';
  }
  return out;
}

std::string return_report_summary_json(const ReturnReport& report) {
  nlohmann::ordered_json j;
  j["grid"] = report.grid;
  j["indices"] = report.indices;
  j["thresholds"] = report.thresholds;
  j["densities"] = report.densities;
  return j.dump(2) + "\n";
}

std::string universality_csv(const std::vector<UniversalityRow>& rows) {
  std::string out = "entry,best_error,best_n\n";
  for (const UniversalityRow& row : rows) {
    out += std::to_string(row.entry);
    out += ',';
    out += format_double(row.best_error);
    out += ',';
    out += std::to_string(row.best_n);
    out += '\n';
  }
  return out;
}

}  // namespace trigsynth
