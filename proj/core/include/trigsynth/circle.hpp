#pragma once

#include <cmath>
#include <numbers>

namespace trigsynth {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// A point on the circle, stored as the canonical angle in [0, 2*pi).
class CirclePoint {
public:
  CirclePoint() = default;
  explicit CirclePoint(double angle) : angle_(canonical(angle)) {}

  double angle() const { return angle_; }

  static double canonical(double angle) {
    double a = std::fmod(angle, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;
    return a;
  }

  friend bool operator==(CirclePoint a, CirclePoint b) { return a.angle_ == b.angle_; }
  friend bool operator<(CirclePoint a, CirclePoint b) { return a.angle_ < b.angle_; }

private:
  double angle_ = 0.0;
};

/// Geodesic distance on the circle, in [0, pi].
inline double circle_distance(CirclePoint a, CirclePoint b) {
  double d = std::fabs(a.angle() - b.angle());
  return std::min(d, two_pi - d);
}

inline double circle_distance(double a, double b) {
  return circle_distance(CirclePoint(a), CirclePoint(b));
}

}  // namespace trigsynth
