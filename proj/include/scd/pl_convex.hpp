#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace scd {

// Piecewise-linear convex function on [t0, tm], +infinity outside.
// Knot abscissas are strictly increasing; convexity means the slopes of
// consecutive segments are nondecreasing (second divided differences >= 0
// up to a relative slack).
class PLConvexFn {
 public:
  // `require_positive` is on for the power-transform regime (values must be
  // bounded away from zero); the log-density regime allows any real values.
  PLConvexFn(std::vector<double> knots, std::vector<double> values,
             bool require_positive = true);

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return knots_.size(); }
  double domain_lo() const { return knots_.front(); }
  double domain_hi() const { return knots_.back(); }

  // Linear interpolant inside the domain, +infinity outside.
  double operator()(double x) const;

  // Slope of segment j = [knots[j], knots[j+1]].
  double slope(std::size_t j) const {
    return (values_[j + 1] - values_[j]) / (knots_[j + 1] - knots_[j]);
  }
  // One-sided derivatives (left derivative at t0 and right at tm are the
  // adjacent segment slopes).
  double deriv_left(double x) const;
  double deriv_right(double x) const;

  double min_value() const;
  double max_abs_value() const;

  // Largest convexity violation, as max(slope[j-1]-slope[j], 0) over joints.
  double convexity_defect() const;

  static constexpr double kInf = std::numeric_limits<double>::infinity();

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

}  // namespace scd
