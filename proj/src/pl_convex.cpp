#include "scd/pl_convex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scd {

PLConvexFn::PLConvexFn(std::vector<double> knots, std::vector<double> values,
                       bool require_positive)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() != values_.size() || knots_.size() < 2) {
    throw std::invalid_argument("PLConvexFn: need >= 2 aligned knots/values");
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i]) || !std::isfinite(values_[i])) {
      throw std::invalid_argument("PLConvexFn: non-finite knot or value");
    }
    if (i > 0 && !(knots_[i] > knots_[i - 1])) {
      throw std::invalid_argument("PLConvexFn: knots not strictly increasing");
    }
    if (require_positive && !(values_[i] > 0.0)) {
      throw std::invalid_argument("PLConvexFn: values must be positive");
    }
    scale = std::max(scale, std::abs(values_[i]));
  }
  if (convexity_defect() > 1e-10 * std::max(scale, 1.0)) {
    throw std::invalid_argument("PLConvexFn: convexity violated");
  }
}

double PLConvexFn::operator()(double x) const {
  if (x < knots_.front() || x > knots_.back()) return kInf;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  std::size_t j = (it == knots_.end())
                      ? knots_.size() - 2
                      : static_cast<std::size_t>(it - knots_.begin()) - 1;
  if (it != knots_.end() && j >= knots_.size() - 1) j = knots_.size() - 2;
  const double t = (x - knots_[j]) / (knots_[j + 1] - knots_[j]);
  return values_[j] + t * (values_[j + 1] - values_[j]);
}

double PLConvexFn::deriv_left(double x) const {
  if (x <= knots_.front()) return -kInf;
  if (x > knots_.back()) return kInf;
  auto it = std::lower_bound(knots_.begin(), knots_.end(), x);
  std::size_t j = static_cast<std::size_t>(it - knots_.begin());
  if (it != knots_.end() && *it == x) {
    return slope(j == 0 ? 0 : j - 1);
  }
  return slope(j - 1);
}

double PLConvexFn::deriv_right(double x) const {
  if (x < knots_.front()) return -kInf;
  if (x >= knots_.back()) return kInf;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return slope(std::min(j, knots_.size() - 2));
}

double PLConvexFn::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double PLConvexFn::max_abs_value() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double PLConvexFn::convexity_defect() const {
  double worst = 0.0;
  for (std::size_t j = 0; j + 2 < knots_.size(); ++j) {
    worst = std::max(worst, slope(j) - slope(j + 1));
  }
  return worst;
}

}  // namespace scd
