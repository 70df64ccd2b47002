#include "scd/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scd {

SortedSample::SortedSample(std::vector<double> raw) {
  if (raw.size() < 2) {
    throw std::invalid_argument("SortedSample: need at least 2 observations");
  }
  for (double x : raw) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("SortedSample: non-finite observation");
    }
  }
  n_raw_ = raw.size();
  std::sort(raw.begin(), raw.end());
  const double w = 1.0 / static_cast<double>(raw.size());
  points_.reserve(raw.size());
  weights_.reserve(raw.size());
  for (double x : raw) {
    if (!points_.empty() && x == points_.back()) {
      weights_.back() += w;
    } else {
      points_.push_back(x);
      weights_.push_back(w);
    }
  }
  finalize();
}

SortedSample::SortedSample(std::vector<double> points,
                           std::vector<double> weights, std::size_t n_raw)
    : points_(std::move(points)), weights_(std::move(weights)), n_raw_(n_raw) {
  if (points_.size() != weights_.size()) {
    throw std::invalid_argument("SortedSample: points/weights size mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i]) || !(weights_[i] > 0.0)) {
      throw std::invalid_argument("SortedSample: invalid point or weight");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw std::invalid_argument("SortedSample: points not strictly increasing");
    }
    total += weights_[i];
  }
  for (double& w : weights_) w /= total;
  finalize();
}

void SortedSample::finalize() {
  if (points_.size() < 2) {
    throw std::invalid_argument("SortedSample: need at least 2 distinct points");
  }
  cumw_.resize(weights_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    cumw_[i] = acc;
  }
  cumw_.back() = 1.0;  // pin the top of the CDF exactly
}

double SortedSample::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) m += weights_[i] * points_[i];
  return m;
}

double SortedSample::ecdf(double x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x);
  if (it == points_.begin()) return 0.0;
  return cumw_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double SortedSample::ecdf_integral(double x) const {
  if (x <= points_.front()) return 0.0;
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < points_.size(); ++j) {
    const double hi = std::min(x, points_[j + 1]);
    acc += cumw_[j] * (hi - points_[j]);
    if (x <= points_[j + 1]) return acc;
  }
  return acc + 1.0 * (x - points_.back());
}

}  // namespace scd
