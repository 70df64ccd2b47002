#pragma once

#include <cstddef>
#include <vector>

namespace scd {

// Order statistics with tie handling: duplicate observations are collapsed
// into a single support point with merged weight, so the support is strictly
// increasing. The empirical CDF is the right-continuous step function of the
// merged weights.
class SortedSample {
 public:
  // Equal weights 1/n on the raw observations.
  explicit SortedSample(std::vector<double> raw);
  // Pre-aggregated support points with positive weights (normalized here).
  SortedSample(std::vector<double> points, std::vector<double> weights,
               std::size_t n_raw);

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }
  std::size_t n_raw() const { return n_raw_; }

  double min() const { return points_.front(); }
  double max() const { return points_.back(); }
  double range() const { return points_.back() - points_.front(); }
  double mean() const;

  // Right-continuous empirical CDF.
  double ecdf(double x) const;
  // ecdf evaluated at support point i (cumulative weight through i).
  double ecdf_at(std::size_t i) const { return cumw_[i]; }
  // Running integral of the empirical CDF from the first support point.
  double ecdf_integral(double x) const;

 private:
  void finalize();

  std::vector<double> points_;
  std::vector<double> weights_;
  std::vector<double> cumw_;
  std::size_t n_raw_ = 0;
};

}  // namespace scd
