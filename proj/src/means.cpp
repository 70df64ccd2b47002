#include "scd/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scd {

double generalized_mean(double a, double b, double theta, double s) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw std::invalid_argument("generalized_mean: a, b must be nonnegative");
  }
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("generalized_mean: theta must be in (0,1)");
  }
  if (s == -std::numeric_limits<double>::infinity()) return std::min(a, b);
  if (s == 0.0) return std::pow(a, 1.0 - theta) * std::pow(b, theta);
  if (s < 0.0 && a * b == 0.0) return 0.0;
  if (a == b) return a;
  return std::pow((1.0 - theta) * std::pow(a, s) + theta * std::pow(b, s),
                  1.0 / s);
}

std::vector<SConcavityViolation> check_s_concavity(
    const std::function<double(double)>& f, double s,
    const std::vector<double>& grid, double rel_tol) {
  if (grid.size() < 3) {
    throw std::invalid_argument("check_s_concavity: need >= 3 grid points");
  }
  std::vector<double> vals(grid.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f(grid[i]);
    if (!(vals[i] >= 0.0)) {
      throw std::invalid_argument("check_s_concavity: f must be >= 0 on grid");
    }
    scale = std::max(scale, vals[i]);
  }
  const double tol = rel_tol * std::max(scale, 1e-300);
  std::vector<SConcavityViolation> report;
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
    for (std::size_t k = i + 2; k < grid.size(); ++k) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const double theta = (grid[j] - grid[i]) / (grid[k] - grid[i]);
        const double m = generalized_mean(vals[i], vals[k], theta, s);
        if (vals[j] < m - tol) {
          report.push_back({grid[i], grid[k], theta, m - vals[j]});
        }
      }
    }
  }
  return report;
}

}  // namespace scd
