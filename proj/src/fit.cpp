#include "scd/fit.hpp"

#include <algorithm>
#include <cmath>

namespace scd {

double density_of(const PLConvexFn& g, const RenyiIndex& index, double x) {
  const double v = g(x);
  if (v == PLConvexFn::kInf) return 0.0;
  return std::pow(v, -index.r);
}

std::function<double(double)> density_fn(const PLConvexFn& g,
                                         const RenyiIndex& index) {
  return [g, index](double x) { return density_of(g, index, x); };
}

double DensityFit::density(double x) const {
  const double v = g(x);
  if (v == PLConvexFn::kInf) return 0.0;
  return index ? std::pow(v, -index->r) : std::exp(-v);
}

double DensityFit::mode() const {
  const auto& vals = g.values();
  std::size_t best = 0;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i] < vals[best]) best = i;
  }
  return g.knots()[best];
}

DensityFit make_fit(PLConvexFn g, std::optional<RenyiIndex> index,
                    double objective, const SegmentIntegralScheme& scheme) {
  DensityFit fit{std::move(g), index, objective};
  const auto& t = fit.g.knots();
  const auto& z = fit.g.values();
  const std::size_t m = t.size();

  fit.cdf_at_knots.assign(m, 0.0);
  fit.intcdf_at_knots.assign(m, 0.0);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const double len = t[j + 1] - t[j];
    double m0, m1;
    if (index) {
      const double gm = -index->r;
      m0 = pow_m0(z[j], z[j + 1], gm, scheme);
      m1 = pow_m1(z[j], z[j + 1], gm, scheme);
    } else {
      m0 = exp_m0(z[j], z[j + 1]);
      m1 = exp_m1(z[j], z[j + 1]);
    }
    fit.cdf_at_knots[j + 1] = fit.cdf_at_knots[j] + len * m0;
    fit.intcdf_at_knots[j + 1] =
        fit.intcdf_at_knots[j] + fit.cdf_at_knots[j] * len + len * len * (m0 - m1);
  }
  fit.total_mass = fit.cdf_at_knots.back();

  double max_slope = 0.0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    max_slope = std::max(max_slope, std::abs(fit.g.slope(j)));
  }
  const double thresh = kKnotSlopeThreshold * std::max(max_slope, 1e-300);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (fit.g.slope(i) - fit.g.slope(i - 1) > thresh) {
      fit.knot_set.push_back(t[i]);
      fit.knot_indices.push_back(i);
    }
  }
  return fit;
}

}  // namespace scd
