#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scd/index.hpp"
#include "scd/pl_convex.hpp"
#include "scd/sample.hpp"
#include "scd/segments.hpp"

namespace scd {

// Density induced by a convex function under the power transform:
// x -> g(x)^(-r) on the domain, 0 outside.
double density_of(const PLConvexFn& g, const RenyiIndex& index, double x);
std::function<double(double)> density_fn(const PLConvexFn& g,
                                         const RenyiIndex& index);

// A solved estimate. `index` empty means the log-density regime (s = 0),
// where the density is exp(-g).
struct DensityFit {
  PLConvexFn g;
  std::optional<RenyiIndex> index;
  double objective = 0.0;
  double total_mass = 0.0;
  // Interior support points where the fitted slope changes (relative slope
  // threshold 1e-6), together with their indices into the knot grid.
  std::vector<double> knot_set;
  std::vector<std::size_t> knot_indices;
  // Closed-form CDF of the fitted density at every knot, and its running
  // integral; in-segment values interpolate through the same closed forms.
  std::vector<double> cdf_at_knots;
  std::vector<double> intcdf_at_knots;
  double max_char_residual = 0.0;

  bool log_concave() const { return !index.has_value(); }
  double density(double x) const;
  // Leftmost maximizer of the density (= leftmost minimizer of g).
  double mode() const;
  double range() const { return g.domain_hi() - g.domain_lo(); }
};

inline constexpr double kKnotSlopeThreshold = 1e-6;

// Assembles the derived quantities (CDF tables, knot set, total mass) for a
// candidate g; `objective` is stored as given, residual starts at zero.
DensityFit make_fit(PLConvexFn g, std::optional<RenyiIndex> index,
                    double objective, const SegmentIntegralScheme& scheme = {});

}  // namespace scd
