#pragma once

#include <vector>

#include "scd/index.hpp"
#include "scd/pl_convex.hpp"
#include "scd/sample.hpp"
#include "scd/segments.hpp"

namespace scd {

// Symmetric tridiagonal matrix in the knot-value coordinates.
struct TriDiag {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1
};

// Divergence functional over the knot partition, knots aligned with the
// sample support:
//   L(g) = sum_i w_i g(X_i) + (1/|beta|) int g^beta.
// The integral is assembled segment by segment in closed form, so the value
// is exact up to rounding. Requires g.knots() == sample.points().
double eval_objective(const PLConvexFn& g, const SortedSample& sample,
                      const RenyiIndex& index,
                      const SegmentIntegralScheme& scheme = {});

std::vector<double> objective_gradient(const PLConvexFn& g,
                                       const SortedSample& sample,
                                       const RenyiIndex& index,
                                       const SegmentIntegralScheme& scheme = {});

TriDiag objective_hessian(const PLConvexFn& g, const SortedSample& sample,
                          const RenyiIndex& index,
                          const SegmentIntegralScheme& scheme = {});

// Log-density analogue:  sum_i w_i g(X_i) + int exp(-g).
double logconcave_objective(const PLConvexFn& g, const SortedSample& sample);

std::vector<double> logconcave_gradient(const PLConvexFn& g,
                                        const SortedSample& sample);

TriDiag logconcave_hessian(const PLConvexFn& g, const SortedSample& sample);

}  // namespace scd
