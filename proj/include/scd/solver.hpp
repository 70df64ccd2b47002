#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "scd/certify.hpp"
#include "scd/fit.hpp"
#include "scd/index.hpp"
#include "scd/sample.hpp"
#include "scd/segments.hpp"

namespace scd {

class DegenerateSample : public std::invalid_argument {
 public:
  explicit DegenerateSample(const std::string& what)
      : std::invalid_argument(what) {}
};

struct SolverOptions {
  int max_newton_iters = 800;   // accepted-step budget across all stages
  double barrier_mu0 = 1.0;
  double barrier_shrink = 0.2;  // in (0.05, 0.9)
  double grad_tol = 1e-10;      // centering tolerance floor (decrement^2/2)
  double char_tol = -1.0;       // < 0 selects 1e-7 * sample range
  double mass_tol = 1e-6;
  double barrier_mu_min = 1e-12;
  double eps_floor_rel = 1e-8;  // floor relative to the uniform start level
  bool polish = true;           // active-set Newton refinement after the path
  int init_kind = 0;            // 0 symmetric start bump, 1 asymmetric
  SegmentIntegralScheme scheme;

  void validate() const;
};

struct TraceEntry {
  double mu;
  double objective;          // divergence functional L
  double barrier_objective;  // L + mu * barrier
  bool recenter;             // first step after a mu shrink
};

struct SolveReport {
  int iterations = 0;
  double final_grad_norm = 0.0;
  double final_mu = 0.0;
  double barrier_value = 0.0;
  std::vector<TraceEntry> trace;
  bool converged = false;
  double char_residual = 0.0;  // max(positive violation, knot equality defect)
  int polish_rounds = 0;
  std::vector<std::string> warnings;
};

struct FitResult {
  DensityFit fit;
  SolveReport report;
};

FitResult fit_renyi(const SortedSample& sample, const RenyiIndex& index,
                    const SolverOptions& opts = {});

// Same solve started from user-supplied knot values (warm starts, uniqueness
// experiments). Values are projected to the feasible cone first.
FitResult fit_renyi_from(const SortedSample& sample, const RenyiIndex& index,
                         std::vector<double> start, const SolverOptions& opts);

FitResult fit_logconcave(const SortedSample& sample,
                         const SolverOptions& opts = {});

FitResult fit_logconcave_from(const SortedSample& sample,
                              std::vector<double> start,
                              const SolverOptions& opts);

// Continuation in s: s_list must lie in (-1,0) with |s| strictly decreasing.
// Each fit starts from the previous solution through the power transform
// g -> g^(s_new/s_old), re-projected onto the cone.
std::vector<FitResult> warm_start_path(const SortedSample& sample,
                                       const std::vector<double>& s_list,
                                       const SolverOptions& opts = {});

// Weighted L2 isotonic projection (pool adjacent violators), ascending.
void pava_nondecreasing(std::vector<double>& y, const std::vector<double>& w);

}  // namespace scd
