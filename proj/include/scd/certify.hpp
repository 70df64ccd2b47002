#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scd/fit.hpp"
#include "scd/sample.hpp"

namespace scd {

// Optimality certificate data: the residual curve
//   I(t) = int_{X(1)}^t (Fhat - F_n)
// at the support points, which must be <= 0 everywhere with equality at the
// fitted knots.
struct CharReport {
  std::vector<double> points;
  std::vector<double> residual;              // I at each support point
  double max_positive = 0.0;                 // max over points of max(I, 0)
  std::vector<double> knot_abscissas;
  std::vector<double> knot_equality;         // |I| at each detected knot
  double max_knot_equality = 0.0;
  int bracket_violations = 0;
  double max_bracket_violation = 0.0;
  double char_tol = 0.0;
  bool pass = false;
};

struct KnotBracket {
  double knot;
  double lower;      // F_n(x0) - jump
  double fhat;       // Fhat(x0)
  double upper;      // F_n(x0)
  bool satisfied;
};

struct MomentComparison {
  int order;
  double moment_fit;
  double moment_sample;
  bool inequality_applies;  // index condition s > -1/(1+l)
  bool satisfied;
};

struct MomentReport {
  double mean_fit;
  double mean_sample;
  double mean_abs_error;
  std::vector<MomentComparison> comparisons;
};

struct ConvexTestFn {
  std::string name;
  std::function<double(double)> eval;
  bool piecewise_linear = false;
  std::vector<double> kinks;  // interior kinks when piecewise_linear
};

struct ConvexOrderResult {
  std::string name;
  double integral_fit;
  double integral_sample;
  bool satisfied;
  bool integrable;
};

struct AnalyticCDF {
  std::function<double(double)> cdf;
  std::function<double(double)> integrated_cdf;  // int_{-inf}^x cdf(t) dt
  bool has_integrated = false;
};

struct ProjectionCheckOptions {
  double tol = 1e-8;
  // When the candidate's underlying convex function is supplied, equality is
  // additionally verified at its strict-convexity points, detected on the
  // grid by g(x) < (g(x+delta)+g(x-delta))/2 with delta the grid step.
  std::function<double(double)> candidate_g;
  bool has_candidate_g = false;
};

struct ProjectionCheckReport {
  double total_integral = 0.0;        // int_R (F - G)
  double max_positive = 0.0;          // max over grid of D(x)
  std::vector<double> grid;
  std::vector<double> residual;       // D(x) on the grid
  std::vector<double> equality_points;
  std::vector<double> strict_convexity_points;
  bool strict_equality_ok = true;
  bool pass = false;
};

// Closed-form CDF of the fitted density; monotone, 0 at the left edge of the
// domain, total_mass at the right edge.
double cdf_of_fit(const DensityFit& fit, double x);
// Running integral of cdf_of_fit from the left edge of the domain.
double intcdf_of_fit(const DensityFit& fit, double x);

// tol < 0 selects the default 1e-7 * sample range.
CharReport characterization_residuals(const DensityFit& fit,
                                      const SortedSample& sample,
                                      double tol = -1.0);

std::vector<KnotBracket> knot_bracket_check(const DensityFit& fit,
                                            const SortedSample& sample,
                                            double tol = -1.0);

MomentReport moment_checks(const DensityFit& fit, const SortedSample& sample,
                           int l_max, double tol = 1e-9);

std::vector<ConvexOrderResult> convex_order_check(
    const DensityFit& fit, const SortedSample& sample,
    const std::vector<ConvexTestFn>& test_fns, double tol = 1e-8);

ProjectionCheckReport population_projection_check(
    const AnalyticCDF& G, const AnalyticCDF& F, const std::vector<double>& grid,
    const ProjectionCheckOptions& opts = {});

// Closed-form moments of the fitted density: mean and E|X|^l.
double fit_mean(const DensityFit& fit);
double fit_abs_moment(const DensityFit& fit, int l);

}  // namespace scd
