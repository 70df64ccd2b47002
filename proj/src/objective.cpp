#include "scd/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace scd {
namespace {

void require_aligned(const PLConvexFn& g, const SortedSample& sample) {
  const auto& k = g.knots();
  const auto& p = sample.points();
  if (k.size() != p.size()) {
    throw std::invalid_argument("objective: knot/sample alignment mismatch");
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] != p[i]) {
      throw std::invalid_argument("objective: knot/sample alignment mismatch");
    }
  }
}

}  // namespace

double eval_objective(const PLConvexFn& g, const SortedSample& sample,
                      const RenyiIndex& index,
                      const SegmentIntegralScheme& scheme) {
  require_aligned(g, sample);
  const auto& t = g.knots();
  const auto& z = g.values();
  const auto& w = sample.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) acc += w[i] * z[i];
  const double inv_abs_beta = -1.0 / index.beta;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    acc += inv_abs_beta *
           segment_power_integral(z[j], z[j + 1], t[j + 1] - t[j], index.beta,
                                  scheme);
  }
  return acc;
}

std::vector<double> objective_gradient(const PLConvexFn& g,
                                       const SortedSample& sample,
                                       const RenyiIndex& index,
                                       const SegmentIntegralScheme& scheme) {
  require_aligned(g, sample);
  const auto& t = g.knots();
  const auto& z = g.values();
  const auto& w = sample.weights();
  std::vector<double> grad(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) grad[i] = w[i];
  // (1/|beta|) dJ/du = -len ((m0 - m1) at beta-1): the integrand's beta-1
  // power is exactly the fitted density.
  const double gm = index.beta - 1.0;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    const double len = t[j + 1] - t[j];
    const double m0 = pow_m0(z[j], z[j + 1], gm, scheme);
    const double m1 = pow_m1(z[j], z[j + 1], gm, scheme);
    grad[j] -= len * (m0 - m1);
    grad[j + 1] -= len * m1;
  }
  return grad;
}

TriDiag objective_hessian(const PLConvexFn& g, const SortedSample& sample,
                          const RenyiIndex& index,
                          const SegmentIntegralScheme& scheme) {
  require_aligned(g, sample);
  const auto& t = g.knots();
  const auto& z = g.values();
  TriDiag H;
  H.diag.assign(z.size(), 0.0);
  H.off.assign(z.size() - 1, 0.0);
  // (1/|beta|) beta (beta-1) = r > 0, so the integral term is convex.
  const double r = index.r;
  const double gm = index.beta - 2.0;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    const double len = t[j + 1] - t[j];
    const double m0 = pow_m0(z[j], z[j + 1], gm, scheme);
    const double m1 = pow_m1(z[j], z[j + 1], gm, scheme);
    const double m2 = pow_m2(z[j], z[j + 1], gm, scheme);
    H.diag[j] += r * len * (m0 - 2.0 * m1 + m2);
    H.off[j] += r * len * (m1 - m2);
    H.diag[j + 1] += r * len * m2;
  }
  return H;
}

double logconcave_objective(const PLConvexFn& g, const SortedSample& sample) {
  require_aligned(g, sample);
  const auto& t = g.knots();
  const auto& z = g.values();
  const auto& w = sample.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) acc += w[i] * z[i];
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    acc += segment_exp_integral(z[j], z[j + 1], t[j + 1] - t[j]);
  }
  return acc;
}

std::vector<double> logconcave_gradient(const PLConvexFn& g,
                                        const SortedSample& sample) {
  require_aligned(g, sample);
  const auto& t = g.knots();
  const auto& z = g.values();
  const auto& w = sample.weights();
  std::vector<double> grad(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) grad[i] = w[i];
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    const double len = t[j + 1] - t[j];
    const double m0 = exp_m0(z[j], z[j + 1]);
    const double m1 = exp_m1(z[j], z[j + 1]);
    grad[j] -= len * (m0 - m1);
    grad[j + 1] -= len * m1;
  }
  return grad;
}

TriDiag logconcave_hessian(const PLConvexFn& g, const SortedSample& sample) {
  require_aligned(g, sample);
  const auto& t = g.knots();
  const auto& z = g.values();
  TriDiag H;
  H.diag.assign(z.size(), 0.0);
  H.off.assign(z.size() - 1, 0.0);
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    const double len = t[j + 1] - t[j];
    const double m0 = exp_m0(z[j], z[j + 1]);
    const double m1 = exp_m1(z[j], z[j + 1]);
    const double m2 = exp_m2(z[j], z[j + 1]);
    H.diag[j] += len * (m0 - 2.0 * m1 + m2);
    H.off[j] += len * (m1 - m2);
    H.diag[j + 1] += len * m2;
  }
  return H;
}

}  // namespace scd
