#include "scd/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scd/quadrature.hpp"
#include "scd/segments.hpp"

namespace scd {
namespace {

std::size_t segment_of(const std::vector<double>& t, double x) {
  auto it = std::upper_bound(t.begin(), t.end(), x);
  if (it == t.begin()) return 0;
  std::size_t j = static_cast<std::size_t>(it - t.begin()) - 1;
  return std::min(j, t.size() - 2);
}

double default_tol(const SortedSample& sample, double tol) {
  return tol >= 0.0 ? tol : 1e-7 * sample.range();
}

// int of tau^p times the transformed segment density, dispatching on regime.
double seg_mp(const DensityFit& fit, double u, double v, int p) {
  if (fit.index) return pow_mp(u, v, -fit.index->r, p);
  switch (p) {
    case 0: return exp_m0(u, v);
    case 1: return exp_m1(u, v);
    case 2: return exp_m2(u, v);
    default:
      throw std::invalid_argument("moments beyond order 2 unsupported for the log regime");
  }
}

// int_a^b x_signed^l f(x) dx over one linear piece of g, where x_signed is
// x (signed=false) or |x| with the piece not straddling zero (signed=true
// handles the reflection).
double piece_poly_moment(const DensityFit& fit, double a, double b, double u,
                         double v, int l, bool reflect) {
  const double len = b - a;
  if (!(len > 0.0)) return 0.0;
  const double base = reflect ? -a : a;
  const double step = reflect ? -len : len;
  double acc = 0.0;
  double binom = 1.0;
  for (int p = 0; p <= l; ++p) {
    if (p > 0) binom *= static_cast<double>(l - p + 1) / p;
    const double bp = (l == p) ? 1.0 : std::pow(base, l - p);
    acc += binom * bp * std::pow(step, p) * seg_mp(fit, u, v, p);
  }
  return len * acc;
}

}  // namespace

double cdf_of_fit(const DensityFit& fit, double x) {
  const auto& t = fit.g.knots();
  if (x <= t.front()) return 0.0;
  if (x >= t.back()) return fit.total_mass;
  const std::size_t j = segment_of(t, x);
  const double u = fit.g.values()[j];
  const double vx = fit.g(x);
  const double len = x - t[j];
  if (len == 0.0) return fit.cdf_at_knots[j];
  const double m0 = fit.index ? pow_m0(u, vx, -fit.index->r) : exp_m0(u, vx);
  return fit.cdf_at_knots[j] + len * m0;
}

double intcdf_of_fit(const DensityFit& fit, double x) {
  const auto& t = fit.g.knots();
  if (x <= t.front()) return 0.0;
  if (x >= t.back()) {
    return fit.intcdf_at_knots.back() + fit.total_mass * (x - t.back());
  }
  const std::size_t j = segment_of(t, x);
  const double u = fit.g.values()[j];
  const double vx = fit.g(x);
  const double len = x - t[j];
  if (len == 0.0) return fit.intcdf_at_knots[j];
  double m0, m1;
  if (fit.index) {
    m0 = pow_m0(u, vx, -fit.index->r);
    m1 = pow_m1(u, vx, -fit.index->r);
  } else {
    m0 = exp_m0(u, vx);
    m1 = exp_m1(u, vx);
  }
  return fit.intcdf_at_knots[j] + fit.cdf_at_knots[j] * len +
         len * len * (m0 - m1);
}

CharReport characterization_residuals(const DensityFit& fit,
                                      const SortedSample& sample,
                                      double tol) {
  const auto& t = fit.g.knots();
  const auto& p = sample.points();
  if (t.size() != p.size() || t.front() != p.front() || t.back() != p.back()) {
    throw std::invalid_argument(
        "characterization_residuals: fit/sample support mismatch");
  }
  CharReport rep;
  rep.char_tol = default_tol(sample, tol);
  rep.points = p;
  rep.residual.assign(p.size(), 0.0);
  double ecdf_int = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    ecdf_int += sample.ecdf_at(i - 1) * (p[i] - p[i - 1]);
    rep.residual[i] = fit.intcdf_at_knots[i] - ecdf_int;
    rep.max_positive = std::max(rep.max_positive, rep.residual[i]);
  }
  rep.knot_abscissas = fit.knot_set;
  for (std::size_t idx : fit.knot_indices) {
    const double e = std::abs(rep.residual[idx]);
    rep.knot_equality.push_back(e);
    rep.max_knot_equality = std::max(rep.max_knot_equality, e);
  }
  const auto brackets = knot_bracket_check(fit, sample, rep.char_tol);
  for (const auto& b : brackets) {
    if (!b.satisfied) {
      ++rep.bracket_violations;
      const double viol =
          std::max(b.lower - b.fhat, b.fhat - b.upper);
      rep.max_bracket_violation = std::max(rep.max_bracket_violation, viol);
    }
  }
  rep.pass = rep.max_positive <= rep.char_tol &&
             rep.max_knot_equality <= rep.char_tol;
  return rep;
}

std::vector<KnotBracket> knot_bracket_check(const DensityFit& fit,
                                            const SortedSample& sample,
                                            double tol) {
  const double tl = default_tol(sample, tol);
  std::vector<KnotBracket> out;
  for (std::size_t k = 0; k < fit.knot_indices.size(); ++k) {
    const std::size_t i = fit.knot_indices[k];
    const double upper = sample.ecdf_at(i);
    const double lower = upper - sample.weights()[i];
    const double fhat = fit.cdf_at_knots[i];
    out.push_back({fit.knot_set[k], lower, fhat, upper,
                   fhat >= lower - tl && fhat <= upper + tl});
  }
  return out;
}

double fit_mean(const DensityFit& fit) {
  const auto& t = fit.g.knots();
  const auto& z = fit.g.values();
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    acc += piece_poly_moment(fit, t[j], t[j + 1], z[j], z[j + 1], 1, false);
  }
  return acc;
}

double fit_abs_moment(const DensityFit& fit, int l) {
  if (l < 0) throw std::invalid_argument("fit_abs_moment: l must be >= 0");
  if (fit.index && !(l < fit.index->r - 1.0)) {
    throw std::invalid_argument(
        "fit_abs_moment: l too large for integrability (requires l < r-1)");
  }
  const auto& t = fit.g.knots();
  const auto& z = fit.g.values();
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    double a = t[j], b = t[j + 1], u = z[j], v = z[j + 1];
    if (a < 0.0 && b > 0.0) {
      const double g0 = fit.g(0.0);
      acc += piece_poly_moment(fit, a, 0.0, u, g0, l, true);
      acc += piece_poly_moment(fit, 0.0, b, g0, v, l, false);
    } else if (b <= 0.0) {
      acc += piece_poly_moment(fit, a, b, u, v, l, true);
    } else {
      acc += piece_poly_moment(fit, a, b, u, v, l, false);
    }
  }
  return acc;
}

MomentReport moment_checks(const DensityFit& fit, const SortedSample& sample,
                           int l_max, double tol) {
  if (l_max < 1) throw std::invalid_argument("moment_checks: l_max must be >= 1");
  MomentReport rep;
  rep.mean_fit = fit_mean(fit);
  rep.mean_sample = sample.mean();
  rep.mean_abs_error = std::abs(rep.mean_fit - rep.mean_sample);
  const double s = fit.index ? fit.index->s : 0.0;
  for (int l = 1; l <= l_max; ++l) {
    MomentComparison cmp;
    cmp.order = l;
    cmp.moment_fit = fit_abs_moment(fit, l);
    double mq = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      mq += sample.weights()[i] * std::pow(std::abs(sample.points()[i]), l);
    }
    cmp.moment_sample = mq;
    cmp.inequality_applies = s > -1.0 / (1.0 + l);
    cmp.satisfied = cmp.moment_fit <= cmp.moment_sample + tol * (1.0 + mq);
    rep.comparisons.push_back(cmp);
  }
  return rep;
}

std::vector<ConvexOrderResult> convex_order_check(
    const DensityFit& fit, const SortedSample& sample,
    const std::vector<ConvexTestFn>& test_fns, double tol) {
  const auto& t = fit.g.knots();
  std::vector<ConvexOrderResult> out;
  for (const auto& h : test_fns) {
    ConvexOrderResult res;
    res.name = h.name;
    res.integrable = true;
    double ip = 0.0;
    if (h.piecewise_linear) {
      // refine the knot grid by the kinks of h; h is linear on each piece,
      // so the integral against the fitted density is closed-form
      std::vector<double> cuts(t.begin(), t.end());
      for (double c : h.kinks) {
        if (c > t.front() && c < t.back()) cuts.push_back(c);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        const double a = cuts[j], b = cuts[j + 1];
        const double u = fit.g(a), v = fit.g(b);
        const double len = b - a;
        const double m0 = seg_mp(fit, u, v, 0);
        const double m1 = seg_mp(fit, u, v, 1);
        const double ha = h.eval(a), hb = h.eval(b);
        ip += len * (ha * m0 + (hb - ha) * m1);
      }
    } else {
      for (std::size_t j = 0; j + 1 < t.size(); ++j) {
        const double a = t[j], b = t[j + 1];
        auto integrand = [&](double x) { return h.eval(x) * fit.density(x); };
        ip += adaptive_simpson(integrand, a, b, 1e-11);
      }
    }
    double iq = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      iq += sample.weights()[i] * h.eval(sample.points()[i]);
    }
    if (!std::isfinite(ip) || !std::isfinite(iq)) {
      res.integrable = false;
      res.integral_fit = ip;
      res.integral_sample = iq;
      res.satisfied = false;
    } else {
      res.integral_fit = ip;
      res.integral_sample = iq;
      res.satisfied = ip <= iq + tol * (1.0 + std::abs(iq));
    }
    out.push_back(res);
  }
  return out;
}

ProjectionCheckReport population_projection_check(
    const AnalyticCDF& G, const AnalyticCDF& F, const std::vector<double>& grid,
    const ProjectionCheckOptions& opts) {
  if (grid.size() < 3) {
    throw std::invalid_argument("population_projection_check: grid too small");
  }
  ProjectionCheckReport rep;
  rep.grid = grid;
  rep.residual.assign(grid.size(), 0.0);
  auto diff = [&](double x) { return F.cdf(x) - G.cdf(x); };
  const bool closed = F.has_integrated && G.has_integrated;
  if (closed) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rep.residual[i] = F.integrated_cdf(grid[i]) - G.integrated_cdf(grid[i]);
    }
    const double far = std::max(std::abs(grid.front()), std::abs(grid.back())) * 1e6 + 1e6;
    rep.total_integral = (F.integrated_cdf(far) - G.integrated_cdf(far));
  } else {
    double acc = integrate_left_tail(diff, grid.front(), 1e-12);
    rep.residual[0] = acc;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      acc += adaptive_simpson(diff, grid[i - 1], grid[i], 1e-13);
      rep.residual[i] = acc;
    }
    rep.total_integral = acc + integrate_right_tail(diff, grid.back(), 1e-12);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rep.max_positive = std::max(rep.max_positive, rep.residual[i]);
    if (std::abs(rep.residual[i]) <= opts.tol) {
      rep.equality_points.push_back(grid[i]);
    }
  }
  if (opts.has_candidate_g) {
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      const double dl = grid[i] - grid[i - 1];
      const double dr = grid[i + 1] - grid[i];
      const double delta = std::min(dl, dr);
      const double mid = 0.5 * (opts.candidate_g(grid[i] + delta) +
                                opts.candidate_g(grid[i] - delta));
      if (opts.candidate_g(grid[i]) < mid - 1e-14 * std::abs(mid)) {
        rep.strict_convexity_points.push_back(grid[i]);
        if (std::abs(rep.residual[i]) > opts.tol) rep.strict_equality_ok = false;
      }
    }
  }
  rep.pass = std::abs(rep.total_integral) <= opts.tol &&
             rep.max_positive <= opts.tol && rep.strict_equality_ok;
  return rep;
}

}  // namespace scd
