#include "scd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace scd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- banded SPD solve, bandwidth 2, LDL^T ----------------------------------
// Storage: d0 = diagonal, d1[i] = A(i,i+1), d2[i] = A(i,i+2).

struct Band2 {
  std::vector<double> d0, d1, d2;
  void resize(std::size_t n) {
    d0.assign(n, 0.0);
    d1.assign(n > 0 ? n - 1 : 0, 0.0);
    d2.assign(n > 1 ? n - 2 : 0, 0.0);
  }
};

// Solves A x = rhs in place. Returns false on a nonpositive pivot.
bool band2_solve(const Band2& A, std::vector<double>& rhs) {
  const std::size_t n = A.d0.size();
  std::vector<double> D(n), l1(n, 0.0), l2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 2) l2[i] = A.d2[i - 2] / D[i - 2];
    if (i >= 1) {
      double a = A.d1[i - 1];
      if (i >= 2) a -= l2[i] * l1[i - 1] * D[i - 2];
      l1[i] = a / D[i - 1];
    }
    double di = A.d0[i];
    if (i >= 1) di -= l1[i] * l1[i] * D[i - 1];
    if (i >= 2) di -= l2[i] * l2[i] * D[i - 2];
    if (!(di > 0.0) || !std::isfinite(di)) return false;
    D[i] = di;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 1) rhs[i] -= l1[i] * rhs[i - 1];
    if (i >= 2) rhs[i] -= l2[i] * rhs[i - 2];
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= D[i];
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n) rhs[i] -= l1[i + 1] * rhs[i + 1];
    if (i + 2 < n) rhs[i] -= l2[i + 2] * rhs[i + 2];
  }
  return true;
}

bool band2_solve_ridged(Band2 A, std::vector<double> rhs,
                        std::vector<double>& out) {
  double scale = 0.0;
  for (double d : A.d0) scale = std::max(scale, std::abs(d));
  double ridge = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Band2 B = A;
    if (ridge > 0.0) {
      for (auto& d : B.d0) d += ridge;
    }
    out = rhs;
    if (band2_solve(B, out)) return true;
    ridge = (ridge == 0.0) ? 1e-14 * std::max(scale, 1.0) : ridge * 100.0;
  }
  return false;
}

// ---- problem assembly --------------------------------------------------------
// One structure serves both the full grid (nodes = support points) and the
// reduced grid of the polish phase (nodes = active knots, data weights
// accumulated onto the nodes through the linear interpolant).

struct Grid {
  std::vector<double> t;   // node abscissas
  std::vector<double> w;   // accumulated data weights per node
  bool logc = false;
  double beta = 0.0;       // power regime only
  double r = 0.0;
  SegmentIntegralScheme scheme;
  double floor = -kInf;    // hard positivity floor (power regime)

  std::size_t n() const { return t.size(); }
};

double grid_value(const Grid& G, const std::vector<double>& z) {
  const std::size_t n = G.n();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!G.logc && !(z[i] > 0.0)) return kInf;
    acc += G.w[i] * z[i];
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double len = G.t[j + 1] - G.t[j];
    const double seg =
        G.logc ? len * exp_m0(z[j], z[j + 1])
               : len * pow_m0(z[j], z[j + 1], G.beta, G.scheme) * (-1.0 / G.beta);
    acc += seg;
  }
  return std::isfinite(acc) ? acc : kInf;
}

void grid_grad(const Grid& G, const std::vector<double>& z,
               std::vector<double>& grad) {
  const std::size_t n = G.n();
  grad.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) grad[i] = G.w[i];
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double len = G.t[j + 1] - G.t[j];
    double m0, m1;
    if (G.logc) {
      m0 = exp_m0(z[j], z[j + 1]);
      m1 = exp_m1(z[j], z[j + 1]);
    } else {
      m0 = pow_m0(z[j], z[j + 1], G.beta - 1.0, G.scheme);
      m1 = pow_m1(z[j], z[j + 1], G.beta - 1.0, G.scheme);
    }
    grad[j] -= len * (m0 - m1);
    grad[j + 1] -= len * m1;
  }
}

void grid_hess(const Grid& G, const std::vector<double>& z, Band2& H) {
  const std::size_t n = G.n();
  H.resize(n);
  const double c = G.logc ? 1.0 : G.r;
  const double gm = G.beta - 2.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double len = G.t[j + 1] - G.t[j];
    double m0, m1, m2;
    if (G.logc) {
      m0 = exp_m0(z[j], z[j + 1]);
      m1 = exp_m1(z[j], z[j + 1]);
      m2 = exp_m2(z[j], z[j + 1]);
    } else {
      m0 = pow_m0(z[j], z[j + 1], gm, G.scheme);
      m1 = pow_m1(z[j], z[j + 1], gm, G.scheme);
      m2 = pow_m2(z[j], z[j + 1], gm, G.scheme);
    }
    H.d0[j] += c * len * (m0 - 2.0 * m1 + m2);
    H.d1[j] += c * len * (m1 - m2);
    H.d0[j + 1] += c * len * m2;
  }
}

// Second divided difference at interior node i.
double second_diff(const Grid& G, const std::vector<double>& z, std::size_t i) {
  const double hl = G.t[i] - G.t[i - 1];
  const double hr = G.t[i + 1] - G.t[i];
  return (z[i + 1] - z[i]) / hr - (z[i] - z[i - 1]) / hl;
}

// ---- barrier phase -----------------------------------------------------------

struct BarrierState {
  std::vector<double> z;
  int iterations = 0;
  double final_mu = 0.0;
  double final_grad_norm = 0.0;
  double final_barrier = 0.0;
  bool stalled = false;
};

double barrier_value(const Grid& G, const std::vector<double>& z) {
  const std::size_t n = G.n();
  double phi = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d = second_diff(G, z, i);
    if (!(d > 0.0)) return kInf;
    phi -= std::log(d);
  }
  if (!G.logc) {
    for (std::size_t i = 0; i < n; ++i) {
      const double s = z[i] - G.floor;
      if (!(s > 0.0)) return kInf;
      phi -= std::log(s);
    }
  }
  return phi;
}

void add_barrier_derivs(const Grid& G, const std::vector<double>& z, double mu,
                        std::vector<double>& grad, Band2& H) {
  const std::size_t n = G.n();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = G.t[i] - G.t[i - 1];
    const double hr = G.t[i + 1] - G.t[i];
    const double a = 1.0 / hl, b = -(1.0 / hl + 1.0 / hr), c = 1.0 / hr;
    const double d = second_diff(G, z, i);
    const double gfac = -mu / d;
    grad[i - 1] += gfac * a;
    grad[i] += gfac * b;
    grad[i + 1] += gfac * c;
    const double hfac = mu / (d * d);
    H.d0[i - 1] += hfac * a * a;
    H.d0[i] += hfac * b * b;
    H.d0[i + 1] += hfac * c * c;
    H.d1[i - 1] += hfac * a * b;
    H.d1[i] += hfac * b * c;
    H.d2[i - 1] += hfac * a * c;
  }
  if (!G.logc) {
    for (std::size_t i = 0; i < n; ++i) {
      const double s = z[i] - G.floor;
      grad[i] -= mu / s;
      H.d0[i] += mu / (s * s);
    }
  }
}

// Largest step keeping all linear inequality margins strictly positive.
double max_feasible_step(const Grid& G, const std::vector<double>& z,
                         const std::vector<double>& d) {
  const std::size_t n = G.n();
  double amax = kInf;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double cur = second_diff(G, z, i);
    const double dir = second_diff(G, d, i);
    if (dir < 0.0) amax = std::min(amax, -cur / dir);
  }
  if (!G.logc) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] < 0.0) amax = std::min(amax, -(z[i] - G.floor) / d[i]);
    }
  }
  return amax;
}

// Damped Newton on L + mu * barrier until the decrement is small.
// Returns accepted steps; appends to the trace.
int center_stage(const Grid& G, std::vector<double>& z, double mu,
                 const SolverOptions& opts, int budget,
                 std::vector<TraceEntry>* trace, double* out_gnorm,
                 bool* stalled) {
  const std::size_t n = G.n();
  std::vector<double> grad, dir;
  Band2 H;
  int steps = 0;
  bool first = true;
  double phi = grid_value(G, z) + mu * barrier_value(G, z);
  const double stage_tol = std::max(1e-2 * mu, opts.grad_tol);
  while (steps < budget) {
    grid_grad(G, z, grad);
    grid_hess(G, z, H);
    add_barrier_derivs(G, z, mu, grad, H);
    double gnorm = 0.0;
    for (double g : grad) gnorm = std::max(gnorm, std::abs(g));
    if (out_gnorm) *out_gnorm = gnorm;
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -grad[i];
    if (!band2_solve_ridged(H, rhs, dir)) {
      if (stalled) *stalled = true;
      break;
    }
    double dec2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) dec2 -= grad[i] * dir[i];
    if (!(dec2 > 0.0) || 0.5 * dec2 <= stage_tol) break;
    double alpha = std::min(1.0, 0.99 * max_feasible_step(G, z, dir));
    bool accepted = false;
    std::vector<double> zt(n);
    for (int bt = 0; bt < 60 && alpha > 1e-18; ++bt) {
      for (std::size_t i = 0; i < n; ++i) zt[i] = z[i] + alpha * dir[i];
      const double lt = grid_value(G, zt);
      const double bt_val = barrier_value(G, zt);
      const double phit = lt + mu * bt_val;
      if (std::isfinite(phit) && phit <= phi - 1e-4 * alpha * dec2) {
        z.swap(zt);
        phi = phit;
        ++steps;
        if (trace) trace->push_back({mu, lt, phit, first});
        first = false;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (stalled) *stalled = true;
      break;
    }
  }
  return steps;
}

BarrierState run_barrier(const Grid& G, std::vector<double> z0,
                         const SolverOptions& opts,
                         std::vector<TraceEntry>* trace) {
  BarrierState st;
  st.z = std::move(z0);
  double mu = opts.barrier_mu0;
  int budget = opts.max_newton_iters;
  while (mu >= opts.barrier_mu_min && budget > 0) {
    double gnorm = 0.0;
    bool stalled = false;
    const int used =
        center_stage(G, st.z, mu, opts, budget, trace, &gnorm, &stalled);
    st.iterations += used;
    budget -= used;
    st.final_mu = mu;
    st.final_grad_norm = gnorm;
    st.stalled = st.stalled || stalled;
    mu *= opts.barrier_shrink;
  }
  st.final_barrier = barrier_value(G, st.z);
  return st;
}

// ---- active-set polish ---------------------------------------------------------

std::vector<std::size_t> detect_active_knots(const Grid& G,
                                             const std::vector<double>& z,
                                             double rel_tol) {
  const std::size_t n = G.n();
  std::vector<double> slope(n - 1);
  double smax = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    slope[j] = (z[j + 1] - z[j]) / (G.t[j + 1] - G.t[j]);
    smax = std::max(smax, std::abs(slope[j]));
  }
  std::vector<std::size_t> K;
  K.push_back(0);
  const double thresh = rel_tol * std::max(smax, 1e-300);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (slope[i] - slope[i - 1] > thresh) K.push_back(i);
  }
  K.push_back(n - 1);
  return K;
}

Grid reduced_grid(const Grid& G, const std::vector<std::size_t>& K) {
  Grid R;
  R.logc = G.logc;
  R.beta = G.beta;
  R.r = G.r;
  R.scheme = G.scheme;
  R.floor = G.floor;
  R.t.reserve(K.size());
  for (std::size_t k : K) R.t.push_back(G.t[k]);
  R.w.assign(K.size(), 0.0);
  std::size_t l = 0;
  for (std::size_t i = 0; i < G.n(); ++i) {
    while (l + 2 < K.size() && G.t[i] >= R.t[l + 1]) ++l;
    const double len = R.t[l + 1] - R.t[l];
    const double tau = (G.t[i] - R.t[l]) / len;
    R.w[l] += G.w[i] * (1.0 - tau);
    R.w[l + 1] += G.w[i] * tau;
  }
  return R;
}

// Unconstrained damped Newton on the reduced problem (positivity kept by the
// line search in the power regime). Returns accepted steps, -1 on failure.
int polish_newton(const Grid& R, std::vector<double>& v) {
  const std::size_t p = R.n();
  std::vector<double> grad, dir, vt(p);
  Band2 H;
  double val = grid_value(R, v);
  if (!std::isfinite(val)) return -1;
  int steps = 0;
  for (int it = 0; it < 60; ++it) {
    grid_grad(R, v, grad);
    grid_hess(R, v, H);
    std::vector<double> rhs(p);
    for (std::size_t i = 0; i < p; ++i) rhs[i] = -grad[i];
    if (!band2_solve_ridged(H, rhs, dir)) return steps > 0 ? steps : -1;
    double dec2 = 0.0;
    for (std::size_t i = 0; i < p; ++i) dec2 -= grad[i] * dir[i];
    if (!(dec2 > 0.0) || 0.5 * dec2 <= 1e-26 * (1.0 + std::abs(val))) break;
    double alpha = 1.0;
    if (!R.logc) {
      for (std::size_t i = 0; i < p; ++i) {
        if (dir[i] < 0.0) {
          alpha = std::min(alpha, 0.99 * -(v[i] - 0.5 * R.floor) / dir[i]);
        }
      }
    }
    bool ok = false;
    for (int bt = 0; bt < 60 && alpha > 1e-18; ++bt) {
      for (std::size_t i = 0; i < p; ++i) vt[i] = v[i] + alpha * dir[i];
      const double valt = grid_value(R, vt);
      if (std::isfinite(valt) && valt <= val - 1e-4 * alpha * dec2) {
        v.swap(vt);
        val = valt;
        ok = true;
        ++steps;
        break;
      }
      alpha *= 0.5;
    }
    if (!ok) break;
  }
  return steps;
}

void expand_reduced(const Grid& G, const std::vector<std::size_t>& K,
                    const std::vector<double>& v, std::vector<double>& z) {
  z.assign(G.n(), 0.0);
  for (std::size_t l = 0; l + 1 < K.size(); ++l) {
    const double a = G.t[K[l]], b = G.t[K[l + 1]];
    for (std::size_t i = K[l]; i <= K[l + 1]; ++i) {
      const double tau = (G.t[i] - a) / (b - a);
      z[i] = v[l] * (1.0 - tau) + v[l + 1] * tau;
    }
  }
}

// ---- shared driver ---------------------------------------------------------

struct Problem {
  Grid G;
  std::optional<RenyiIndex> index;
  const SortedSample* sample;
};

std::vector<double> default_start(const Problem& P, int kind) {
  const auto& t = P.G.t;
  const std::size_t n = t.size();
  const double range = t.back() - t.front();
  const double mid = 0.5 * (t.front() + t.back());
  std::vector<double> z(n);
  double level;
  if (P.index) {
    level = std::pow(range, -P.index->s);
  } else {
    level = std::log(range);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double q = (t[i] - mid) / (0.5 * range);
    const double ql = (t[i] - t.front()) / range;
    const double bump = (kind == 0) ? 0.05 * q * q
                                    : 0.15 * ql * ql + 0.05 * ql * ql * ql * ql;
    if (P.index) {
      z[i] = level * (1.0 + bump);
    } else {
      z[i] = level + bump * std::max(1.0, std::abs(level));
    }
  }
  return z;
}

// Projects arbitrary values onto the strictly feasible cone: isotonic slopes
// plus a tiny convex bump, floored in the power regime.
std::vector<double> repair_start(const Problem& P, std::vector<double> z) {
  const auto& t = P.G.t;
  const std::size_t n = t.size();
  std::vector<double> slope(n - 1), h(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    h[j] = t[j + 1] - t[j];
    slope[j] = (z[j + 1] - z[j]) / h[j];
  }
  pava_nondecreasing(slope, h);
  double scale = 1e-300;
  for (double x : z) scale = std::max(scale, std::abs(x));
  const double range = t.back() - t.front();
  const double mid = 0.5 * (t.front() + t.back());
  std::vector<double> out(n);
  out[0] = z[0];
  for (std::size_t j = 0; j + 1 < n; ++j) out[j + 1] = out[j] + slope[j] * h[j];
  for (std::size_t i = 0; i < n; ++i) {
    const double q = (t[i] - mid) / (0.5 * range);
    out[i] += 1e-6 * scale * q * q;
    if (P.index) out[i] = std::max(out[i], 2.0 * P.G.floor + 1e-12 * scale);
  }
  return out;
}

FitResult solve_problem(Problem P, std::vector<double> start,
                        const SolverOptions& opts) {
  opts.validate();
  const SortedSample& sample = *P.sample;
  if (sample.size() < 2) {
    throw DegenerateSample("fit: need at least 2 distinct support points");
  }
  SolveReport report;
  if (P.index && P.index->s <= -0.5) {
    report.warnings.push_back(
        "s <= -1/2: population projections may be ill-posed off the model");
  }

  BarrierState st = run_barrier(P.G, std::move(start), opts, &report.trace);
  report.iterations = st.iterations;
  report.final_mu = st.final_mu;
  report.final_grad_norm = st.final_grad_norm;
  report.barrier_value = st.final_barrier;
  if (st.stalled) {
    report.warnings.push_back("barrier phase stalled before full centering");
  }

  const double char_tol =
      opts.char_tol >= 0.0 ? opts.char_tol : 1e-7 * sample.range();

  auto build = [&](const std::vector<double>& z) {
    PLConvexFn g(P.G.t, z, /*require_positive=*/!P.G.logc);
    return make_fit(std::move(g), P.index, grid_value(P.G, z), P.G.scheme);
  };

  DensityFit best = build(st.z);
  CharReport best_cert = characterization_residuals(best, sample, char_tol);

  if (opts.polish) {
    std::vector<std::size_t> K =
        detect_active_knots(P.G, st.z, kKnotSlopeThreshold);
    std::vector<double> z = st.z;
    for (int round = 0; round < 10; ++round) {
      ++report.polish_rounds;
      Grid R = reduced_grid(P.G, K);
      std::vector<double> v(K.size());
      for (std::size_t l = 0; l < K.size(); ++l) v[l] = z[K[l]];
      const int steps = polish_newton(R, v);
      if (steps < 0) break;
      report.iterations += std::max(steps, 0);

      // convexity across active knots must survive; otherwise drop the knot
      bool dropped = false;
      if (K.size() >= 3) {
        double smax = 1e-300;
        std::vector<double> sl(K.size() - 1);
        for (std::size_t l = 0; l + 1 < K.size(); ++l) {
          sl[l] = (v[l + 1] - v[l]) / (R.t[l + 1] - R.t[l]);
          smax = std::max(smax, std::abs(sl[l]));
        }
        double worst = -kInf;
        std::size_t worst_l = 0;
        for (std::size_t l = 0; l + 2 < K.size(); ++l) {
          const double defect = sl[l] - sl[l + 1];
          if (defect > worst) {
            worst = defect;
            worst_l = l + 1;
          }
        }
        if (worst > 1e-12 * smax) {
          K.erase(K.begin() + static_cast<std::ptrdiff_t>(worst_l));
          dropped = true;
        }
      }
      if (dropped) continue;

      std::vector<double> z_full;
      expand_reduced(P.G, K, v, z_full);
      DensityFit cand = build(z_full);
      CharReport cert = characterization_residuals(cand, sample, char_tol);
      const double cand_res = std::max(cert.max_positive, cert.max_knot_equality);
      const double best_res =
          std::max(best_cert.max_positive, best_cert.max_knot_equality);
      if (cand_res <= best_res || cert.pass) {
        best = std::move(cand);
        best_cert = cert;
        z = z_full;
      }
      if (cert.max_positive > 0.25 * char_tol) {
        // insert the worst violated support point and re-run
        std::size_t arg = 0;
        double worst = -kInf;
        for (std::size_t i = 1; i + 1 < cert.residual.size(); ++i) {
          if (cert.residual[i] > worst &&
              std::find(K.begin(), K.end(), i) == K.end()) {
            worst = cert.residual[i];
            arg = i;
          }
        }
        if (arg == 0) break;
        K.insert(std::upper_bound(K.begin(), K.end(), arg), arg);
        continue;
      }
      break;
    }
  }

  best.max_char_residual =
      std::max(best_cert.max_positive, best_cert.max_knot_equality);
  report.char_residual = best.max_char_residual;
  const bool mass_ok = std::abs(best.total_mass - 1.0) <= opts.mass_tol;
  report.converged = best_cert.pass && mass_ok && !st.stalled;
  if (!mass_ok) {
    report.warnings.push_back("total mass outside tolerance");
  }
  return FitResult{std::move(best), std::move(report)};
}

Problem make_power_problem(const SortedSample& sample, const RenyiIndex& index,
                           const SolverOptions& opts) {
  Problem P;
  P.index = index;
  P.sample = &sample;
  P.G.t = sample.points();
  P.G.w = sample.weights();
  P.G.logc = false;
  P.G.beta = index.beta;
  P.G.r = index.r;
  P.G.scheme = opts.scheme;
  const double level = std::pow(sample.range(), -index.s);
  P.G.floor = opts.eps_floor_rel * level;
  return P;
}

Problem make_log_problem(const SortedSample& sample,
                         const SolverOptions& opts) {
  Problem P;
  P.sample = &sample;
  P.G.t = sample.points();
  P.G.w = sample.weights();
  P.G.logc = true;
  P.G.scheme = opts.scheme;
  return P;
}

}  // namespace

void SolverOptions::validate() const {
  if (max_newton_iters <= 0) {
    throw std::invalid_argument("SolverOptions: max_newton_iters must be > 0");
  }
  if (!(barrier_mu0 > 0.0) || !(barrier_mu_min > 0.0) ||
      !(barrier_mu_min <= barrier_mu0)) {
    throw std::invalid_argument("SolverOptions: invalid barrier schedule");
  }
  if (!(barrier_shrink > 0.05 && barrier_shrink < 0.9)) {
    throw std::invalid_argument(
        "SolverOptions: barrier_shrink must be in (0.05, 0.9)");
  }
  if (!(grad_tol > 0.0) || !(mass_tol > 0.0) || !(eps_floor_rel > 0.0)) {
    throw std::invalid_argument("SolverOptions: tolerances must be positive");
  }
  scheme.validate();
}

FitResult fit_renyi(const SortedSample& sample, const RenyiIndex& index,
                    const SolverOptions& opts) {
  Problem P = make_power_problem(sample, index, opts);
  auto z0 = default_start(P, opts.init_kind);
  return solve_problem(std::move(P), std::move(z0), opts);
}

FitResult fit_renyi_from(const SortedSample& sample, const RenyiIndex& index,
                         std::vector<double> start, const SolverOptions& opts) {
  Problem P = make_power_problem(sample, index, opts);
  if (start.size() != sample.size()) {
    throw std::invalid_argument("fit_renyi_from: start size mismatch");
  }
  auto z0 = repair_start(P, std::move(start));
  return solve_problem(std::move(P), std::move(z0), opts);
}

FitResult fit_logconcave(const SortedSample& sample,
                         const SolverOptions& opts) {
  Problem P = make_log_problem(sample, opts);
  auto z0 = default_start(P, opts.init_kind);
  return solve_problem(std::move(P), std::move(z0), opts);
}

FitResult fit_logconcave_from(const SortedSample& sample,
                              std::vector<double> start,
                              const SolverOptions& opts) {
  Problem P = make_log_problem(sample, opts);
  if (start.size() != sample.size()) {
    throw std::invalid_argument("fit_logconcave_from: start size mismatch");
  }
  auto z0 = repair_start(P, std::move(start));
  return solve_problem(std::move(P), std::move(z0), opts);
}

std::vector<FitResult> warm_start_path(const SortedSample& sample,
                                       const std::vector<double>& s_list,
                                       const SolverOptions& opts) {
  if (s_list.empty()) return {};
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    if (!(s_list[i] > -1.0 && s_list[i] < 0.0)) {
      throw std::invalid_argument("warm_start_path: s values must be in (-1,0)");
    }
    if (i > 0 && !(std::abs(s_list[i]) < std::abs(s_list[i - 1]))) {
      throw std::invalid_argument(
          "warm_start_path: |s| must be strictly decreasing");
    }
  }
  std::vector<FitResult> out;
  out.reserve(s_list.size());
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    const RenyiIndex idx(s_list[i]);
    if (i == 0) {
      out.push_back(fit_renyi(sample, idx, opts));
    } else {
      const auto& prev = out.back().fit.g.values();
      const double p = s_list[i] / s_list[i - 1];
      std::vector<double> start(prev.size());
      for (std::size_t j = 0; j < prev.size(); ++j) {
        start[j] = std::pow(prev[j], p);
      }
      SolverOptions warm = opts;
      warm.barrier_mu0 = std::max(opts.barrier_mu0 * 1e-3, opts.barrier_mu_min);
      out.push_back(fit_renyi_from(sample, idx, std::move(start), warm));
    }
  }
  return out;
}

void pava_nondecreasing(std::vector<double>& y, const std::vector<double>& w) {
  const std::size_t n = y.size();
  std::vector<double> val(n), wt(n);
  std::vector<std::size_t> count(n);
  std::size_t top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    val[top] = y[i];
    wt[top] = w[i];
    count[top] = 1;
    while (top > 0 && val[top - 1] > val[top]) {
      const double tw = wt[top - 1] + wt[top];
      val[top - 1] = (val[top - 1] * wt[top - 1] + val[top] * wt[top]) / tw;
      wt[top - 1] = tw;
      count[top - 1] += count[top];
      --top;
    }
    ++top;
  }
  std::size_t i = 0;
  for (std::size_t b = 0; b < top; ++b) {
    for (std::size_t k = 0; k < count[b]; ++k) y[i++] = val[b];
  }
}

}  // namespace scd
