#include "scd/quadrature.hpp"

#include <cmath>

namespace scd {
namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return sign * adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double integrate_right_tail(const std::function<double(double)>& f, double a,
                            double tol) {
  auto g = [&](double t) {
    const double om = 1.0 - t;
    const double x = a + t / om;
    return f(x) / (om * om);
  };
  // stop just short of t=1; the decay of f makes the remainder negligible
  return adaptive_simpson(g, 0.0, 1.0 - 1e-9, tol);
}

double integrate_left_tail(const std::function<double(double)>& f, double b,
                           double tol) {
  return integrate_right_tail([&](double x) { return f(2.0 * b - x); }, b, tol);
}

double integrate_line(const std::function<double(double)>& f, double core_lo,
                      double core_hi, double tol) {
  return integrate_left_tail(f, core_lo, tol) +
         adaptive_simpson(f, core_lo, core_hi, tol) +
         integrate_right_tail(f, core_hi, tol);
}

}  // namespace scd
