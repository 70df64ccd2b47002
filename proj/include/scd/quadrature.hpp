#pragma once

#include <cmath>
#include <functional>

namespace scd {

// Adaptive Simpson with Richardson error control. `tol` is an absolute
// tolerance for the whole interval; the recursion splits it in half per
// subinterval, which keeps the global error near tol.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12, int max_depth = 60);

// Integral of f over [a, +inf) for integrands with power-law or faster decay.
// Uses the substitution x = a + t/(1-t), t in [0,1).
double integrate_right_tail(const std::function<double(double)>& f, double a,
                            double tol = 1e-12);

// Integral of f over (-inf, b].
double integrate_left_tail(const std::function<double(double)>& f, double b,
                           double tol = 1e-12);

// Integral over the whole line: core interval plus both tails.
double integrate_line(const std::function<double(double)>& f, double core_lo,
                      double core_hi, double tol = 1e-12);

}  // namespace scd
