#pragma once

#include <functional>
#include <vector>

namespace scd {

// Power mean of order s between a and b with mixing weight theta:
//   ((1-theta) a^s + theta b^s)^(1/s)     s != 0, and a,b > 0 when s < 0
//   0                                     s < 0 and ab = 0
//   a^(1-theta) b^theta                   s = 0
//   min(a, b)                             s = -infinity
double generalized_mean(double a, double b, double theta, double s);

struct SConcavityViolation {
  double x0;
  double x1;
  double theta;
  double gap;  // M_s(f(x0), f(x1); theta) - f(mid), positive means violated
};

// Checks f(x_mid) >= M_s(f(x0), f(x1); theta) on all collinear grid triples
// (x0 < x_mid < x1 with x_mid a grid point). The tolerance is relative to
// max f on the grid.
std::vector<SConcavityViolation> check_s_concavity(
    const std::function<double(double)>& f, double s,
    const std::vector<double>& grid, double rel_tol = 1e-9);

}  // namespace scd
