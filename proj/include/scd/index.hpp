#pragma once

#include <cmath>
#include <stdexcept>

namespace scd {

// The exponent bundle of the divergence functional. For s in (-1,0):
//   alpha = 1+s in (0,1),  beta = 1+1/s < 0,  r = -1/s > 1,
// and alpha, beta are conjugate: 1/alpha + 1/beta = 1.
struct RenyiIndex {
  double s;
  double alpha;
  double beta;
  double r;

  explicit RenyiIndex(double s_) : s(s_) {
    if (!(s > -1.0 && s < 0.0)) {
      throw std::invalid_argument("RenyiIndex: s must lie in (-1, 0)");
    }
    alpha = 1.0 + s;
    beta = 1.0 + 1.0 / s;
    r = -1.0 / s;
  }

  // Relative conjugacy defect; zero up to rounding by construction.
  double conjugacy_defect() const {
    return std::abs(1.0 / alpha + 1.0 / beta - 1.0);
  }
};

}  // namespace scd
