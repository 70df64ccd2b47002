#pragma once

#include <stdexcept>

namespace scd {

// Numerical policy for the closed-form segment integrals: below the relative
// slope cutoff the direct antiderivative cancels catastrophically and a
// midpoint Taylor series takes over.
struct SegmentIntegralScheme {
  double degeneracy_threshold = 1e-6;
  int series_terms = 4;

  void validate() const {
    if (!(degeneracy_threshold > 0.0 && degeneracy_threshold <= 1e-4)) {
      throw std::invalid_argument(
          "SegmentIntegralScheme: degeneracy_threshold must be in (0, 1e-4]");
    }
    if (series_terms < 3) {
      throw std::invalid_argument(
          "SegmentIntegralScheme: series_terms must be >= 3");
    }
  }
};

// ---- power-segment moments -------------------------------------------------
// With lin(tau) = u + tau (v-u) on tau in [0,1]:
//   pow_m0(u,v,gamma) = int_0^1        lin(tau)^gamma dtau
//   pow_m1(u,v,gamma) = int_0^1 tau    lin(tau)^gamma dtau
//   pow_m2(u,v,gamma) = int_0^1 tau^2  lin(tau)^gamma dtau
//   pow_mp(u,v,gamma,p) = int_0^1 tau^p lin(tau)^gamma dtau  (p <= 8)
// Requires u, v > 0. Exact for gamma = 0 and gamma = -1 (log branch).
double pow_m0(double u, double v, double gamma,
              const SegmentIntegralScheme& scheme = {});
double pow_m1(double u, double v, double gamma,
              const SegmentIntegralScheme& scheme = {});
double pow_m2(double u, double v, double gamma,
              const SegmentIntegralScheme& scheme = {});
double pow_mp(double u, double v, double gamma, int p,
              const SegmentIntegralScheme& scheme = {});

// ---- exponential-segment moments -------------------------------------------
//   exp_m0(u,v) = int_0^1        exp(-lin(tau)) dtau   (and m1, m2 analogues)
double exp_m0(double u, double v);
double exp_m1(double u, double v);
double exp_m2(double u, double v);

// int_0^len (u + t (v-u)/len)^beta dt for a segment of length len.
// Rejects nonpositive u, v, len and beta >= 0; beta = -1 uses the
// logarithmic antiderivative.
double segment_power_integral(double u, double v, double len, double beta,
                              const SegmentIntegralScheme& scheme = {});

// int_0^len exp(-(u + t (v-u)/len)) dt.
double segment_exp_integral(double u, double v, double len);

}  // namespace scd
