#include "scd/segments.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace scd {
namespace {

// binom(gamma, n) for real gamma.
double gbinom(double gamma, int n) {
  double b = 1.0;
  for (int i = 0; i < n; ++i) b *= (gamma - i) / (i + 1);
  return b;
}

bool degenerate(double u, double v, const SegmentIntegralScheme& scheme) {
  return std::abs(v - u) <= scheme.degeneracy_threshold * std::max(std::abs(u), std::abs(v));
}

// int_0^1 tau^p (tau - 1/2)^n dtau.
double tau_moment(int p, int n) {
  double acc = 0.0;
  double coeff = 1.0;  // binom(p, q) (1/2)^(p-q), built incrementally
  for (int q = 0; q <= p; ++q) {
    if (q > 0) coeff *= 2.0 * (p - q + 1) / q;  // updates binom * 2^q
    const int m = q + n;
    if (m % 2 == 0) acc += coeff * std::ldexp(1.0, -m) / (m + 1);
  }
  return acc * std::ldexp(1.0, -p);
}

// Midpoint series for int tau^p lin^gamma, valid for small rho = delta/(2c).
double pow_series(double u, double v, double gamma, int p,
                  const SegmentIntegralScheme& scheme) {
  const double c = 0.5 * (u + v);
  const double rho = (v - u) / (2.0 * c);
  const double cg = std::pow(c, gamma);
  double acc = 0.0;
  double rn = 1.0;
  const int terms = std::max(scheme.series_terms, 3);
  for (int n = 0; n < 2 * terms; ++n) {
    const double t = tau_moment(p, n);
    if (t != 0.0) acc += gbinom(gamma, n) * rn * t;
    rn *= 2.0 * rho;
  }
  return cg * acc;
}

}  // namespace

double pow_m0(double u, double v, double gamma,
              const SegmentIntegralScheme& scheme) {
  if (!(u > 0.0) || !(v > 0.0)) {
    throw std::invalid_argument("pow_m0: u, v must be positive");
  }
  if (gamma == 0.0) return 1.0;
  if (u == v) return std::pow(u, gamma);
  if (degenerate(u, v, scheme)) return pow_series(u, v, gamma, 0, scheme);
  const double delta = v - u;
  const double lr = std::log1p(delta / u);  // log(v/u)
  if (gamma == -1.0) return lr / delta;
  const double g1 = gamma + 1.0;
  return std::pow(u, g1) * std::expm1(g1 * lr) / (g1 * delta);
}

double pow_m1(double u, double v, double gamma,
              const SegmentIntegralScheme& scheme) {
  if (!(u > 0.0) || !(v > 0.0)) {
    throw std::invalid_argument("pow_m1: u, v must be positive");
  }
  if (degenerate(u, v, scheme)) return pow_series(u, v, gamma, 1, scheme);
  const double delta = v - u;
  if (gamma == -1.0) {
    return (1.0 - u * pow_m0(u, v, -1.0, scheme)) / delta;
  }
  return (pow_m0(u, v, gamma + 1.0, scheme) - u * pow_m0(u, v, gamma, scheme)) /
         delta;
}

double pow_m2(double u, double v, double gamma,
              const SegmentIntegralScheme& scheme) {
  if (!(u > 0.0) || !(v > 0.0)) {
    throw std::invalid_argument("pow_m2: u, v must be positive");
  }
  if (degenerate(u, v, scheme)) return pow_series(u, v, gamma, 2, scheme);
  const double delta = v - u;
  if (gamma == -1.0) {
    return (0.5 - u * pow_m1(u, v, -1.0, scheme)) / delta;
  }
  const double s0 = pow_m0(u, v, gamma, scheme);
  const double s1 = pow_m0(u, v, gamma + 1.0, scheme);
  const double s2 = pow_m0(u, v, gamma + 2.0, scheme);
  return (s2 - 2.0 * u * s1 + u * u * s0) / (delta * delta);
}

double pow_mp(double u, double v, double gamma, int p,
              const SegmentIntegralScheme& scheme) {
  if (p < 0 || p > 8) throw std::invalid_argument("pow_mp: p out of range");
  if (p == 0) return pow_m0(u, v, gamma, scheme);
  if (p == 1) return pow_m1(u, v, gamma, scheme);
  if (p == 2) return pow_m2(u, v, gamma, scheme);
  if (!(u > 0.0) || !(v > 0.0)) {
    throw std::invalid_argument("pow_mp: u, v must be positive");
  }
  if (degenerate(u, v, scheme)) return pow_series(u, v, gamma, p, scheme);
  const double delta = v - u;
  if (gamma == -1.0) {
    return (1.0 / p - u * pow_mp(u, v, -1.0, p - 1, scheme)) / delta;
  }
  const double g1 = gamma + 1.0;
  return (std::pow(v, g1) - p * pow_mp(u, v, g1, p - 1, scheme)) / (g1 * delta);
}

double exp_m0(double u, double v) {
  const double delta = v - u;
  const double c = 0.5 * (u + v);
  if (std::abs(delta) < 1e-2) {
    const double x = 0.5 * delta;
    const double x2 = x * x;
    return std::exp(-c) * (1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0)));
  }
  return std::exp(-u) * (-std::expm1(-delta)) / delta;
}

double exp_m1(double u, double v) {
  const double delta = v - u;
  if (std::abs(delta) < 1e-2) {
    const double c = 0.5 * (u + v);
    // exp(-c) sum_n (-delta)^n/n! * int tau (tau-1/2)^n
    double acc = 0.0, dn = 1.0, fact = 1.0;
    for (int n = 0; n <= 8; ++n) {
      acc += dn / fact * tau_moment(1, n);
      dn *= -delta;
      fact *= (n + 1);
    }
    return std::exp(-c) * acc;
  }
  return std::exp(-u) * (1.0 - (1.0 + delta) * std::exp(-delta)) / (delta * delta);
}

double exp_m2(double u, double v) {
  const double delta = v - u;
  if (std::abs(delta) < 1e-2) {
    const double c = 0.5 * (u + v);
    double acc = 0.0, dn = 1.0, fact = 1.0;
    for (int n = 0; n <= 8; ++n) {
      acc += dn / fact * tau_moment(2, n);
      dn *= -delta;
      fact *= (n + 1);
    }
    return std::exp(-c) * acc;
  }
  return std::exp(-u) *
         (2.0 - (delta * delta + 2.0 * delta + 2.0) * std::exp(-delta)) /
         (delta * delta * delta);
}

double segment_power_integral(double u, double v, double len, double beta,
                              const SegmentIntegralScheme& scheme) {
  if (!(u > 0.0) || !(v > 0.0) || !(len > 0.0)) {
    throw std::invalid_argument(
        "segment_power_integral: u, v, len must be positive");
  }
  if (!(beta < 0.0)) {
    throw std::invalid_argument("segment_power_integral: beta must be < 0");
  }
  scheme.validate();
  return len * pow_m0(u, v, beta, scheme);
}

double segment_exp_integral(double u, double v, double len) {
  if (!(len > 0.0)) {
    throw std::invalid_argument("segment_exp_integral: len must be positive");
  }
  return len * exp_m0(u, v);
}

}  // namespace scd
