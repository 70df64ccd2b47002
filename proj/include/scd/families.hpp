#pragma once

#include <memory>
#include <string>
#include <vector>

#include "scd/certify.hpp"
#include "scd/rng.hpp"

namespace scd {

// Reference density family
//   q_tau(x) = (tau-1)/(2(tau-2)) (1 + |x|/(tau-2))^(-tau),  tau > 2.
// Heavy-tailed, symmetric, E|X| = 1 for every tau; the -1/tau power
// transform of q_tau is piecewise linear.
class QTauFamily {
 public:
  explicit QTauFamily(double tau);

  double tau() const { return tau_; }
  double pdf(double x) const;
  double pdf_deriv(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;
  // int_{-inf}^x cdf(t) dt in closed form.
  double integrated_cdf(double x) const;
  // E|X|^l, finite for l < tau - 1.
  double abs_moment(double l) const;

  AnalyticCDF analytic_cdf() const;
  std::vector<double> sample(SplitMix64& rng, std::size_t n) const;

 private:
  double tau_;
  double coef_;  // (tau-1)/(2(tau-2))
};

// The population projection of q_tau onto the transform class with index s:
// for -1/tau < s < 0 it is q_r with r = -1/s. Parameters outside that region
// are rejected.
QTauFamily renyi_projection_oracle(double tau, double s);

// Student t with 3 degrees of freedom (smooth, heavy-tailed test family;
// its power transforms at s <= -1/4 are smooth and strictly convex).
class StudentT3 {
 public:
  double pdf(double x) const;
  double pdf_deriv(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;
  std::vector<double> sample(SplitMix64& rng, std::size_t n) const;
};

class NormalFamily {
 public:
  NormalFamily(double mu = 0.0, double sigma = 1.0);
  double pdf(double x) const;
  double pdf_deriv(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;
  std::vector<double> sample(SplitMix64& rng, std::size_t n) const;

 private:
  double mu_, sigma_;
};

// Uniform family interface used by the experiment harness.
struct Family {
  std::string name;
  std::function<double(double)> pdf;
  std::function<double(double)> pdf_deriv;
  std::function<double(double)> quantile;
};

// name in {"qtau", "student_t3", "normal"}; param is tau for qtau and the
// standard deviation for normal.
Family make_family(const std::string& name, double param);

std::vector<double> sample_family(const Family& fam, SplitMix64& rng,
                                  std::size_t n);

}  // namespace scd
