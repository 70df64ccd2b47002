#include "scd/families.hpp"

#include <cmath>
#include <stdexcept>

namespace scd {

QTauFamily::QTauFamily(double tau) : tau_(tau) {
  if (!(tau > 2.0)) throw std::invalid_argument("QTauFamily: tau must be > 2");
  coef_ = (tau - 1.0) / (2.0 * (tau - 2.0));
}

double QTauFamily::pdf(double x) const {
  return coef_ * std::pow(1.0 + std::abs(x) / (tau_ - 2.0), -tau_);
}

double QTauFamily::pdf_deriv(double x) const {
  const double c = tau_ - 2.0;
  const double base = std::pow(1.0 + std::abs(x) / c, -tau_ - 1.0);
  const double d = -coef_ * tau_ / c * base;
  return x >= 0.0 ? d : -d;
}

double QTauFamily::cdf(double x) const {
  const double c = tau_ - 2.0;
  if (x <= 0.0) return 0.5 * std::pow(1.0 - x / c, -(tau_ - 1.0));
  return 1.0 - 0.5 * std::pow(1.0 + x / c, -(tau_ - 1.0));
}

double QTauFamily::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("QTauFamily::quantile: p must be in (0,1)");
  }
  const double c = tau_ - 2.0;
  if (p <= 0.5) return c * (1.0 - std::pow(2.0 * p, -1.0 / (tau_ - 1.0)));
  return -c * (1.0 - std::pow(2.0 * (1.0 - p), -1.0 / (tau_ - 1.0)));
}

double QTauFamily::integrated_cdf(double x) const {
  const double c = tau_ - 2.0;
  if (x <= 0.0) return 0.5 * std::pow(1.0 - x / c, -(tau_ - 2.0));
  // symmetry: H(x) = x + H(-x)
  return x + 0.5 * std::pow(1.0 + x / c, -(tau_ - 2.0));
}

double QTauFamily::abs_moment(double l) const {
  if (!(l < tau_ - 1.0)) {
    throw std::invalid_argument("QTauFamily::abs_moment: divergent (needs l < tau-1)");
  }
  if (l == 0.0) return 1.0;
  // E|X|^l = (tau-1)(tau-2)^l B(l+1, tau-1-l)
  const double c = tau_ - 2.0;
  const double logB = std::lgamma(l + 1.0) + std::lgamma(tau_ - 1.0 - l) -
                      std::lgamma(tau_);
  return (tau_ - 1.0) * std::pow(c, l) * std::exp(logB);
}

AnalyticCDF QTauFamily::analytic_cdf() const {
  AnalyticCDF a;
  const QTauFamily self = *this;
  a.cdf = [self](double x) { return self.cdf(x); };
  a.integrated_cdf = [self](double x) { return self.integrated_cdf(x); };
  a.has_integrated = true;
  return a;
}

std::vector<double> QTauFamily::sample(SplitMix64& rng, std::size_t n) const {
  std::vector<double> out(n);
  for (auto& x : out) x = quantile(rng.next_uniform());
  return out;
}

QTauFamily renyi_projection_oracle(double tau, double s) {
  if (!(tau > 2.0)) throw std::invalid_argument("renyi_projection_oracle: tau must be > 2");
  if (!(s > -1.0 / tau && s < 0.0)) {
    throw std::invalid_argument(
        "renyi_projection_oracle: requires -1/tau < s < 0");
  }
  const double r = -1.0 / s;
  if (!(r > 2.0)) {
    throw std::invalid_argument("renyi_projection_oracle: requires -1/s > 2");
  }
  return QTauFamily(r);
}

double StudentT3::pdf(double x) const {
  const double u = 1.0 + x * x / 3.0;
  return 2.0 / (M_PI * std::sqrt(3.0)) / (u * u);
}

double StudentT3::pdf_deriv(double x) const {
  const double u = 1.0 + x * x / 3.0;
  return 2.0 / (M_PI * std::sqrt(3.0)) * (-2.0) * (2.0 * x / 3.0) / (u * u * u);
}

double StudentT3::cdf(double x) const {
  const double u = x / std::sqrt(3.0);
  return 0.5 + (std::atan(u) + u / (1.0 + u * u)) / M_PI;
}

double StudentT3::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("StudentT3::quantile: p must be in (0,1)");
  }
  if (p == 0.5) return 0.0;
  // bisection bracket, then Newton polish
  double lo = -1.0, hi = 1.0;
  while (cdf(lo) > p) lo *= 2.0;
  while (cdf(hi) < p) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p) lo = mid; else hi = mid;
    if (hi - lo < 1e-14 * (1.0 + std::abs(hi))) break;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double f = cdf(x) - p;
    const double d = pdf(x);
    if (d <= 0.0) break;
    x -= f / d;
  }
  return x;
}

std::vector<double> StudentT3::sample(SplitMix64& rng, std::size_t n) const {
  std::vector<double> out(n);
  for (auto& x : out) x = quantile(rng.next_uniform());
  return out;
}

NormalFamily::NormalFamily(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("NormalFamily: sigma must be > 0");
}

double NormalFamily::pdf(double x) const {
  const double z = (x - mu_) / sigma_;
  return std::exp(-0.5 * z * z) / (sigma_ * std::sqrt(2.0 * M_PI));
}

double NormalFamily::pdf_deriv(double x) const {
  const double z = (x - mu_) / sigma_;
  return -z / sigma_ * pdf(x);
}

double NormalFamily::cdf(double x) const {
  return normal_cdf((x - mu_) / sigma_);
}

double NormalFamily::quantile(double p) const {
  return mu_ + sigma_ * normal_quantile(p);
}

std::vector<double> NormalFamily::sample(SplitMix64& rng, std::size_t n) const {
  std::vector<double> out(n);
  for (auto& x : out) x = quantile(rng.next_uniform());
  return out;
}

Family make_family(const std::string& name, double param) {
  Family fam;
  fam.name = name;
  if (name == "qtau") {
    QTauFamily q(param);
    fam.pdf = [q](double x) { return q.pdf(x); };
    fam.pdf_deriv = [q](double x) { return q.pdf_deriv(x); };
    fam.quantile = [q](double p) { return q.quantile(p); };
  } else if (name == "student_t3") {
    StudentT3 t;
    fam.pdf = [t](double x) { return t.pdf(x); };
    fam.pdf_deriv = [t](double x) { return t.pdf_deriv(x); };
    fam.quantile = [t](double p) { return t.quantile(p); };
  } else if (name == "normal") {
    NormalFamily nf(0.0, param > 0.0 ? param : 1.0);
    fam.pdf = [nf](double x) { return nf.pdf(x); };
    fam.pdf_deriv = [nf](double x) { return nf.pdf_deriv(x); };
    fam.quantile = [nf](double p) { return nf.quantile(p); };
  } else {
    throw std::invalid_argument("make_family: unknown family '" + name + "'");
  }
  return fam;
}

std::vector<double> sample_family(const Family& fam, SplitMix64& rng,
                                  std::size_t n) {
  std::vector<double> out(n);
  for (auto& x : out) x = fam.quantile(rng.next_uniform());
  return out;
}

}  // namespace scd
