#include "fjb/numerics.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>

#include "fjb/errors.hpp"

namespace fjb::numerics {

std::int64_t HalfInt::to_int() const {
  if (!is_integer()) throw InvalidParameter("HalfInt " + str() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

void QuadratureSpec::validate() const {
  if (radial_nodes < 2 || sphere_nodes < 2)
    throw InvalidParameter("quadrature node counts must be >= 2");
  if (!std::isfinite(abs_tol) || !std::isfinite(rel_tol) || abs_tol < 0 || rel_tol < 0)
    throw InvalidParameter("quadrature tolerances must be finite and non-negative");
}

QuadratureSpec QuadratureSpec::with_nodes(int nodes) {
  QuadratureSpec spec;
  spec.radial_nodes = nodes;
  spec.sphere_nodes = nodes;
  return spec;
}

GaussRule gauss_legendre_rule(int n) {
  if (n < 1) throw InvalidParameter("Gauss-Legendre rule needs n >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    // Refresh the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const GaussRule& cached_gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(gauss_legendre_rule(n));
  return *slot;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& rule = cached_gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta requires positive arguments");
  if (x + y < 160.0) return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

}  // namespace fjb::numerics
