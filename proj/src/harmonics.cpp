#include "fjb/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fjb/errors.hpp"

namespace fjb::harmonics {

namespace {

constexpr double kNonzeroRel = 1e-8;
constexpr double kGramTol = 1e-10;

double check_nu(double nu) {
  if (nu == 0.0) throw DomainError("gegenbauer: nu = 0 is the degenerate n = 2 sphere");
  if (!(nu > -0.5)) throw DomainError("gegenbauer: nu must exceed -1/2");
  return nu;
}

Integral two_level(const std::function<double(int)>& rule_at, int nodes) {
  const double fine = rule_at(nodes);
  const double coarse = rule_at(std::max(1, nodes / 2));
  return {fine, std::abs(fine - coarse)};
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Monomials y_1^i y_n^k with i + k <= deg, indexed in graded order.
struct MonomialBasis {
  std::vector<std::pair<int, int>> exps;
  explicit MonomialBasis(int deg) {
    for (int d = 0; d <= deg; ++d)
      for (int i = 0; i <= d; ++i) exps.emplace_back(i, d - i);
  }
  int size() const { return static_cast<int>(exps.size()); }
  int index(int i, int k) const {
    const int d = i + k;
    return d * (d + 1) / 2 + i;
  }
};

// int_{S^{n-1}} y_1^i y_n^k, with y_1 = cos(phi), y_n = sin(phi) cos(th).
class MomentTable {
 public:
  MomentTable(int max_deg, int n, int nodes) : max_deg_(max_deg), table_((max_deg + 1) * (max_deg + 1), 0.0) {
    const double area = sphere_area(n - 2);
    for (int i = 0; i <= max_deg; ++i) {
      for (int k = 0; i + k <= max_deg; ++k) {
        if (i % 2 || k % 2) continue;
        const double phi_part = polar_integral([i](double c) { return ipow(c, i); }, k + n - 2, nodes);
        const double th_part = polar_integral([k](double c) { return ipow(c, k); }, n - 3, nodes);
        table_[i * (max_deg + 1) + k] = area * phi_part * th_part;
      }
    }
  }
  double operator()(int i, int k) const { return table_[i * (max_deg_ + 1) + k]; }

 private:
  int max_deg_;
  std::vector<double> table_;
};

double inner(const MonomialBasis& basis, const MomentTable& moments, const Eigen::VectorXd& u,
             const Eigen::VectorXd& v) {
  double s = 0.0;
  for (int r = 0; r < basis.size(); ++r) {
    if (u[r] == 0.0) continue;
    for (int c = 0; c < basis.size(); ++c) {
      if (v[c] == 0.0) continue;
      const auto [i1, k1] = basis.exps[r];
      const auto [i2, k2] = basis.exps[c];
      s += u[r] * v[c] * moments(i1 + i2, k1 + k2);
    }
  }
  return s;
}

// Witness j (0 = zonal about e_n, j >= 1: y_1^{j-1} C_{a-j+1}^{(n-3)/2}(y_n)) before projection.
Eigen::VectorXd raw_witness(const MonomialBasis& basis, int a, int j, int n) {
  Eigen::VectorXd coef = Eigen::VectorXd::Zero(basis.size());
  if (j == 0) {
    const auto c = gegenbauer_coefficients(a, 0.5 * (n - 2));
    for (int k = 0; k <= a; ++k) coef[basis.index(0, k)] = c[k];
    return coef;
  }
  const int pow1 = j - 1;
  const auto c = gegenbauer_coefficients(a - pow1, 0.5 * (n - 3));
  for (int k = 0; k <= a - pow1; ++k) coef[basis.index(pow1, k)] = c[k];
  return coef;
}

double pair_with_subsphere_zonal(const MonomialBasis& basis, const Eigen::VectorXd& coef, int a, int b, int n,
                                 int nodes) {
  // restriction to y_1 = 0 keeps the i = 0 coefficients, a polynomial in y_n
  std::vector<double> restricted(a + 1);
  for (int k = 0; k <= a; ++k) restricted[k] = coef[basis.index(0, k)];
  const double nu = 0.5 * (n - 3);
  auto g = [&](double x) {
    double poly = 0.0;
    for (int k = a; k >= 0; --k) poly = poly * x + restricted[k];
    return poly * gegenbauer(b, nu, x);
  };
  return sphere_area(n - 2) * polar_integral(g, n - 3, nodes);
}

}  // namespace

double gegenbauer(int n, double nu, double x) {
  if (n < 0) throw DomainError("gegenbauer: degree must be >= 0");
  check_nu(nu);
  if (n == 0) return 1.0;
  double c0 = 1.0;
  double c1 = 2.0 * nu * x;
  for (int k = 2; k <= n; ++k) {
    const double c2 = (2.0 * (k + nu - 1.0) * x * c1 - (k + 2.0 * nu - 2.0) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

std::vector<double> gegenbauer_coefficients(int n, double nu) {
  if (n < 0) throw DomainError("gegenbauer: degree must be >= 0");
  check_nu(nu);
  std::vector<double> c0{1.0};
  if (n == 0) return c0;
  std::vector<double> c1{0.0, 2.0 * nu};
  for (int k = 2; k <= n; ++k) {
    std::vector<double> c2(k + 1, 0.0);
    for (std::size_t i = 0; i < c1.size(); ++i) c2[i + 1] += 2.0 * (k + nu - 1.0) * c1[i] / k;
    for (std::size_t i = 0; i < c0.size(); ++i) c2[i] -= (k + 2.0 * nu - 2.0) * c0[i] / k;
    c0 = std::move(c1);
    c1 = std::move(c2);
  }
  return c1;
}

double sphere_area(int n) {
  if (n < 1) throw DomainError("sphere_area: n must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

ZonalHarmonic ZonalHarmonic::standard(int degree, int sphere_dim) {
  ZonalHarmonic z;
  z.degree = degree;
  z.sphere_dim = sphere_dim;
  z.pole = Eigen::VectorXd::Unit(sphere_dim, sphere_dim - 1);
  return z;
}

double ZonalHarmonic::operator()(const Eigen::VectorXd& y) const {
  return gegenbauer(degree, 0.5 * (sphere_dim - 2), y.dot(pole));
}

double polar_integral(const std::function<double(double)>& g, int sin_power, int nodes) {
  const auto& rule = numerics::cached_gauss_legendre(nodes);
  const double half = 0.5 * std::numbers::pi;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double th = half * (rule.nodes[i] + 1.0);
    sum += rule.weights[i] * g(std::cos(th)) * ipow(std::sin(th), sin_power);
  }
  return half * sum;
}

Integral zonal_norm_sq(int a, int n, const numerics::QuadratureSpec& spec) {
  spec.validate();
  if (n < 3 || a < 0) throw InvalidParameter("zonal_norm_sq needs a >= 0, n >= 3");
  const double nu = 0.5 * (n - 2);
  const double area = sphere_area(n - 1);
  return two_level(
      [&](int m) {
        return area * polar_integral([&](double x) { return std::pow(gegenbauer(a, nu, x), 2); }, n - 2, m);
      },
      spec.sphere_nodes);
}

Integral pairing_subsphere(int a, int b, int n, const numerics::QuadratureSpec& spec) {
  spec.validate();
  if (n < 4 || a < 0 || b < 0) throw InvalidParameter("pairing_subsphere needs a, b >= 0, n >= 4");
  const double nu_a = 0.5 * (n - 2);
  const double nu_b = 0.5 * (n - 3);
  const double area = sphere_area(n - 2);
  return two_level(
      [&](int m) {
        return area * polar_integral([&](double x) { return gegenbauer(a, nu_a, x) * gegenbauer(b, nu_b, x); },
                                     n - 3, m);
      },
      spec.sphere_nodes);
}

Integral pairing_fullsphere(int a, int c, int n, const numerics::QuadratureSpec& spec) {
  spec.validate();
  if (n < 3 || a < 0 || c < 0) throw InvalidParameter("pairing_fullsphere needs a, c >= 0, n >= 3");
  const double nu = 0.5 * (n - 2);
  const double area = sphere_area(n - 1);
  return two_level(
      [&](int m) {
        return area * polar_integral([&](double x) { return gegenbauer(a, nu, x) * gegenbauer(c, nu, x); },
                                     n - 2, m);
      },
      spec.sphere_nodes);
}

int so_branching_multiplicity(int a, int b) { return (0 <= b && b <= a) ? 1 : 0; }

KTypePairing ktype_pairing_nonzero(int a, int b, int n, const numerics::QuadratureSpec& spec) {
  spec.validate();
  if (n < 4 || a < 0 || b < 0) throw InvalidParameter("ktype_pairing_nonzero needs a, b >= 0, n >= 4");
  const int nodes = spec.sphere_nodes;
  const MonomialBasis basis(a);
  const MomentTable moments(2 * a, n, nodes);

  // orthonormal basis of the lower-degree invariant polynomials, Gram-Schmidt run twice
  std::vector<Eigen::VectorXd> lower;
  for (int idx = 0; idx < basis.size(); ++idx) {
    const auto [i, k] = basis.exps[idx];
    if (i + k >= a) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Unit(basis.size(), idx);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : lower) v -= inner(basis, moments, e, v) * e;
    const double nrm = std::sqrt(std::max(0.0, inner(basis, moments, v, v)));
    if (nrm > kGramTol) lower.push_back(v / nrm);
  }

  const double norm_a = std::sqrt(zonal_norm_sq(a, n, spec).value);
  const double norm_b = std::sqrt(zonal_norm_sq(b, n - 1, spec).value);
  KTypePairing out;
  out.threshold = kNonzeroRel * norm_a * norm_b;

  for (int j = 0; j <= a + 1; ++j) {
    Eigen::VectorXd w = raw_witness(basis, a, j, n);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : lower) w -= inner(basis, moments, e, w) * e;
    const double wn = std::sqrt(std::max(0.0, inner(basis, moments, w, w)));
    if (wn <= kGramTol * norm_a) {
      out.pairings.push_back(0.0);
      continue;
    }
    w *= norm_a / wn;
    const double fine = pair_with_subsphere_zonal(basis, w, a, b, n, nodes);
    const double coarse = pair_with_subsphere_zonal(basis, w, a, b, n, std::max(1, nodes / 2));
    out.pairings.push_back(fine);
    if (std::abs(fine) > std::abs(out.witness_value)) {
      out.witness_value = fine;
      out.witness_index = j;
      out.err_est = std::abs(fine - coarse);
    }
  }
  out.nonzero = std::abs(out.witness_value) > out.threshold;
  return out;
}

}  // namespace fjb::harmonics
