#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fjb/numerics.hpp"

namespace fjb::harmonics {

/// C_n^nu(x) by the three-term recurrence. nu = 0 (the n = 2 sphere) is rejected
/// with DomainError; it never arises for p, q >= 4.
double gegenbauer(int n, double nu, double x);

/// Power-basis coefficients c_k of C_n^nu(x) = sum_k c_k x^k.
std::vector<double> gegenbauer_coefficients(int n, double nu);

/// Area of S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

/// Degree-a zonal harmonic C_a^{(n-2)/2}(<y, pole>) on S^{n-1}.
struct ZonalHarmonic {
  int degree = 0;
  int sphere_dim = 3;
  Eigen::VectorXd pole;

  /// Unit pole e_n.
  static ZonalHarmonic standard(int degree, int sphere_dim);
  double operator()(const Eigen::VectorXd& y) const;
};

/// int_0^pi g(cos th) sin^k(th) dth with an n-point Gauss-Legendre rule.
double polar_integral(const std::function<double(double)>& g, int sin_power, int nodes);

struct Integral {
  double value = 0.0;
  double err_est = 0.0;  // |Q(n) - Q(n/2)|
};

/// || C_a^{(n-2)/2}(<., pole>) ||^2 over S^{n-1}, by quadrature. n >= 3.
Integral zonal_norm_sq(int a, int n, const numerics::QuadratureSpec& spec = {});

/// int over S^{n-2} of C_a^{(n-2)/2}(x) C_b^{(n-3)/2}(x), x the coordinate along a
/// pole lying in the subsphere. n >= 4.
Integral pairing_subsphere(int a, int b, int n, const numerics::QuadratureSpec& spec = {});

/// int over S^{n-1} of C_a^{(n-2)/2} C_c^{(n-2)/2} about a common pole. n >= 3.
Integral pairing_fullsphere(int a, int c, int n, const numerics::QuadratureSpec& spec = {});

/// Multiplicity of the SO(n-1)-type b in the SO(n)-type a: 1 iff 0 <= b <= a.
int so_branching_multiplicity(int a, int b);

struct KTypePairing {
  bool nonzero = false;
  double witness_value = 0.0;   // signed pairing of the maximizing witness
  int witness_index = 0;        // 0: zonal; j + 1: projected y_1^j C_{a-j}(y_n)
  double threshold = 0.0;       // 1e-8 ||f_a|| ||f_b||
  double err_est = 0.0;
  std::vector<double> pairings;  // one per witness, same order as witness_index
};

/// Scans a spanning family of SO(n-2)-invariant degree-a harmonics on S^{n-1},
/// restricts each to the subsphere {y_1 = 0} and pairs it with the degree-b
/// zonal harmonic of S^{n-2} (pole e_n). Witnesses are normalized to ||f_a||.
KTypePairing ktype_pairing_nonzero(int a, int b, int n, const numerics::QuadratureSpec& spec = {});

}  // namespace fjb::harmonics
