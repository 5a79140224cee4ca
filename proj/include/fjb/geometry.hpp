#pragma once

#include <Eigen/Dense>
#include <random>

#include "fjb/numerics.hpp"

namespace fjb::geometry {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Subgroup { G1, G2 };

const char* to_string(Subgroup s);

/// The hyperboloid X(p,q) = {Q(xi, xi) = -1}, Q of signature (p, q), with p, q >= 4.
class HyperboloidChart {
 public:
  HyperboloidChart(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }

 private:
  int p_;
  int q_;
};

/// Coordinates (y, y', t) of the chart; y in S^{p-1}, y' in S^{q-1}, t >= 0.
struct ChartPoint {
  Vector y;
  Vector y_prime;
  double t = 0.0;
};

/// Q(u, v) = sum_{i<p} u_i v_i - sum_{i>=p} u_i v_i
double quadratic_form(int p, const Vector& u, const Vector& v);

/// (y sinh t, y' cosh t). Throws InvalidParameter for mis-sized or non-unit inputs.
Vector phi(const HyperboloidChart& chart, const ChartPoint& pt);

/// sinh^{p-1}(t) cosh^{q-1}(t)
double measure_weight(const HyperboloidChart& chart, double t);

/// X(p-1, q) (orbit of G1) or X(p, q-1) (orbit of G2) inside X(p, q).
struct SuborbitDescriptor {
  Subgroup which;
  int p;                 // signature of the sub-hyperboloid
  int q;
  int first_sphere_dim;  // S^{first} x S^{second} x R+
  int second_sphere_dim;

  /// sinh^{p-1}(t) cosh^{q-1}(t) for the sub-hyperboloid's own signature.
  double measure_weight(double t) const;
};

/// Requires the suborbit to keep p, q >= 4 (p >= 5 for G1, q >= 5 for G2).
SuborbitDescriptor suborbit(const HyperboloidChart& chart, Subgroup which);

// Radial integrals R(a, c) = int_0^inf sinh^a(t) cosh^c(t) dt.
// They converge iff a > -1 and a + c < 0.

bool radial_converges(double a_exp, double c_exp);

/// (1/2) B((a+1)/2, -(a+c)/2). Throws DivergenceError outside the convergence region.
double radial_integral_closed(double a_exp, double c_exp);

struct RadialResult {
  double value = 0.0;
  double err_est = 0.0;
};

/// x = tanh t, then Gauss-Legendre on [0, 1) with polynomial grading toward any
/// endpoint where the transformed integrand is non-smooth. err_est compares the
/// rule against one with half the nodes. Throws DivergenceError, or ToleranceError
/// when err_est exceeds max(abs_tol, rel_tol |value|).
RadialResult radial_integral_numeric(double a_exp, double c_exp, const numerics::QuadratureSpec& spec);

/// int_0^T sinh^a cosh^c dt (defined for any c; a > -1).
double radial_integral_truncated(double a_exp, double c_exp, double upper, const numerics::QuadratureSpec& spec);

/// Blocks of g in SO_0(p, q): [[A1 A2], [A3 A4]], A1 p x p, A4 q x q.
struct BlockDecomposition {
  Matrix A1;
  Matrix A2;
  Matrix A3;
  Matrix A4;
};

/// diag(I_p, -I_q)
Matrix form_matrix(int p, int q);

/// g^T J g = J to `tol`, det g = 1, det A1 > 0 and det A4 > 0 (identity component).
bool in_identity_component(int p, const Matrix& g, double tol = 1e-8);

/// Throws NotInGroup when g is not in SO_0(p, q) to 1e-8.
BlockDecomposition block_decompose(const HyperboloidChart& chart, const Matrix& g);

struct EllipsoidGap {
  double q_min = 0.0;  // min_i (sqrt(l_i) - sqrt(l_i - 1)), l_i eigenvalues of A4^T A4
  double bound = 0.0;  // (1/4) (tr A4^T A4)^{-1}
};

EllipsoidGap ellipsoid_gap(const BlockDecomposition& blocks);

/// g^{-1} = J g^T J for g in O(p, q).
Matrix group_inverse(int p, const Matrix& g);

/// s(g) = tr(g g^T) + tr(g^{-1} g^{-T}) in the defining representation.
double scale(int p, const Matrix& g);

/// Q-antisymmetric Z (Z^T J + J Z = 0) with free entries uniform in [-1, 1].
Matrix random_lie_algebra_element(int p, int q, std::mt19937_64& rng);

/// exp(Z) for a random Lie algebra element; lands in the identity component.
Matrix random_group_element(int p, int q, std::mt19937_64& rng);

/// exp(s (E_{i, p+j} + E_{p+j, i})), 0-based i < p, j < q.
Matrix hyperbolic_rotation(int p, int q, double s, int i = 0, int j = 0);

}  // namespace fjb::geometry
