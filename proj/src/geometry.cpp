#include "fjb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unsupported/Eigen/MatrixFunctions>

#include "fjb/errors.hpp"

namespace fjb::geometry {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kGroupTol = 1e-8;

bool is_nonneg_integer(double v) { return v >= 0.0 && v == std::floor(v); }

// Grading exponent k for the substitution x = s^k near an endpoint where the
// integrand behaves like x^e. Smooth endpoints are left alone.
int grading_for(double endpoint_exponent) {
  if (is_nonneg_integer(endpoint_exponent)) return 1;
  const double k = std::ceil(6.0 / (endpoint_exponent + 1.0));
  return static_cast<int>(std::clamp(k, 2.0, 40.0));
}

// int_0^1 x^a (1 - x^2)^b dx, split at 1/2 with graded rules on each half.
double tanh_substituted(double a, double b, int n) {
  const auto& rule = numerics::cached_gauss_legendre(n);
  const int kl = grading_for(a);
  const int kr = grading_for(b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double s = 0.5 * (rule.nodes[i] + 1.0);
    const double w = 0.5 * rule.weights[i];

    // left half: x = s^kl / 2
    const double x = 0.5 * std::pow(s, kl);
    const double dx = 0.5 * kl * std::pow(s, kl - 1);
    sum += w * dx * std::pow(x, a) * std::pow((1.0 - x) * (1.0 + x), b);

    // right half: 1 - x = (1 - s)^kr / 2, computed without cancellation
    const double r = 1.0 - s;
    const double one_minus = 0.5 * std::pow(r, kr);
    const double xr = 1.0 - one_minus;
    const double dxr = 0.5 * kr * std::pow(r, kr - 1);
    sum += w * dxr * std::pow(xr, a) * std::pow(one_minus * (1.0 + xr), b);
  }
  return sum;
}

double log_radial_integrand(double a, double c, double t) {
  return a * std::log(std::sinh(t)) + c * std::log(std::cosh(t));
}

}  // namespace

const char* to_string(Subgroup s) { return s == Subgroup::G1 ? "g1" : "g2"; }

HyperboloidChart::HyperboloidChart(int p, int q) : p_(p), q_(q) {
  if (p < 4 || q < 4) {
    std::ostringstream os;
    os << "standing assumption p, q >= 4 violated: (p, q) = (" << p << ", " << q << ")";
    throw InvalidParameter(os.str());
  }
}

double quadratic_form(int p, const Vector& u, const Vector& v) {
  const int n = static_cast<int>(u.size());
  return u.head(p).dot(v.head(p)) - u.tail(n - p).dot(v.tail(n - p));
}

Vector phi(const HyperboloidChart& chart, const ChartPoint& pt) {
  if (pt.y.size() != chart.p() || pt.y_prime.size() != chart.q())
    throw InvalidParameter("chart point has wrong dimensions");
  if (std::abs(pt.y.norm() - 1.0) > kUnitTol || std::abs(pt.y_prime.norm() - 1.0) > kUnitTol)
    throw InvalidParameter("chart point coordinates must be unit vectors");
  if (pt.t < 0.0) throw InvalidParameter("chart point needs t >= 0");
  Vector xi(chart.dim());
  xi.head(chart.p()) = pt.y * std::sinh(pt.t);
  xi.tail(chart.q()) = pt.y_prime * std::cosh(pt.t);
  return xi;
}

double measure_weight(const HyperboloidChart& chart, double t) {
  return std::pow(std::sinh(t), chart.p() - 1) * std::pow(std::cosh(t), chart.q() - 1);
}

double SuborbitDescriptor::measure_weight(double t) const {
  return std::pow(std::sinh(t), p - 1) * std::pow(std::cosh(t), q - 1);
}

SuborbitDescriptor suborbit(const HyperboloidChart& chart, Subgroup which) {
  const int p = chart.p();
  const int q = chart.q();
  if (which == Subgroup::G1) {
    if (p < 5) throw InvalidParameter("suborbit X(p-1, q) needs p >= 5");
    return {which, p - 1, q, p - 2, q - 1};
  }
  if (q < 5) throw InvalidParameter("suborbit X(p, q-1) needs q >= 5");
  return {which, p, q - 1, p - 1, q - 2};
}

bool radial_converges(double a_exp, double c_exp) { return a_exp > -1.0 && a_exp + c_exp < 0.0; }

namespace {
void require_convergent(double a_exp, double c_exp) {
  if (radial_converges(a_exp, c_exp)) return;
  std::ostringstream os;
  os << "radial integral diverges: a = " << a_exp << ", a + c = " << a_exp + c_exp
     << " (needs a > -1 and a + c < 0)";
  throw DivergenceError(os.str(), a_exp + c_exp, 0.0);
}
}  // namespace

double radial_integral_closed(double a_exp, double c_exp) {
  require_convergent(a_exp, c_exp);
  return 0.5 * numerics::beta(0.5 * (a_exp + 1.0), -0.5 * (a_exp + c_exp));
}

RadialResult radial_integral_numeric(double a_exp, double c_exp, const numerics::QuadratureSpec& spec) {
  spec.validate();
  require_convergent(a_exp, c_exp);
  // sinh^a cosh^c dt = x^a (1 - x^2)^{-(a+c)/2 - 1} dx under x = tanh t
  const double b = -0.5 * (a_exp + c_exp) - 1.0;
  const int n = spec.radial_nodes;
  const double fine = tanh_substituted(a_exp, b, n);
  const double coarse = tanh_substituted(a_exp, b, std::max(1, n / 2));
  RadialResult result{fine, std::abs(fine - coarse)};
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(fine));
  if (result.err_est > tol) {
    std::ostringstream os;
    os << "radial integral (" << a_exp << ", " << c_exp << ") error estimate " << result.err_est
       << " exceeds tolerance " << tol;
    throw ToleranceError(os.str(), result.value, result.err_est);
  }
  return result;
}

double radial_integral_truncated(double a_exp, double c_exp, double upper, const numerics::QuadratureSpec& spec) {
  spec.validate();
  if (!(a_exp > -1.0)) throw DivergenceError("truncated radial integral needs a > -1", a_exp, -1.0);
  if (upper <= 0.0) return 0.0;
  const int per_panel = std::max(16, spec.radial_nodes / 8);
  const auto& rule = numerics::cached_gauss_legendre(per_panel);
  double total = 0.0;
  for (double lo = 0.0; lo < upper; lo += 1.0) {
    const double hi = std::min(upper, lo + 1.0);
    const double width = hi - lo;
    // the first panel carries the t^a endpoint behaviour
    const int k = lo == 0.0 ? grading_for(a_exp) : 1;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double s = 0.5 * (rule.nodes[i] + 1.0);
      const double t = lo + width * std::pow(s, k);
      const double dt = width * k * std::pow(s, k - 1);
      sum += 0.5 * rule.weights[i] * dt * std::exp(log_radial_integrand(a_exp, c_exp, t));
    }
    total += sum;
  }
  return total;
}

Matrix form_matrix(int p, int q) {
  Vector d(p + q);
  d.head(p).setOnes();
  d.tail(q).setConstant(-1.0);
  return d.asDiagonal();
}

bool in_identity_component(int p, const Matrix& g, double tol) {
  if (g.rows() != g.cols() || g.rows() <= p) return false;
  const int q = static_cast<int>(g.rows()) - p;
  const Matrix J = form_matrix(p, q);
  if ((g.transpose() * J * g - J).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(g.determinant() - 1.0) > tol * g.rows()) return false;
  return g.topLeftCorner(p, p).determinant() > 0.0 && g.bottomRightCorner(q, q).determinant() > 0.0;
}

BlockDecomposition block_decompose(const HyperboloidChart& chart, const Matrix& g) {
  const int p = chart.p();
  const int q = chart.q();
  if (g.rows() != p + q || g.cols() != p + q) throw NotInGroup("matrix size does not match the chart");
  if (!in_identity_component(p, g, kGroupTol)) throw NotInGroup("matrix is not in SO_0(p, q)");
  return {g.topLeftCorner(p, p), g.topRightCorner(p, q), g.bottomLeftCorner(q, p), g.bottomRightCorner(q, q)};
}

EllipsoidGap ellipsoid_gap(const BlockDecomposition& blocks) {
  const Matrix gram = blocks.A4.transpose() * blocks.A4;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  double q_min = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lam = std::max(1.0, solver.eigenvalues()(i));
    // sqrt(l) - sqrt(l - 1) without cancellation
    q_min = std::min(q_min, 1.0 / (std::sqrt(lam) + std::sqrt(lam - 1.0)));
  }
  return {q_min, 0.25 / gram.trace()};
}

Matrix group_inverse(int p, const Matrix& g) {
  const Matrix J = form_matrix(p, static_cast<int>(g.rows()) - p);
  return J * g.transpose() * J;
}

double scale(int p, const Matrix& g) {
  const Matrix inv = group_inverse(p, g);
  return (g * g.transpose()).trace() + (inv * inv.transpose()).trace();
}

Matrix random_lie_algebra_element(int p, int q, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int n = p + q;
  Matrix z = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = unif(rng);
      const bool mixed = (i < p) != (j < p);
      z(i, j) = v;
      z(j, i) = mixed ? v : -v;  // symmetric off-diagonal blocks, antisymmetric diagonal blocks
    }
  }
  return z;
}

Matrix random_group_element(int p, int q, std::mt19937_64& rng) {
  const Matrix z = random_lie_algebra_element(p, q, rng);
  return z.exp();
}

Matrix hyperbolic_rotation(int p, int q, double s, int i, int j) {
  Matrix g = Matrix::Identity(p + q, p + q);
  g(i, i) = std::cosh(s);
  g(p + j, p + j) = std::cosh(s);
  g(i, p + j) = std::sinh(s);
  g(p + j, i) = std::sinh(s);
  return g;
}

}  // namespace fjb::geometry
