#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fjb::numerics {

/// Exact element of Z/2, stored as twice its value.
///
/// All representation parameters (lambda, mu, nu, harmonic degrees, inf-char
/// entries) are carried as HalfInt so that predicates such as
/// `mu + 1/2 <= lambda` are decided exactly.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }
  /// numerator/2
  static constexpr HalfInt half(std::int64_t numerator) { return HalfInt(numerator); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }
  /// Throws InvalidParameter when the value is not integral.
  std::int64_t to_int() const;

  /// "5/2", "-1/2", "3"
  std::string str() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt h) { return HalfInt(k * h.twice_); }
  friend constexpr HalfInt operator*(HalfInt h, std::int64_t k) { return HalfInt(k * h.twice_); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) {
    return a.twice_ <=> b.twice_;
  }

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// Node counts and tolerances shared by every integral in the library.
struct QuadratureSpec {
  int radial_nodes = 200;
  int sphere_nodes = 128;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;

  /// Throws InvalidParameter unless node counts are >= 2 and tolerances are finite, >= 0.
  void validate() const;
  /// Both node counts set to `nodes`, default tolerances.
  static QuadratureSpec with_nodes(int nodes);
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1]; nodes ascending.
GaussRule gauss_legendre_rule(int n);

/// Thread-safe memoized variant for hot loops. The reference stays valid for the
/// lifetime of the process.
const GaussRule& cached_gauss_legendre(int n);

/// Integral of f over [a, b] with the n-point rule.
double integrate(const std::function<double(double)>& f, double a, double b, int n);

double log_gamma(double x);
double beta(double x, double y);

}  // namespace fjb::numerics
