#include <doctest.h>

#include <boost/math/special_functions/gegenbauer.hpp>
#include <cmath>
#include <numbers>

#include "fjb/errors.hpp"
#include "fjb/harmonics.hpp"

using namespace fjb;
using namespace fjb::harmonics;
constexpr double pi = std::numbers::pi;

namespace {

// ||C_a^nu||^2 with weight (1-x^2)^{nu-1/2} on [-1,1], closed form.
double gegenbauer_weighted_norm(int a, double nu) {
  return pi * std::pow(2.0, 1.0 - 2.0 * nu) * std::tgamma(a + 2.0 * nu) /
         (std::tgamma(a + 1.0) * (a + nu) * std::tgamma(nu) * std::tgamma(nu));
}

// C_m^nu(0) from the generating function: zero for odd m.
double gegenbauer_at_zero(int m, double nu) {
  if (m % 2) return 0.0;
  const int k = m / 2;
  const double v = std::tgamma(k + nu) / (std::tgamma(nu) * std::tgamma(k + 1.0));
  return (k % 2) ? -v : v;
}

}  // namespace

TEST_CASE("gegenbauer values") {
  CHECK(gegenbauer(0, 1.5, 0.3) == 1.0);
  CHECK(gegenbauer(1, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(gegenbauer(2, 1.0, 0.5) == doctest::Approx(4 * 0.25 - 1));
  CHECK_THROWS_AS(gegenbauer(2, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(gegenbauer(2, -0.5, 0.5), DomainError);
  CHECK_THROWS_AS(gegenbauer(-1, 1.0, 0.5), DomainError);
  for (int n = 0; n <= 8; ++n)
    for (double nu : {0.5, 1.0, 1.5, 2.0, 3.5})
      for (double x = -1.0; x <= 1.0; x += 0.125) {
        CHECK(gegenbauer(n, nu, x) == doctest::Approx(boost::math::gegenbauer(n, nu, x)).epsilon(1e-12));
        const auto c = gegenbauer_coefficients(n, nu);
        double poly = 0.0;
        for (int k = n; k >= 0; --k) poly = poly * x + c[k];
        CHECK(poly == doctest::Approx(gegenbauer(n, nu, x)).epsilon(1e-12));
      }
}

TEST_CASE("sphere areas") {
  CHECK(sphere_area(1) == doctest::Approx(2.0));
  CHECK(sphere_area(2) == doctest::Approx(2 * pi));
  CHECK(sphere_area(3) == doctest::Approx(4 * pi));
  CHECK(sphere_area(4) == doctest::Approx(2 * pi * pi));
  CHECK_THROWS_AS(sphere_area(0), DomainError);
}

TEST_CASE("zonal norms") {
  for (int n : {3, 4, 5, 6}) CHECK(zonal_norm_sq(0, n).value == doctest::Approx(sphere_area(n)).epsilon(1e-13));
  // C_1^1(x) = 2x on S^3: 4 * area(S^2) * int x^2 sqrt(1-x^2) dx = 4 * 4 pi * pi / 8
  CHECK(zonal_norm_sq(1, 4).value == doctest::Approx(2 * pi * pi).epsilon(1e-13));
  for (int n : {4, 5, 6, 7})
    for (int a = 0; a <= 6; ++a) {
      const double nu = 0.5 * (n - 2);
      const double oracle = sphere_area(n - 1) * gegenbauer_weighted_norm(a, nu);
      const auto z = zonal_norm_sq(a, n);
      CHECK(z.value == doctest::Approx(oracle).epsilon(1e-12));
      CHECK(z.err_est < 1e-10 * oracle);
    }
}

TEST_CASE("zonal harmonic evaluation") {
  const auto z = ZonalHarmonic::standard(2, 4);
  Eigen::VectorXd y = Eigen::VectorXd::Unit(4, 3);
  CHECK(z(y) == doctest::Approx(gegenbauer(2, 1.0, 1.0)));
  y = Eigen::VectorXd::Unit(4, 0);
  CHECK(z(y) == doctest::Approx(gegenbauer(2, 1.0, 0.0)));
}

TEST_CASE("subsphere and fullsphere pairings") {
  for (int n : {4, 5, 6}) CHECK(pairing_subsphere(0, 0, n).value == doctest::Approx(sphere_area(n - 1)).epsilon(1e-13));
  for (int n : {4, 5, 6}) CHECK(std::abs(pairing_subsphere(1, 0, n).value) < 1e-13);
  // n = 5: C_1^{3/2} = 3x, C_1^1 = 2x over S^3: area(S^2) * 6 * int cos^2 sin^2 = 4 pi * 6 * pi/8
  CHECK(pairing_subsphere(1, 1, 5).value == doctest::Approx(3 * pi * pi).epsilon(1e-13));
  for (int n : {4, 5, 6})
    for (int a = 0; a <= 6; ++a)
      for (int c = 0; c <= 6; ++c) {
        const double v = pairing_fullsphere(a, c, n).value;
        if (a == c)
          CHECK(v == doctest::Approx(zonal_norm_sq(a, n).value).epsilon(1e-13));
        else
          CHECK(std::abs(v) < 1e-10 * zonal_norm_sq(a, n).value);
      }
  CHECK_THROWS_AS(pairing_subsphere(1, 1, 3), InvalidParameter);
}

TEST_CASE("polar integral") {
  CHECK(polar_integral([](double) { return 1.0; }, 1, 32) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(polar_integral([](double x) { return x * x; }, 0, 64) == doctest::Approx(pi / 2).epsilon(1e-13));
}

TEST_CASE("so branching multiplicity") {
  CHECK(so_branching_multiplicity(3, 2) == 1);
  CHECK(so_branching_multiplicity(2, 3) == 0);
  CHECK(so_branching_multiplicity(0, 0) == 1);
  CHECK(so_branching_multiplicity(2, -1) == 0);
}

TEST_CASE("ktype pairing examples") {
  const auto r00 = ktype_pairing_nonzero(0, 0, 5);
  CHECK(r00.nonzero);
  CHECK(std::abs(r00.witness_value) == doctest::Approx(sphere_area(4)).epsilon(1e-12));
  CHECK_FALSE(ktype_pairing_nonzero(1, 2, 5).nonzero);
  // odd gap: every invariant degree-2 harmonic restricts to something orthogonal
  // to the degree-1 zonal of the subsphere
  const auto r21 = ktype_pairing_nonzero(2, 1, 5);
  CHECK_FALSE(r21.nonzero);
  CHECK(std::abs(r21.witness_value) < r21.threshold);
  CHECK(ktype_pairing_nonzero(2, 0, 5).nonzero);
  CHECK(ktype_pairing_nonzero(3, 1, 4).nonzero);
}

TEST_CASE("ktype pairing zonal witness equals the subsphere pairing") {
  for (int n : {4, 5, 6})
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= a; ++b) {
        const auto r = ktype_pairing_nonzero(a, b, n);
        REQUIRE(!r.pairings.empty());
        CHECK(r.pairings[0] == doctest::Approx(pairing_subsphere(a, b, n).value).epsilon(1e-9).scale(1.0));
      }
}

TEST_CASE("ktype pairing nonzero pattern matches the explicit branching basis") {
  // The SO(n-2)-invariant harmonic of SO(n-1)-type b inside type a is
  // sin^b(phi) C_{a-b}^{b+(n-2)/2}(cos phi) C_b^{(n-3)/2}(cos th), phi the angle to e_1.
  // On {y_1 = 0} it restricts to C_{a-b}^{b+(n-2)/2}(0) times the zonal of the subsphere.
  for (int n : {4, 5, 6})
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) {
        const bool oracle = b <= a && gegenbauer_at_zero(a - b, b + 0.5 * (n - 2)) != 0.0;
        CHECK_MESSAGE(ktype_pairing_nonzero(a, b, n).nonzero == oracle, "a=" << a << " b=" << b << " n=" << n);
      }
}
