#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "fjb/numerics.hpp"
#include "fjb/weyl.hpp"

namespace fjb::fjrep {

using numerics::HalfInt;

/// Which symmetric space the parameter lives on.
///   G_on_H:   SO_0(p, q) / SO_0(p, q-1)
///   G1_space: SO_0(p-1, q) / SO_0(p-1, q-1)
///   G2_space: SO_0(p, q-1) / SO_0(p, q-2)
enum class SpaceTag { G_on_H, G1_space, G2_space };

const char* to_string(SpaceTag tag);

struct FJParam {
  int p = 4;  // ambient signature
  int q = 4;
  HalfInt lambda;
  SpaceTag tag = SpaceTag::G_on_H;

  int a = 0;          // harmonic degree lambda - 1 + (p' - q')/2
  HalfInt exponent;   // -lambda + 1 - (p' + q')/2
  HalfInt min_ktype;  // lambda + (p' - q')/2 - 1
  std::string levi;   // SO(p', q'-2)xSO(0,2)

  /// Signature (p', q') of the space the function lives on.
  int p_eff() const { return tag == SpaceTag::G1_space ? p - 1 : p; }
  int q_eff() const { return tag == SpaceTag::G2_space ? q - 1 : q; }
};

/// Requires p, q >= 4, lambda > 0 and a a non-negative integer; throws
/// InvalidParameter naming the violated condition.
FJParam make_fj_param(int p, int q, HalfInt lambda, SpaceTag tag = SpaceTag::G_on_H);

/// Same checks, but returns nothing instead of throwing.
std::optional<FJParam> try_make_fj_param(int p, int q, HalfInt lambda, SpaceTag tag = SpaceTag::G_on_H);

/// Strictly decreasing sequence of half-integers.
class InfChar {
 public:
  /// Throws InvalidParameter if the entries are not strictly decreasing.
  explicit InfChar(std::vector<HalfInt> entries);

  const std::vector<HalfInt>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  HalfInt operator[](std::size_t i) const { return entries_[i]; }
  std::vector<std::int64_t> twice() const;

 private:
  std::vector<HalfInt> entries_;
};

/// (lambda + N/2, (N-2)/2, (N-4)/2, ...), N = p' + q', length floor(N/2).
InfChar inf_char(const FJParam& param);
InfChar display_inf_char(int n_total, HalfInt lambda);

/// (lambda, 0, ..., 0) + rho for so(N); rho = (m-1, ..., 0) or (m-1/2, ..., 1/2).
std::vector<HalfInt> harish_chandra_param(const FJParam& param);

/// Weyl group of so(p' + q'): D_m for even N, B_m for odd N.
weyl::WeylGroup weyl_group(const FJParam& param);

/// The Harish-Chandra parameter is Weyl-conjugate to its negative.
bool is_self_dual(const FJParam& param);

/// f_a(y') cosh(t)^e with f_a the zonal harmonic of S^{q'-1} about the last axis.
double fj_eval(const FJParam& param, const Eigen::VectorXd& y_prime, double t);

/// max |f_a| on the sphere (attained at the pole).
double zonal_max(const FJParam& param);

/// |F(y', t)| <= C e^{-rate t} with rate = -e and C = 2^{|e|} max|f_a|.
double decay_rate(const FJParam& param);
double decay_constant(const FJParam& param);

struct L2Norm {
  double value = 0.0;
  double err_est = 0.0;
  double sphere = 0.0;  // area of S^{p'-1}
  double zonal = 0.0;   // ||f_a||^2 on S^{q'-1}
  double radial = 0.0;  // R(p'-1, q'-1+2e)
};

/// Factored L2 norm; throws DivergenceError if the radial factor diverges.
L2Norm l2_norm_sq(const FJParam& param, const numerics::QuadratureSpec& spec = {});

}  // namespace fjb::fjrep
