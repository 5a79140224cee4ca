#pragma once

#include <optional>

#include "fjb/fjrep.hpp"
#include "fjb/geometry.hpp"
#include "fjb/numerics.hpp"

namespace fjb::periods {

using geometry::Subgroup;
using numerics::HalfInt;

/// lambda + mu > -1/2 (exact).
bool converges_G2(HalfInt lambda, HalfInt mu);
/// lambda + nu > -1/2 (exact).
bool converges_G1(HalfInt lambda, HalfInt nu);

/// Degree of the target harmonic: b = mu - 1 + (p-q+1)/2 for G2, c = nu - 1 + (p-1-q)/2 for G1.
HalfInt target_degree(int p, int q, Subgroup which, HalfInt target);

/// 0 <= b <= a. Throws InvalidParameter if (p, q, lambda) is invalid, mu <= 0, or b is
/// not an integer.
bool nonvanishing_G2(int p, int q, HalfInt lambda, HalfInt mu);
/// nu = lambda + 1/2. Same validation as nonvanishing_G2 with c in place of b.
bool nonvanishing_G1(int p, int q, HalfInt lambda, HalfInt nu);

struct PeriodFactors {
  double sphere = 0.0;   // area of the first sphere factor
  double pairing = 0.0;  // second sphere factor
  double radial = 0.0;   // R(a_exp, c_exp)
  double radial_a_exp = 0.0;
  double radial_c_exp = 0.0;
  double norm_a = 0.0;   // ||f_a||, ||f_target|| on their spheres
  double norm_target = 0.0;
};

struct PeriodVerdict {
  Subgroup subgroup = Subgroup::G2;
  int p = 4;
  int q = 4;
  HalfInt lambda;
  HalfInt target;

  bool converges = false;
  bool target_valid = false;  // the target degree is a non-negative integer
  bool parity_match = false;  // a - target_degree even
  int a = 0;
  HalfInt target_degree;
  std::optional<double> value;
  double err_est = 0.0;
  double threshold = 0.0;  // 1e-8 * sphere * ||f_a|| * ||f_target|| * |radial|
  bool nonzero = false;
  bool predicate_nonzero = false;
  bool witness_used = false;
  int witness_index = 0;
  PeriodFactors factors;

  bool agrees() const { return nonzero == predicate_nonzero; }
};

/// int over X(p, q-1) of F(lambda) F(mu), factored as sphere * pairing * radial.
/// With use_witness the pairing is the maximal harmonic witness from
/// harmonics::ktype_pairing_nonzero. Throws DivergenceError unless lambda + mu > -1/2.
PeriodVerdict period_integral_G2(int p, int q, HalfInt lambda, HalfInt mu, const numerics::QuadratureSpec& spec = {},
                                 bool use_witness = true);

/// int over X(p-1, q) of F(lambda) F(nu). Throws DivergenceError unless lambda + nu > -1/2.
PeriodVerdict period_integral_G1(int p, int q, HalfInt lambda, HalfInt nu, const numerics::QuadratureSpec& spec = {});

/// Non-throwing form for scans: divergent inputs come back with converges = false.
PeriodVerdict evaluate_period(Subgroup which, int p, int q, HalfInt lambda, HalfInt target,
                              const numerics::QuadratureSpec& spec = {}, bool use_witness = true);

struct BranchingVerdict {
  bool hom_nonzero = false;
  PeriodVerdict verdict;
  bool admissible_restriction = false;
};

/// hom_nonzero is the matching non-vanishing predicate; admissible is true for G1 and
/// false for G2.
BranchingVerdict branching_verdict(int p, int q, HalfInt lambda, Subgroup which, HalfInt target,
                                   const numerics::QuadratureSpec& spec = {}, bool use_witness = true);

}  // namespace fjb::periods
