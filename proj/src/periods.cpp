#include "fjb/periods.hpp"

#include <cmath>
#include <sstream>

#include "fjb/errors.hpp"
#include "fjb/harmonics.hpp"

namespace fjb::periods {

namespace {

constexpr double kNonzeroRel = 1e-8;
const HalfInt kMinusHalf = HalfInt::half(-1);

fjrep::SpaceTag space_of(Subgroup which) {
  return which == Subgroup::G1 ? fjrep::SpaceTag::G1_space : fjrep::SpaceTag::G2_space;
}

const char* target_name(Subgroup which) { return which == Subgroup::G1 ? "nu" : "mu"; }

// Throws unless lambda is valid and the target has an integral degree.
HalfInt checked_target_degree(int p, int q, Subgroup which, HalfInt lambda, HalfInt target) {
  fjrep::make_fj_param(p, q, lambda);
  std::ostringstream os;
  if (target <= HalfInt{}) {
    os << target_name(which) << " > 0 required, got " << target;
    throw InvalidParameter(os.str());
  }
  const HalfInt d = target_degree(p, q, which, target);
  if (!d.is_integer()) {
    os << "target degree " << d << " for " << target_name(which) << " = " << target << " is not an integer";
    throw InvalidParameter(os.str());
  }
  return d;
}

[[noreturn]] void throw_divergence(Subgroup which, HalfInt lambda, HalfInt target) {
  std::ostringstream os;
  os << "period integral diverges: lambda + " << target_name(which) << " = " << (lambda + target)
     << " is not > -1/2";
  throw DivergenceError(os.str(), (lambda + target).to_double(), -0.5);
}

PeriodVerdict compute(Subgroup which, int p, int q, HalfInt lambda, HalfInt target,
                      const numerics::QuadratureSpec& spec, bool use_witness) {
  spec.validate();
  PeriodVerdict v;
  v.subgroup = which;
  v.p = p;
  v.q = q;
  v.lambda = lambda;
  v.target = target;
  v.converges = which == Subgroup::G1 ? converges_G1(lambda, target) : converges_G2(lambda, target);
  if (!v.converges) return v;

  v.target_degree = checked_target_degree(p, q, which, lambda, target);
  const auto lam = fjrep::make_fj_param(p, q, lambda);
  v.a = lam.a;
  v.predicate_nonzero =
      which == Subgroup::G1 ? nonvanishing_G1(p, q, lambda, target) : nonvanishing_G2(p, q, lambda, target);
  const auto tgt = fjrep::try_make_fj_param(p, q, target, space_of(which));
  v.target_valid = tgt.has_value();
  if (!v.target_valid) return v;

  const int d = tgt->a;
  v.parity_match = (v.a - d) % 2 == 0;
  const double e_sum = lam.exponent.to_double() + tgt->exponent.to_double();
  auto& f = v.factors;
  harmonics::Integral pairing;
  if (which == Subgroup::G2) {
    f.sphere = harmonics::sphere_area(p);
    f.radial_a_exp = p - 1;
    f.radial_c_exp = (q - 2) + e_sum;
    f.norm_a = std::sqrt(harmonics::zonal_norm_sq(v.a, q, spec).value);
    f.norm_target = std::sqrt(harmonics::zonal_norm_sq(d, q - 1, spec).value);
    if (use_witness) {
      const auto w = harmonics::ktype_pairing_nonzero(v.a, d, q, spec);
      pairing = {w.witness_value, w.err_est};
      v.witness_used = true;
      v.witness_index = w.witness_index;
    } else {
      pairing = harmonics::pairing_subsphere(v.a, d, q, spec);
    }
  } else {
    f.sphere = harmonics::sphere_area(p - 1);
    f.radial_a_exp = p - 2;
    f.radial_c_exp = (q - 1) + e_sum;
    f.norm_a = std::sqrt(harmonics::zonal_norm_sq(v.a, q, spec).value);
    f.norm_target = std::sqrt(harmonics::zonal_norm_sq(d, q, spec).value);
    pairing = harmonics::pairing_fullsphere(v.a, d, q, spec);
  }
  if (!geometry::radial_converges(f.radial_a_exp, f.radial_c_exp)) throw_divergence(which, lambda, target);
  const auto radial = geometry::radial_integral_numeric(f.radial_a_exp, f.radial_c_exp, spec);
  f.pairing = pairing.value;
  f.radial = radial.value;
  v.value = f.sphere * f.pairing * f.radial;
  v.err_est = f.sphere * (pairing.err_est * std::abs(f.radial) + radial.err_est * std::abs(f.pairing));
  v.threshold = kNonzeroRel * f.sphere * f.norm_a * f.norm_target * std::abs(f.radial);
  v.nonzero = std::abs(*v.value) > v.threshold;
  return v;
}

}  // namespace

bool converges_G2(HalfInt lambda, HalfInt mu) { return lambda + mu > kMinusHalf; }
bool converges_G1(HalfInt lambda, HalfInt nu) { return lambda + nu > kMinusHalf; }

HalfInt target_degree(int p, int q, Subgroup which, HalfInt target) {
  const HalfInt one = HalfInt::from_int(1);
  return which == Subgroup::G2 ? target - one + HalfInt::half(p - q + 1) : target - one + HalfInt::half(p - 1 - q);
}

bool nonvanishing_G2(int p, int q, HalfInt lambda, HalfInt mu) {
  const HalfInt b = checked_target_degree(p, q, Subgroup::G2, lambda, mu);
  const HalfInt a = lambda - HalfInt::from_int(1) + HalfInt::half(p - q);
  return HalfInt{} <= b && b <= a;
}

bool nonvanishing_G1(int p, int q, HalfInt lambda, HalfInt nu) {
  checked_target_degree(p, q, Subgroup::G1, lambda, nu);
  return nu == lambda + HalfInt::half(1);
}

PeriodVerdict period_integral_G2(int p, int q, HalfInt lambda, HalfInt mu, const numerics::QuadratureSpec& spec,
                                 bool use_witness) {
  if (!converges_G2(lambda, mu)) throw_divergence(Subgroup::G2, lambda, mu);
  return compute(Subgroup::G2, p, q, lambda, mu, spec, use_witness);
}

PeriodVerdict period_integral_G1(int p, int q, HalfInt lambda, HalfInt nu, const numerics::QuadratureSpec& spec) {
  if (!converges_G1(lambda, nu)) throw_divergence(Subgroup::G1, lambda, nu);
  return compute(Subgroup::G1, p, q, lambda, nu, spec, false);
}

PeriodVerdict evaluate_period(Subgroup which, int p, int q, HalfInt lambda, HalfInt target,
                              const numerics::QuadratureSpec& spec, bool use_witness) {
  return compute(which, p, q, lambda, target, spec, use_witness && which == Subgroup::G2);
}

BranchingVerdict branching_verdict(int p, int q, HalfInt lambda, Subgroup which, HalfInt target,
                                   const numerics::QuadratureSpec& spec, bool use_witness) {
  BranchingVerdict out;
  out.verdict = which == Subgroup::G1 ? period_integral_G1(p, q, lambda, target, spec)
                                      : period_integral_G2(p, q, lambda, target, spec, use_witness);
  out.hom_nonzero = out.verdict.predicate_nonzero;
  out.admissible_restriction = which == Subgroup::G1;
  return out;
}

}  // namespace fjb::periods
