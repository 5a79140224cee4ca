#include "fjb/fjrep.hpp"

#include <cmath>
#include <sstream>

#include "fjb/errors.hpp"
#include "fjb/geometry.hpp"
#include "fjb/harmonics.hpp"

namespace fjb::fjrep {

namespace {

std::string validate(int p, int q, HalfInt lambda, SpaceTag tag, int& a_out) {
  std::ostringstream os;
  if (p < 4 || q < 4) {
    os << "standing assumption p, q >= 4 violated: (p, q) = (" << p << ", " << q << ")";
    return os.str();
  }
  if (lambda <= HalfInt{}) {
    os << "lambda > 0 required (square integrability), got lambda = " << lambda;
    return os.str();
  }
  const int pe = tag == SpaceTag::G1_space ? p - 1 : p;
  const int qe = tag == SpaceTag::G2_space ? q - 1 : q;
  const HalfInt a = lambda - HalfInt::from_int(1) + HalfInt::half(pe - qe);
  if (!a.is_integer() || a < HalfInt{}) {
    os << "harmonic degree a = lambda - 1 + (p - q)/2 = " << a << " must be a non-negative integer";
    return os.str();
  }
  a_out = static_cast<int>(a.to_int());
  return {};
}

FJParam build(int p, int q, HalfInt lambda, SpaceTag tag, int a) {
  FJParam f;
  f.p = p;
  f.q = q;
  f.lambda = lambda;
  f.tag = tag;
  f.a = a;
  const int pe = f.p_eff();
  const int qe = f.q_eff();
  f.exponent = -lambda + HalfInt::from_int(1) - HalfInt::half(pe + qe);
  f.min_ktype = lambda + HalfInt::half(pe - qe) - HalfInt::from_int(1);
  f.levi = "SO(" + std::to_string(pe) + "," + std::to_string(qe - 2) + ")xSO(0,2)";
  return f;
}

}  // namespace

const char* to_string(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::G_on_H:
      return "G/H";
    case SpaceTag::G1_space:
      return "G1";
    case SpaceTag::G2_space:
      return "G2";
  }
  return "?";
}

FJParam make_fj_param(int p, int q, HalfInt lambda, SpaceTag tag) {
  int a = 0;
  if (auto err = validate(p, q, lambda, tag, a); !err.empty()) throw InvalidParameter(err);
  return build(p, q, lambda, tag, a);
}

std::optional<FJParam> try_make_fj_param(int p, int q, HalfInt lambda, SpaceTag tag) {
  int a = 0;
  if (!validate(p, q, lambda, tag, a).empty()) return std::nullopt;
  return build(p, q, lambda, tag, a);
}

InfChar::InfChar(std::vector<HalfInt> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (!(entries_[i - 1] > entries_[i])) throw InvalidParameter("infinitesimal character must be strictly decreasing");
}

std::vector<std::int64_t> InfChar::twice() const {
  std::vector<std::int64_t> out;
  out.reserve(entries_.size());
  for (auto v : entries_) out.push_back(v.twice());
  return out;
}

InfChar display_inf_char(int n_total, HalfInt lambda) {
  const int m = n_total / 2;
  std::vector<HalfInt> e;
  e.reserve(m);
  for (int i = 0; i < m; ++i) e.push_back(HalfInt::half(n_total - 2 * i));
  if (m > 0) e[0] = lambda + HalfInt::half(n_total);
  return InfChar(std::move(e));
}

InfChar inf_char(const FJParam& param) { return display_inf_char(param.p_eff() + param.q_eff(), param.lambda); }

std::vector<HalfInt> harish_chandra_param(const FJParam& param) {
  const int n = param.p_eff() + param.q_eff();
  const int m = n / 2;
  std::vector<HalfInt> e(m);
  for (int i = 0; i < m; ++i) e[i] = n % 2 ? HalfInt::half(2 * (m - i) - 1) : HalfInt::from_int(m - 1 - i);
  if (m > 0) e[0] += param.lambda;
  return e;
}

weyl::WeylGroup weyl_group(const FJParam& param) {
  const int n = param.p_eff() + param.q_eff();
  return {n % 2 ? weyl::Family::B : weyl::Family::D, n / 2};
}

bool is_self_dual(const FJParam& param) {
  const auto hc = harish_chandra_param(param);
  std::vector<HalfInt> neg(hc.size());
  for (std::size_t i = 0; i < hc.size(); ++i) neg[i] = -hc[i];
  return weyl::conjugate(weyl_group(param), hc, neg);
}

double fj_eval(const FJParam& param, const Eigen::VectorXd& y_prime, double t) {
  const int qe = param.q_eff();
  if (y_prime.size() != qe) throw InvalidParameter("y' must lie in R^{q'}");
  const double fa = harmonics::gegenbauer(param.a, 0.5 * (qe - 2), y_prime[qe - 1]);
  return fa * std::pow(std::cosh(t), param.exponent.to_double());
}

double zonal_max(const FJParam& param) { return harmonics::gegenbauer(param.a, 0.5 * (param.q_eff() - 2), 1.0); }

double decay_rate(const FJParam& param) { return -param.exponent.to_double(); }

double decay_constant(const FJParam& param) {
  return std::pow(2.0, std::abs(param.exponent.to_double())) * zonal_max(param);
}

L2Norm l2_norm_sq(const FJParam& param, const numerics::QuadratureSpec& spec) {
  const int pe = param.p_eff();
  const int qe = param.q_eff();
  L2Norm out;
  out.sphere = harmonics::sphere_area(pe);
  const auto zonal = harmonics::zonal_norm_sq(param.a, qe, spec);
  const auto radial = geometry::radial_integral_numeric(pe - 1, qe - 1 + 2.0 * param.exponent.to_double(), spec);
  out.zonal = zonal.value;
  out.radial = radial.value;
  out.value = out.sphere * out.zonal * out.radial;
  out.err_est = out.sphere * (zonal.err_est * std::abs(out.radial) + radial.err_est * std::abs(out.zonal));
  return out;
}

}  // namespace fjb::fjrep
