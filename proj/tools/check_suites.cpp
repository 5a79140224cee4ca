#include <boost/rational.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "fjb/cli.hpp"
#include "fjb/errors.hpp"
#include "fjb/fjrep.hpp"
#include "fjb/geometry.hpp"
#include "fjb/harmonics.hpp"
#include "fjb/kernels.hpp"
#include "fjb/packets.hpp"
#include "fjb/periods.hpp"

namespace fjb::cli {

namespace {

using numerics::HalfInt;
using geometry::Subgroup;

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void record(bool ok, const std::string& name, const std::string& detail = {}) {
    (ok ? passed_ : failed_)++;
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out_ << "  [" << detail << ']';
    out_ << '\n';
  }
  void info(const std::string& line) { out_ << "INFO " << line << '\n'; }

  int passed() const { return passed_; }
  int failed() const { return failed_; }

 private:
  std::ostream& out_;
  int passed_ = 0;
  int failed_ = 0;
};

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

double rel_err(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

// ---------------------------------------------------------------- quadrature

void suite_quadrature(Reporter& r, std::uint64_t seed) {
  {
    double worst = 0.0;
    for (int n : {2, 4, 8, 16, 32}) {
      const auto rule = numerics::gauss_legendre_rule(n);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
        const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
        worst = std::max(worst, std::abs(s - exact));
      }
    }
    r.record(worst <= 1e-13, "gauss-legendre exact through degree 2n-1", cat("max abs err ", worst));
  }
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    using Q = boost::rational<std::int64_t>;
    auto as_q = [](HalfInt h) { return Q(h.twice(), 2); };
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const HalfInt x = HalfInt::from_twice(d(rng)), y = HalfInt::from_twice(d(rng)), z = HalfInt::from_twice(d(rng));
      if (as_q((x + y) + z) != as_q(x) + as_q(y) + as_q(z)) ++bad;
      if (x + (y + z) != (x + y) + z || x + y != y + x) ++bad;
      if (as_q(x - y) != as_q(x) - as_q(y) || as_q(-z) != -as_q(z)) ++bad;
      if ((x < y) != (as_q(x) < as_q(y)) || (x == y) != (as_q(x) == as_q(y))) ++bad;
    }
    r.record(bad == 0, "half-integer arithmetic matches rationals on 1e4 triples", cat(bad, " mismatches"));
  }
  {
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> u(0.05, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = u(rng), y = u(rng);
      worst = std::max(worst, rel_err(numerics::beta(x, y), numerics::beta(y, x)));
    }
    r.record(worst <= 1e-13, "beta symmetric", cat("max rel err ", worst));
  }
  {
    double worst = 0.0;
    for (int a : {0, 1, 2, 3, 5})
      for (int s : {-2, -4, -7}) {
        const double c = s - a;
        const auto num = geometry::radial_integral_numeric(a, c, {});
        worst = std::max(worst, rel_err(num.value, geometry::radial_integral_closed(a, c)));
      }
    r.record(worst <= 1e-9, "radial numeric matches Beta closed form", cat("max rel err ", worst));
  }
  {
    std::mt19937_64 rng(seed + 2);
    std::normal_distribution<double> n01;
    std::uniform_real_distribution<double> ut(0.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int p = 4 + static_cast<int>(rng() % 3), q = 4 + static_cast<int>(rng() % 3);
      const geometry::HyperboloidChart chart(p, q);
      geometry::ChartPoint pt;
      pt.y = Eigen::VectorXd::NullaryExpr(p, [&] { return n01(rng); }).normalized();
      pt.y_prime = Eigen::VectorXd::NullaryExpr(q, [&] { return n01(rng); }).normalized();
      pt.t = ut(rng);
      const auto xi = geometry::phi(chart, pt);
      worst = std::max(worst, std::abs(geometry::quadratic_form(p, xi, xi) + 1.0) / std::cosh(2 * pt.t));
    }
    r.record(worst <= 1e-10, "chart lands on Q = -1", cat("max scaled err ", worst));
  }
  {
    // a + c >= 0 diverges; a + c = -1 converges (the threshold is a + c < 0)
    bool grows = true;
    for (auto [a, c] : {std::pair{1.0, -1.0}, std::pair{3.0, -3.0}, std::pair{2.0, -1.0}, std::pair{0.0, 0.5}}) {
      double prev = geometry::radial_integral_truncated(a, c, 5.0, {});
      for (double t : {10.0, 20.0}) {
        const double cur = geometry::radial_integral_truncated(a, c, t, {});
        grows = grows && cur > 1.1 * prev;
        prev = cur;
      }
    }
    r.record(grows, "truncated radial integral grows > 10% per doubling when a + c >= 0");
    const double closed = geometry::radial_integral_closed(3, -4);
    const double trunc = geometry::radial_integral_truncated(3, -4, 60.0, {});
    r.record(rel_err(trunc, closed) <= 1e-9, "a + c = -1 converges to the Beta value",
             cat("R(3,-4) = ", closed, ", truncated at 60: ", trunc));
  }
}

// ---------------------------------------------------------------- harmonics

double zonal_norm_closed(int a, int n) {
  const double nu = 0.5 * (n - 2);
  const double h = std::numbers::pi * std::pow(2.0, 1.0 - 2.0 * nu) * std::tgamma(a + 2.0 * nu) /
                   (std::tgamma(a + 1.0) * (a + nu) * std::pow(std::tgamma(nu), 2));
  return harmonics::sphere_area(n - 1) * h;
}

void suite_harmonics(Reporter& r, std::uint64_t) {
  {
    double worst = 0.0;
    for (double nu : {0.5, 1.0, 1.5, 2.0})
      for (int m = 0; m <= 8; ++m)
        for (int n = 0; n < m; ++n) {
          const int k = static_cast<int>(std::lround(2 * nu - 1));  // sin power for (1-x^2)^{nu-1/2}
          auto g = [&](double x) { return harmonics::gegenbauer(m, nu, x) * harmonics::gegenbauer(n, nu, x); };
          auto gm = [&](double x) { return std::pow(harmonics::gegenbauer(m, nu, x), 2); };
          auto gn = [&](double x) { return std::pow(harmonics::gegenbauer(n, nu, x), 2); };
          const double ip = harmonics::polar_integral(g, k + 1, 128);
          const double nm = std::sqrt(harmonics::polar_integral(gm, k + 1, 128) *
                                      harmonics::polar_integral(gn, k + 1, 128));
          worst = std::max(worst, std::abs(ip) / nm);
        }
    r.record(worst <= 1e-10, "gegenbauer orthogonality", cat("max normalized |<C_m, C_n>| ", worst));
  }
  {
    double worst = 0.0;
    for (int n : {4, 5, 6})
      for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
          if ((a - b) % 2 == 0) continue;
          const double v = harmonics::pairing_subsphere(a, b, n).value;
          const double scale = std::sqrt(zonal_norm_closed(a, n) * zonal_norm_closed(b, n - 1));
          worst = std::max(worst, std::abs(v) / scale);
        }
    r.record(worst <= 1e-12, "subsphere pairing vanishes for odd a - b", cat("max normalized ", worst));
  }
  {
    double worst = 0.0;
    for (int n : {4, 5, 6})
      for (int a = 0; a <= 8; ++a) worst = std::max(worst, rel_err(harmonics::zonal_norm_sq(a, n).value,
                                                                   zonal_norm_closed(a, n)));
    r.record(worst <= 1e-10, "zonal norm quadrature matches orthogonality closed form", cat("max rel err ", worst));
  }
  {
    // corrected agreement: a - b must also be even (reflection y_1 -> -y_1 parity)
    int strict_mismatch = 0, corrected_mismatch = 0;
    for (int n : {4, 5, 6})
      for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
          const bool got = harmonics::ktype_pairing_nonzero(a, b, n).nonzero;
          const bool mult = harmonics::so_branching_multiplicity(a, b) == 1;
          if (got != mult) ++strict_mismatch;
          if (got != (mult && (a - b) % 2 == 0)) ++corrected_mismatch;
        }
    r.record(corrected_mismatch == 0, "ktype witness nonzero iff 0 <= b <= a and a - b even",
             cat(corrected_mismatch, " mismatches"));
    r.info(cat("ktype witness vs bare 0 <= b <= a: ", strict_mismatch, " mismatches (all odd a - b)"));
  }
}

// ---------------------------------------------------------------- decay

struct PQL {
  int p, q;
  HalfInt lambda;
};

std::vector<PQL> decay_grid() {
  return {{4, 4, HalfInt::from_int(1)}, {4, 4, HalfInt::from_int(2)}, {4, 4, HalfInt::from_int(3)},
          {4, 6, HalfInt::from_int(2)}, {4, 6, HalfInt::from_int(3)}, {4, 6, HalfInt::from_int(4)},
          {5, 4, HalfInt::half(1)},     {5, 4, HalfInt::half(3)},     {5, 4, HalfInt::half(5)}};
}

void suite_decay(Reporter& r, std::uint64_t seed) {
  {
    std::mt19937_64 rng(seed + 3);
    std::normal_distribution<double> n01;
    std::uniform_real_distribution<double> ut(1.0, 10.0);
    int violations = 0;
    double worst_slope = 0.0;
    for (const auto& g : decay_grid()) {
      const auto param = fjrep::make_fj_param(g.p, g.q, g.lambda);
      const double rate = fjrep::decay_rate(param);
      const double c = fjrep::decay_constant(param);
      for (int i = 0; i < 100; ++i) {
        const Eigen::VectorXd y = Eigen::VectorXd::NullaryExpr(g.q, [&] { return n01(rng); }).normalized();
        const double t = ut(rng);
        if (std::abs(fjrep::fj_eval(param, y, t)) > c * std::exp(-rate * t)) ++violations;
      }
      // least-squares slope of log|F| at the pole over t in [2, 10]
      const Eigen::VectorXd pole = Eigen::VectorXd::Unit(g.q, g.q - 1);
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const int m = 33;
      for (int k = 0; k < m; ++k) {
        const double t = 2.0 + 8.0 * k / (m - 1);
        const double y = std::log(std::abs(fjrep::fj_eval(param, pole, t)));
        sx += t, sy += y, sxx += t * t, sxy += t * y;
      }
      const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
      worst_slope = std::max(worst_slope, std::abs(slope + rate) / rate);
    }
    r.record(violations == 0, "|F| <= 2^|e| max|f_a| e^{-rate t} on 900 random points", cat(violations, " violations"));
    r.record(worst_slope <= 0.02, "log-slope of |F| matches the decay rate within 2%",
             cat("max rel dev ", worst_slope));
  }
  {
    bool finite = true, contracts = true;
    double worst_closed = 0.0;
    for (int p : {4, 5, 6})
      for (int q : {4, 5, 6})
        for (int l2 = 1; l2 <= 8; ++l2) {
          const auto param = fjrep::try_make_fj_param(p, q, HalfInt::from_twice(l2));
          if (!param) continue;
          const auto norm = fjrep::l2_norm_sq(*param);
          finite = finite && std::isfinite(norm.value) && norm.value > 0;
          const double a_exp = p - 1, c_exp = q - 1 + 2 * param->exponent.to_double();
          const double full = geometry::radial_integral_closed(a_exp, c_exp);
          worst_closed = std::max(worst_closed, rel_err(norm.radial, full));
          // tail(T) = R - R_T ~ e^{-2 lambda T}: successive differences contract by that rate
          const double lam = param->lambda.to_double();
          const double r5 = geometry::radial_integral_truncated(a_exp, c_exp, 5, {});
          const double r10 = geometry::radial_integral_truncated(a_exp, c_exp, 10, {});
          const double r20 = geometry::radial_integral_truncated(a_exp, c_exp, 20, {});
          const double d1 = r10 - r5, d2 = r20 - r10;
          if (!(d1 >= 0 && d2 >= -1e-12 * full)) contracts = false;
          if (d1 > 1e-12 * full && d2 > 1e-12 * full) {
            const double expect = std::exp(-2 * lam * 5) - std::exp(-2 * lam * 15);
            const double ratio = d2 / d1;
            if (ratio > 3.0 * expect + 1e-12) contracts = false;
          }
        }
    r.record(finite, "L2 norm finite on the valid grid");
    r.record(worst_closed <= 1e-9, "L2 radial factor matches the closed form", cat("max rel err ", worst_closed));
    r.record(contracts, "truncated L2 radial integral contracts at rate e^{-2 lambda dT}");
  }
  {
    std::mt19937_64 rng(seed + 4);
    const geometry::HyperboloidChart chart(4, 4);
    double worst_slack = std::numeric_limits<double>::infinity();
    int below_bound = 0, above_sample = 0;
    for (int i = 0; i < 100; ++i) {
      const auto g = geometry::random_group_element(4, 4, rng);
      const auto gap = geometry::ellipsoid_gap(geometry::block_decompose(chart, g));
      const double emp = kernels::empirical_gap_min_omp(geometry::block_decompose(chart, g), 10000, seed + i);
      if (gap.q_min < gap.bound) ++below_bound;
      if (gap.q_min > emp + 1e-9) ++above_sample;
      worst_slack = std::min(worst_slack, emp - gap.q_min);
    }
    r.record(below_bound == 0, "ellipsoid q_min >= (1/4)(tr A4^T A4)^{-1}", cat(below_bound, " violations"));
    r.record(above_sample == 0, "ellipsoid q_min <= sampled minimum", cat("min slack ", worst_slack));
  }
  {
    std::mt19937_64 rng(seed + 5);
    double worst_inv = 0.0;
    int submult = 0;
    for (int i = 0; i < 100; ++i) {
      const auto g1 = geometry::random_group_element(4, 4, rng);
      const auto g2 = geometry::random_group_element(4, 4, rng);
      const double s1 = geometry::scale(4, g1), s2 = geometry::scale(4, g2);
      worst_inv = std::max(worst_inv, rel_err(geometry::scale(4, geometry::group_inverse(4, g1)), s1));
      if (geometry::scale(4, g1 * g2) > s1 * s2 * (1 + 1e-12)) ++submult;
    }
    r.record(worst_inv <= 1e-10, "s(g) = s(g^-1)", cat("max rel err ", worst_inv));
    r.record(submult == 0, "s(g1 g2) <= s(g1) s(g2)", cat(submult, " violations"));
  }
  {
    int not_dual = 0, ktype_mismatch = 0, valid = 0;
    for (int p : {4, 5, 6})
      for (int q : {4, 5, 6})
        for (int l2 : {1, 2, 3, 4, 6}) {
          const auto param = fjrep::try_make_fj_param(p, q, HalfInt::from_twice(l2));
          if (!param) continue;
          ++valid;
          if (!fjrep::is_self_dual(*param)) ++not_dual;
          if (param->min_ktype != HalfInt::from_int(param->a)) ++ktype_mismatch;
        }
    r.record(not_dual == 0, "self-dual on the valid grid", cat(valid, " parameters, ", not_dual, " failures"));
    r.record(ktype_mismatch == 0, "minimal K-type equals the harmonic degree");
  }
}

// ---------------------------------------------------------------- branching

struct GridCase {
  int p, q;
  HalfInt lambda;
  Subgroup which;
  HalfInt target;
};

std::vector<GridCase> branching_grid() {
  std::vector<GridCase> out;
  for (int p : {4, 5, 6})
    for (int q : {4, 5, 6})
      for (int l2 : {2, 3, 4, 6}) {
        const HalfInt lambda = HalfInt::from_twice(l2);
        if (!fjrep::try_make_fj_param(p, q, lambda)) continue;
        for (Subgroup w : {Subgroup::G2, Subgroup::G1})
          for (int t2 = 1; t2 <= 20; ++t2) {
            const HalfInt t = HalfInt::from_twice(t2);
            const HalfInt d = periods::target_degree(p, q, w, t);
            if (!d.is_integer() || d > HalfInt::from_int(6)) continue;
            out.push_back({p, q, lambda, w, t});
          }
      }
  return out;
}

void suite_branching(Reporter& r, std::uint64_t) {
  const auto grid = branching_grid();
  int corrected = 0, strict = 0, valid = 0;
  int interlace_mismatch = 0, g1_not_inf1 = 0;
  for (const auto& c : grid) {
    const auto v = periods::evaluate_period(c.which, c.p, c.q, c.lambda, c.target);
    const bool expected = c.which == Subgroup::G2 ? v.predicate_nonzero && v.parity_match : v.predicate_nonzero;
    if (v.nonzero != expected) ++corrected;
    if (!v.agrees()) ++strict;
    if (!v.target_valid) continue;
    ++valid;
    const auto big = fjrep::inf_char(fjrep::make_fj_param(c.p, c.q, c.lambda));
    const auto tag = c.which == Subgroup::G1 ? fjrep::SpaceTag::G1_space : fjrep::SpaceTag::G2_space;
    const auto cls = packets::interlace_classify(big, fjrep::inf_char(fjrep::make_fj_param(c.p, c.q, c.target, tag)));
    if (c.which == Subgroup::G2 && (cls == packets::InterlaceClass::FiniteType) != v.predicate_nonzero)
      ++interlace_mismatch;
    if (c.which == Subgroup::G1 && v.predicate_nonzero && cls != packets::InterlaceClass::InfiniteType1) ++g1_not_inf1;
  }
  r.record(corrected == 0, "period nonzero == predicate (G2: and a - b even)",
           cat(grid.size(), " cases, ", corrected, " mismatches"));
  r.info(cat("period nonzero vs bare predicate: ", strict, " mismatches (odd-gap G2 cases)"));
  r.record(interlace_mismatch == 0, "finite-type interlacing == G2 predicate on valid targets",
           cat(valid, " valid targets, ", interlace_mismatch, " mismatches"));
  r.record(g1_not_inf1 == 0, "G1 nonzero implies infinite type 1", cat(g1_not_inf1, " violations"));

  // convergence dichotomy on the G2 radial factor: a + c = -(lambda + mu) - 1/2
  bool cauchy = true, grows = true;
  for (int s2 = -6; s2 <= 8; ++s2) {
    const HalfInt sum = HalfInt::from_twice(s2);
    const double a_exp = 3.0, c_exp = -a_exp - sum.to_double() - 0.5;
    const double r5 = geometry::radial_integral_truncated(a_exp, c_exp, 5, {});
    const double r10 = geometry::radial_integral_truncated(a_exp, c_exp, 10, {});
    const double r20 = geometry::radial_integral_truncated(a_exp, c_exp, 20, {});
    if (periods::converges_G2(sum, HalfInt{})) {
      cauchy = cauchy && (r20 - r10) < (r10 - r5) &&
               rel_err(r20, geometry::radial_integral_closed(a_exp, c_exp)) < 1e-3;
    } else {
      grows = grows && r10 > 1.1 * r5 && r20 > 1.1 * r10;
    }
  }
  r.record(cauchy, "period radial factor Cauchy when lambda + mu > -1/2");
  r.record(grows, "period radial factor grows > 10% per doubling otherwise");

  const auto b = periods::branching_verdict(4, 4, HalfInt::from_int(2), Subgroup::G2, HalfInt::half(3));
  const auto c = periods::branching_verdict(4, 4, HalfInt::from_int(2), Subgroup::G1, HalfInt::half(5));
  r.record(b.hom_nonzero && !b.admissible_restriction && c.hom_nonzero && c.admissible_restriction,
           "branching verdict at (4,4), lambda = 2");
}

// ---------------------------------------------------------------- packets

void suite_packets(Reporter& r, std::uint64_t) {
  for (int p = 4; p <= 12; p += 2)
    for (int q = p; p + q <= 12; q += 2) {
      const auto bf = kernels::brute_force_double_cosets(p, q);
      const auto bf_omp = kernels::brute_force_double_cosets_omp(p, q);
      const auto fast = packets::packet_double_cosets(p, q);
      const int m = (p + q) / 2;
      const bool ok = bf.count == 2 && bf.coset_space_size == 2 * m && bf_omp.count == bf.count &&
                      bf_omp.coset_space_size == bf.coset_space_size && fast.count == bf.count &&
                      fast.coset_space_size == bf.coset_space_size;
      r.record(ok, cat("double cosets at (", p, ",", q, ")"),
               cat("brute force ", bf.count, " of |D_", m, "| = ", bf.group_order, ", coset space ",
                   bf.coset_space_size));
      const auto& reps = fast.representatives;
      const bool reps_ok = reps.size() == 2 && reps[0] == weyl::SignedPermutation::identity(m) &&
                           reps[1] == weyl::SignedPermutation::transposition(m, 1, p / 2 + 1);
      r.record(reps_ok, cat("representatives identity and P1 at (", p, ",", q, ")"));
    }
  bool sums = true;
  for (int p = 0; p <= 7; ++p)
    for (int q = 0; q <= 7; ++q)
      for (const auto& f : packets::pure_inner_forms({p, q})) sums = sums && f.p_sig + f.q_sig == p + q;
  r.record(sums, "pure inner forms preserve p + q");
  bool table = true;
  for (auto m : {packets::Member::s, packets::Member::as})
    table = table && (packets::admissibility_table(m, Subgroup::G1) != packets::admissibility_table(m, Subgroup::G2));
  for (auto w : {Subgroup::G1, Subgroup::G2})
    table = table && (packets::admissibility_table(packets::Member::s, w) !=
                      packets::admissibility_table(packets::Member::as, w));
  r.record(table, "admissibility: one admissible subgroup per member and one member per subgroup");
  r.record(weyl::weyl_order({weyl::Family::D, 4}) == 192 && weyl::weyl_order({weyl::Family::B, 3}) == 48 &&
               weyl::weyl_order({weyl::Family::D, 1}) == 1,
           "Weyl group orders");
}

// ---------------------------------------------------------------- conjecture

void suite_conjecture(Reporter& r, std::uint64_t) {
  std::vector<HalfInt> grid;
  for (int t = 1; t <= 24; ++t) grid.push_back(HalfInt::from_twice(t));
  for (auto [p, q] : {std::pair{4, 4}, std::pair{4, 6}})
    for (Subgroup w : {Subgroup::G1, Subgroup::G2})
      for (int l2 : {2, 3, 4, 5, 6}) {
        const HalfInt lambda = HalfInt::from_twice(l2);
        const auto rep = packets::conjecture_explore(p, q, lambda, w, packets::default_predicate_s(w),
                                                     packets::default_predicate_as(w), grid);
        r.record(rep.disjoint, cat("default supports disjoint at (", p, ",", q, "), lambda_x2 = ", l2, ", ",
                                   geometry::to_string(w)),
                 cat("|s| = ", rep.support_s.size(), ", |as| = ", rep.support_as.size()));
      }
  auto yes = [](int, int, HalfInt, HalfInt) { return true; };
  const auto adv = packets::conjecture_explore(4, 4, HalfInt::from_int(2), Subgroup::G1, yes, yes, grid);
  r.record(!adv.disjoint, "explorer reports overlap for constant-true predicates");
}

using Suite = std::function<void(Reporter&, std::uint64_t)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s{{"quadrature", suite_quadrature}, {"harmonics", suite_harmonics},
                                              {"decay", suite_decay},           {"branching", suite_branching},
                                              {"packets", suite_packets},       {"conjecture", suite_conjecture}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",   "quadrature", "harmonics", "decay",
                                              "branching", "packets", "conjecture"};
  return names;
}

int run_checks(const std::string& suite, std::uint64_t seed, std::ostream& out) {
  Reporter r(out);
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    out << "== " << name << '\n';
    try {
      fn(r, seed);
    } catch (const std::exception& e) {
      r.record(false, name + " suite aborted", e.what());
    }
  }
  out << r.passed() << " passed, " << r.failed() << " failed\n";
  return r.failed() == 0 ? kOk : kPropertyFailure;
}

}  // namespace fjb::cli
