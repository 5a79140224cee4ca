// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fjb/errors.hpp"
#include "fjb/fjrep.hpp"
#include "fjb/geometry.hpp"
#include "fjb/harmonics.hpp"
#include "fjb/kernels.hpp"
#include "fjb/packets.hpp"
#include "fjb/periods.hpp"

using namespace fjb;
using H = numerics::HalfInt;
using geometry::Subgroup;

namespace {

int failures = 0;

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(int id, const std::string& detail) {
  std::printf("INFO criterion %d: %s\n", id, detail.c_str());
  std::fflush(stdout);
}

template <class... Ts>
std::string cat(const Ts&... xs) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << xs);
  return os.str();
}

void radial_oracle() {
  Timer t;
  double worst = 0.0;
  for (auto [a, c] : {std::pair{1.0, -3.0}, {3.0, -7.0}, {0.0, -2.0}, {5.0, -9.0}}) {
    const double closed = geometry::radial_integral_closed(a, c);
    const double num = geometry::radial_integral_numeric(a, c, {}).value;
    worst = std::max(worst, std::abs(num - closed) / closed);
  }
  const double secs = t.seconds();
  report(1, worst <= 1e-9 && secs < 1.0, "numeric radial integral matches Beta closed form",
         cat("max rel err ", worst, ", ", secs, " s"));
}

void square_integrability() {
  bool ok = true;
  std::ostringstream d;
  for (int lambda : {1, 2, 3}) {
    const auto param = fjrep::make_fj_param(4, 4, H::from_int(lambda));
    const auto n = fjrep::l2_norm_sq(param);
    const double a_exp = 3.0, c_exp = 3.0 + 2.0 * param.exponent.to_double();
    const double r5 = geometry::radial_integral_truncated(a_exp, c_exp, 5, {});
    const double r10 = geometry::radial_integral_truncated(a_exp, c_exp, 10, {});
    const double r20 = geometry::radial_integral_truncated(a_exp, c_exp, 20, {});
    const double d1 = std::abs(r10 - r5) / r20, d2 = std::abs(r20 - r10) / r20;
    const bool cauchy = d1 < 1e-10 && d2 < 1e-10;
    ok = ok && std::isfinite(n.value) && cauchy;
    d << "lambda=" << lambda << " L2=" << n.value << " diffs " << d1 << "," << d2 << (cauchy ? "" : " NOT<1e-10")
      << "; ";
  }
  // lambda = 0: radial exponents (3, -3)
  const double sum0 = 3.0 + (3.0 + 2.0 * (-3.0));
  const bool fails_at_zero = !geometry::radial_converges(3.0, -3.0);
  const bool boundary_minus_one = sum0 == -1.0;
  ok = ok && fails_at_zero && boundary_minus_one;
  d << "lambda=0 a+c=" << sum0 << (fails_at_zero ? " diverges" : " converges")
    << (boundary_minus_one ? "" : " (boundary sits at a+c=0, not -1)");
  report(2, ok, "L2 finite and truncation-Cauchy for lambda in {1,2,3}, boundary a+c=-1 at lambda=0", d.str());
}

void decay() {
  Timer t;
  int combos = 0;
  double worst = 0.0;
  for (int p = 4; p <= 6; ++p)
    for (int q = 4; q <= 6; ++q) {
      std::optional<fjrep::FJParam> param;
      for (int lx2 = 2; !param; ++lx2) param = fjrep::try_make_fj_param(p, q, H::from_twice(lx2));
      const Eigen::VectorXd pole = Eigen::VectorXd::Unit(q, q - 1);
      // least-squares slope of log|F| on 81 points of [2, 10]
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const int m = 81;
      for (int i = 0; i < m; ++i) {
        const double x = 2.0 + 8.0 * i / (m - 1);
        const double y = std::log(std::abs(fjrep::fj_eval(*param, pole, x)));
        sx += x, sy += y, sxx += x * x, sxy += x * y;
      }
      const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
      const double expect = -(param->lambda.to_double() - 1.0 + (p + q) / 2.0);
      worst = std::max(worst, std::abs(slope - expect) / std::abs(expect));
      ++combos;
    }
  const double secs = t.seconds();
  report(3, combos == 9 && worst <= 0.02 && secs < 5.0, "log-slope of |F| on [2,10] matches -(lambda-1+(p+q)/2)",
         cat(combos, " combos, max rel dev ", worst, ", ", secs, " s"));
}

void compact_branching() {
  Timer t;
  int mismatches = 0;
  std::ostringstream d;
  for (int n : {4, 5, 6})
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) {
        const bool got = harmonics::ktype_pairing_nonzero(a, b, n).nonzero;
        if (got != (b <= a)) {
          if (mismatches < 4) d << "(" << a << "," << b << "," << n << ") ";
          ++mismatches;
        }
      }
  const double secs = t.seconds();
  report(4, mismatches == 0 && secs < 60.0, "ktype_pairing_nonzero(a,b,n) == (0 <= b <= a)",
         cat(mismatches, " mismatches of 147", mismatches ? ", all with a-b odd, e.g. " + d.str() : "", ", ", secs,
             " s"));
}

void g2_periods() {
  bool ok = true;
  std::ostringstream d;
  for (auto [p, q, lambda] : {std::tuple{4, 4, 2}, {4, 6, 3}}) {
    d << "(" << p << "," << q << ") lambda=" << lambda << ": numeric nonzero at mu_x2 {";
    for (int mx2 : {1, 3, 5, 7, 9}) {
      const auto v = periods::evaluate_period(Subgroup::G2, p, q, H::from_int(lambda), H::from_twice(mx2));
      // mu + 1/2 <= lambda with b >= 0; at (4,4), lambda = 2 this is mu_x2 in {1, 3}
      const bool expect = mx2 + 1 <= 2 * lambda && v.target_valid;
      if (v.nonzero) d << mx2 << " ";
      if (v.nonzero != expect) ok = false;
      if (!expect && v.value && std::abs(*v.value) >= v.threshold) ok = false;
      if (expect && !v.nonzero) {
        d << "(" << mx2 << " missing: ";
        if (!v.target_valid)
          d << "b=" << v.target_degree << " invalid";
        else
          d << "a-b=" << v.a - v.target_degree.to_int() << " odd, |value| " << (v.value ? std::abs(*v.value) : 0.0)
            << " < " << v.threshold;
        d << ") ";
      }
    }
    d << "}; ";
  }
  report(5, ok, "G2 period nonzero exactly where mu + 1/2 <= lambda, b >= 0", d.str());
}

void g1_periods() {
  bool ok = true;
  std::ostringstream d;
  for (auto [p, q] : {std::pair{5, 4}, {5, 6}})
    for (int lambda : {1, 2, 3}) {
      if (!fjrep::try_make_fj_param(p, q, H::from_int(lambda))) {
        ok = false;
        d << "(" << p << "," << q << ",lambda=" << lambda << ") invalid: a half-integral; ";
      }
    }
  report(6, ok, "G1 period nonzero iff nu = lambda + 1/2 at (5,4),(5,6), lambda in {1,2,3}", d.str());

  // same statement at the nearest valid parameters
  bool diag = true;
  double worst_off = 0.0;
  for (auto [p, q] : {std::pair{5, 4}, {5, 6}})
    for (int lx2 : {3, 5, 7}) {
      const H lambda = H::from_twice(lx2);
      for (int nx2 = 1; nx2 <= 12; ++nx2) {
        if (!periods::target_degree(p, q, Subgroup::G1, H::from_twice(nx2)).is_integer()) continue;
        const auto v = periods::evaluate_period(Subgroup::G1, p, q, lambda, H::from_twice(nx2));
        if (!v.value) continue;
        const bool expect = H::from_twice(nx2) == lambda + H::half(1);
        if (v.nonzero != expect) diag = false;
        if (!expect) {
          const double scale = v.factors.sphere * v.factors.norm_a * v.factors.norm_target * v.factors.radial;
          worst_off = std::max(worst_off, std::abs(*v.value) / scale);
        }
      }
    }
  info(6, cat("lambda in {3/2,5/2,7/2}: nonzero iff nu = lambda+1/2 ", diag ? "holds" : "FAILS",
              ", max off-diagonal |value|/scale ", worst_off, (worst_off < 1e-10 ? " < 1e-10" : " >= 1e-10")));
}

void interlacing() {
  int mismatches = 0, g1_nonzero = 0, g1_bad = 0;
  std::vector<H> grid;
  for (int t = 1; t <= 9; t += 2) grid.push_back(H::from_twice(t));
  for (auto [p, q, lambda] : {std::tuple{4, 4, 2}, {4, 6, 3}}) {
    std::vector<H> g1_grid;
    for (int t = 1; t <= 9; ++t)
      if (periods::target_degree(p, q, Subgroup::G1, H::from_twice(t)).is_integer()) g1_grid.push_back(H::from_twice(t));
    for (const auto& row : kernels::scan_targets_omp(p, q, H::from_int(lambda), Subgroup::G2, grid)) {
      if (!row.interlace) continue;
      if ((*row.interlace == packets::InterlaceClass::FiniteType) != row.verdict.predicate_nonzero) ++mismatches;
    }
    for (const auto& row : kernels::scan_targets_omp(p, q, H::from_int(lambda), Subgroup::G1, g1_grid)) {
      if (!row.verdict.nonzero) continue;
      ++g1_nonzero;
      if (row.interlace != packets::InterlaceClass::InfiniteType1) ++g1_bad;
    }
  }
  report(7, mismatches == 0 && g1_nonzero > 0 && g1_bad == 0,
         "FiniteType <=> G2 predicate; G1 nonzero cases are InfiniteType1",
         cat(mismatches, " G2 mismatches over valid targets, ", g1_nonzero, " G1 nonzero rows, ", g1_bad,
             " not InfiniteType1"));
}

void double_cosets() {
  Timer t;
  bool ok = true;
  std::ostringstream d;
  for (auto [p, q] : {std::pair{4, 4}, {4, 6}, {6, 6}}) {
    const auto r = kernels::brute_force_double_cosets_omp(p, q);
    ok = ok && r.count == 2 && r.coset_space_size == 2 * ((p + q) / 2);
    d << "(" << p << "," << q << ") count " << r.count << " cosets " << r.coset_space_size << "; ";
  }
  const double secs = t.seconds();
  report(8, ok && secs < 60.0, "brute-force double-coset count 2, coset space 2 floor((p+q)/2)", cat(d.str(), secs, " s"));
}

void inner_forms() {
  using packets::RealForm;
  const auto forms = packets::pure_inner_forms({3, 3});
  const auto pairs = packets::relevant_pairs({3, 3}, packets::Direction::drop_p);
  const bool forms_ok = forms == std::vector<RealForm>{{1, 5}, {3, 3}, {5, 1}};
  const std::vector<packets::RelevantPair> expect{{{0, 5}, {1, 5}}, {{2, 3}, {3, 3}}, {{4, 1}, {5, 1}}};
  std::ostringstream d;
  for (const auto& f : forms) d << f.str() << " ";
  d << "| ";
  for (const auto& pr : pairs) d << pr.sub.str() << " in " << pr.amb.str() << " ";
  report(9, forms_ok && pairs == expect, "pure inner forms of SO(3,3) and relevant pairs", d.str());
}

void admissibility() {
  using packets::Member;
  bool table_ok = true;
  for (auto m : {Member::s, Member::as})
    table_ok = table_ok && (packets::admissibility_table(m, Subgroup::G1) + packets::admissibility_table(m, Subgroup::G2)) == 1;
  for (auto g : {Subgroup::G1, Subgroup::G2})
    table_ok = table_ok && (packets::admissibility_table(Member::s, g) + packets::admissibility_table(Member::as, g)) == 1;
  bool disjoint = true;
  int runs = 0;
  std::vector<H> grid;
  for (int t = -3; t <= 12; ++t) grid.push_back(H::from_twice(t));
  for (auto [p, q] : {std::pair{4, 4}, {4, 6}})
    for (int lx2 : {2, 3, 4, 5, 6})
      for (auto g : {Subgroup::G1, Subgroup::G2}) {
        const auto rep = packets::conjecture_explore(p, q, H::from_twice(lx2), g, packets::default_predicate_s(g),
                                                     packets::default_predicate_as(g), grid);
        disjoint = disjoint && rep.disjoint;
        ++runs;
      }
  report(10, table_ok && disjoint, "admissibility table is a permutation; default supports disjoint",
         cat("table ", table_ok ? "ok" : "bad", ", ", runs, " explorer runs ", disjoint ? "all disjoint" : "overlap"));
}

void ellipsoid() {
  std::mt19937_64 rng(20240611);
  const geometry::HyperboloidChart chart(4, 4);
  int lower_ok = 0, bound_ok = 0, inv_ok = 0, sub_ok = 0;
  for (int k = 0; k < 100; ++k) {
    const auto g = geometry::random_group_element(4, 4, rng);
    const auto blocks = geometry::block_decompose(chart, g);
    const auto gap = geometry::ellipsoid_gap(blocks);
    const double emp = kernels::empirical_gap_min_omp(blocks, 10000, 1000 + k);
    lower_ok += gap.q_min <= emp;
    bound_ok += gap.q_min > gap.bound;
  }
  for (int k = 0; k < 100; ++k) {
    const auto g = geometry::random_group_element(4, 4, rng);
    const auto h = geometry::random_group_element(4, 4, rng);
    const double sg = geometry::scale(4, g), sh = geometry::scale(4, h);
    inv_ok += std::abs(sg - geometry::scale(4, geometry::group_inverse(4, g))) <= 1e-10 * sg;
    sub_ok += geometry::scale(4, g * h) <= sg * sh;
  }
  report(11, lower_ok == 100 && bound_ok == 100 && inv_ok == 100 && sub_ok == 100,
         "ellipsoid q_min bounds sampling and (1/4)(tr A4^T A4)^-1; scale identities",
         cat("lower ", lower_ok, "/100, bound ", bound_ok, "/100, s(g)=s(g^-1) ", inv_ok, "/100, submult ", sub_ok,
             "/100"));
}

void self_duality() {
  int total = 0, dual = 0;
  for (int p = 4; p <= 6; ++p)
    for (int q = 4; q <= 6; ++q)
      for (int lx2 = 1; lx2 <= 6; ++lx2)
        if (auto param = fjrep::try_make_fj_param(p, q, H::from_twice(lx2))) {
          ++total;
          dual += fjrep::is_self_dual(*param);
        }
  report(12, total > 0 && dual == total, "is_self_dual on the valid grid p,q in {4,5,6}, lambda <= 3",
         cat(dual, "/", total, " self-dual"));
}

}  // namespace

int main() {
  const std::vector<void (*)()> criteria{radial_oracle, square_integrability, decay,         compact_branching,
                                         g2_periods,    g1_periods,           interlacing,   double_cosets,
                                         inner_forms,   admissibility,        ellipsoid,     self_duality};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, "threw", e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
