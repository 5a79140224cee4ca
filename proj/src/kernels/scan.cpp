#include <exception>

#include "fjb/kernels.hpp"

namespace fjb::kernels {

namespace {

BranchRow scan_one(int p, int q, numerics::HalfInt lambda, geometry::Subgroup which, numerics::HalfInt target,
                   const numerics::QuadratureSpec& spec, bool use_witness) {
  BranchRow row;
  row.verdict = periods::evaluate_period(which, p, q, lambda, target, spec, use_witness);
  row.admissible = which == geometry::Subgroup::G1;
  if (row.verdict.target_valid) {
    const auto tag = which == geometry::Subgroup::G1 ? fjrep::SpaceTag::G1_space : fjrep::SpaceTag::G2_space;
    const auto big = fjrep::make_fj_param(p, q, lambda);
    const auto small = fjrep::make_fj_param(p, q, target, tag);
    row.interlace = packets::interlace_classify(fjrep::inf_char(big), fjrep::inf_char(small));
  }
  return row;
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<BranchRow> scan_targets(int p, int q, numerics::HalfInt lambda, geometry::Subgroup which,
                                    const std::vector<numerics::HalfInt>& targets,
                                    const numerics::QuadratureSpec& spec, bool use_witness) {
  std::vector<BranchRow> rows;
  rows.reserve(targets.size());
  for (auto t : targets) rows.push_back(scan_one(p, q, lambda, which, t, spec, use_witness));
  return rows;
}

std::vector<BranchRow> scan_targets_omp(int p, int q, numerics::HalfInt lambda, geometry::Subgroup which,
                                        const std::vector<numerics::HalfInt>& targets,
                                        const numerics::QuadratureSpec& spec, bool use_witness) {
  const int n = static_cast<int>(targets.size());
  std::vector<BranchRow> rows(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      rows[i] = scan_one(p, q, lambda, which, targets[i], spec, use_witness);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return rows;
}

}  // namespace fjb::kernels
