#pragma once

// Data-parallel kernels. Each has a serial reference and an OpenMP variant that
// must return identical results.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fjb/geometry.hpp"
#include "fjb/packets.hpp"
#include "fjb/periods.hpp"

namespace fjb::kernels {

/// Deterministic per-index stream: splitmix64 seeded with (seed, index).
class IndexedRng {
 public:
  IndexedRng(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next();
  double uniform();  // (0, 1)
  double normal();

 private:
  std::uint64_t state_;
};

/// Uniform point on S^{n-1} in R^n.
Eigen::VectorXd random_unit_vector(IndexedRng& rng, int n);

/// min over `samples` random unit pairs (y', y'') of |A3 y' + A4 y''|.
double empirical_gap_min(const geometry::BlockDecomposition& blocks, int samples, std::uint64_t seed);
double empirical_gap_min_omp(const geometry::BlockDecomposition& blocks, int samples, std::uint64_t seed);

struct BranchRow {
  periods::PeriodVerdict verdict;
  std::optional<packets::InterlaceClass> interlace;  // only for valid targets
  bool admissible = false;
};

/// One row per target. Invalid parameters throw InvalidParameter after the scan.
std::vector<BranchRow> scan_targets(int p, int q, numerics::HalfInt lambda, geometry::Subgroup which,
                                    const std::vector<numerics::HalfInt>& targets,
                                    const numerics::QuadratureSpec& spec = {}, bool use_witness = true);
std::vector<BranchRow> scan_targets_omp(int p, int q, numerics::HalfInt lambda, geometry::Subgroup which,
                                        const std::vector<numerics::HalfInt>& targets,
                                        const numerics::QuadratureSpec& spec = {}, bool use_witness = true);

struct BruteForceCosets {
  int count = 0;
  int coset_space_size = 0;
  std::uint64_t group_order = 0;
};

/// Union-find over every element of D_m: w ~ l w (l in the block subgroup) and
/// w ~ w r (r fixing e_1). Independent of the destination-orbit shortcut.
BruteForceCosets brute_force_double_cosets(int p, int q);
BruteForceCosets brute_force_double_cosets_omp(int p, int q);

}  // namespace fjb::kernels
