#include <cmath>
#include <limits>
#include <numbers>

#include "fjb/errors.hpp"
#include "fjb/kernels.hpp"

namespace fjb::kernels {

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double gap_sample(const geometry::BlockDecomposition& blocks, std::uint64_t seed, int i) {
  IndexedRng rng(seed, static_cast<std::uint64_t>(i));
  const Eigen::VectorXd y1 = random_unit_vector(rng, static_cast<int>(blocks.A3.cols()));
  const Eigen::VectorXd y2 = random_unit_vector(rng, static_cast<int>(blocks.A4.cols()));
  return (blocks.A3 * y1 + blocks.A4 * y2).norm();
}

void check_samples(int samples) {
  if (samples < 1) throw InvalidParameter("empirical_gap_min needs at least one sample");
}

}  // namespace

IndexedRng::IndexedRng(std::uint64_t seed, std::uint64_t index) : state_(seed) {
  std::uint64_t mix = index ^ 0x5851f42d4c957f2dULL;
  state_ ^= splitmix(mix);
}

std::uint64_t IndexedRng::next() { return splitmix(state_); }

double IndexedRng::uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

double IndexedRng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXd random_unit_vector(IndexedRng& rng, int n) {
  Eigen::VectorXd v(n);
  do {
    for (int i = 0; i < n; ++i) v[i] = rng.normal();
  } while (v.norm() == 0.0);
  return v.normalized();
}

double empirical_gap_min(const geometry::BlockDecomposition& blocks, int samples, std::uint64_t seed) {
  check_samples(samples);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) best = std::min(best, gap_sample(blocks, seed, i));
  return best;
}

double empirical_gap_min_omp(const geometry::BlockDecomposition& blocks, int samples, std::uint64_t seed) {
  check_samples(samples);
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
  for (int i = 0; i < samples; ++i) best = std::min(best, gap_sample(blocks, seed, i));
  return best;
}

}  // namespace fjb::kernels
