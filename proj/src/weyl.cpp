#include "fjb/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fjb/errors.hpp"

namespace fjb::weyl {

using numerics::HalfInt;

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) throw InvalidParameter("signed permutation images must permute 1..n");
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j) {
  auto w = identity(n);
  std::swap(w.images_[i - 1], w.images_[j - 1]);
  return w;
}

SignedPermutation SignedPermutation::sign_change(int n, int i) {
  auto w = identity(n);
  w.images_[i - 1] = -w.images_[i - 1];
  return w;
}

int SignedPermutation::negative_count() const {
  return static_cast<int>(std::count_if(images_.begin(), images_.end(), [](int v) { return v < 0; }));
}

int SignedPermutation::apply_index(int signed_index) const {
  const int img = images_[std::abs(signed_index) - 1];
  return signed_index < 0 ? -img : img;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw InvalidParameter("rank mismatch in signed permutation product");
  std::vector<int> im(a.rank());
  for (int i = 0; i < a.rank(); ++i) im[i] = a.apply_index(b.images_[i]);
  SignedPermutation out;
  out.images_ = std::move(im);
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> im(rank());
  for (int i = 0; i < rank(); ++i) {
    const int v = images_[i];
    im[std::abs(v) - 1] = v < 0 ? -(i + 1) : (i + 1);
  }
  SignedPermutation out;
  out.images_ = std::move(im);
  return out;
}

std::vector<HalfInt> SignedPermutation::act(const std::vector<HalfInt>& x) const {
  if (static_cast<int>(x.size()) != rank()) throw InvalidParameter("vector length does not match rank");
  std::vector<HalfInt> out(x.size());
  for (int i = 0; i < rank(); ++i) {
    const int v = images_[i];
    out[std::abs(v) - 1] = v < 0 ? -x[i] : x[i];
  }
  return out;
}

std::string SignedPermutation::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rank(); ++i) os << (i ? " " : "") << images_[i];
  os << ']';
  return os.str();
}

std::uint64_t WeylGroup::order() const {
  std::uint64_t fact = 1;
  for (int k = 2; k <= rank; ++k) fact *= static_cast<std::uint64_t>(k);
  const int shift = family == Family::B ? rank : rank - 1;
  return (std::uint64_t{1} << shift) * fact;
}

bool WeylGroup::contains(const SignedPermutation& w) const {
  if (w.rank() != rank) return false;
  return family == Family::B || w.negative_count() % 2 == 0;
}

std::vector<SignedPermutation> WeylGroup::generators() const {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < rank; ++i) gens.push_back(SignedPermutation::transposition(rank, i, i + 1));
  if (family == Family::B) {
    gens.push_back(SignedPermutation::sign_change(rank, rank));
  } else if (rank >= 2) {
    gens.push_back(SignedPermutation::sign_change(rank, rank - 1) * SignedPermutation::sign_change(rank, rank) *
                   SignedPermutation::transposition(rank, rank - 1, rank));
  }
  return gens;
}

std::vector<SignedPermutation> WeylGroup::elements() const {
  std::vector<SignedPermutation> out;
  out.reserve(order());
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
      if (family == Family::D && __builtin_popcount(mask) % 2) continue;
      std::vector<int> im(perm);
      for (int i = 0; i < rank; ++i)
        if (mask >> i & 1u) im[i] = -im[i];
      out.emplace_back(std::move(im));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string WeylGroup::name() const { return (family == Family::B ? "B" : "D") + std::to_string(rank); }

std::uint64_t weyl_order(const WeylGroup& w) { return w.order(); }

std::vector<HalfInt> canonical_form(const WeylGroup& w, std::vector<HalfInt> x) {
  if (static_cast<int>(x.size()) != w.rank) throw InvalidParameter("vector length does not match Weyl group rank");
  int negatives = 0;
  bool has_zero = false;
  for (auto& v : x) {
    if (v < HalfInt{}) {
      ++negatives;
      v = -v;
    }
    has_zero = has_zero || v == HalfInt{};
  }
  std::sort(x.begin(), x.end(), std::greater<>());
  if (w.family == Family::D && !has_zero && negatives % 2) x.back() = -x.back();
  return x;
}

bool conjugate(const WeylGroup& w, const std::vector<HalfInt>& x, const std::vector<HalfInt>& y) {
  return canonical_form(w, x) == canonical_form(w, y);
}

int BlockSubgroup::rank() const { return std::accumulate(block_ranks.begin(), block_ranks.end(), 0); }

std::vector<SignedPermutation> BlockSubgroup::generators() const {
  const int n = rank();
  std::vector<SignedPermutation> gens;
  int offset = 0;
  for (int r : block_ranks) {
    for (const auto& g : WeylGroup{Family::D, r}.generators()) {
      std::vector<int> im(n);
      std::iota(im.begin(), im.end(), 1);
      for (int i = 0; i < r; ++i) {
        const int v = g.images()[i];
        im[offset + i] = v < 0 ? v - offset : v + offset;
      }
      gens.emplace_back(std::move(im));
    }
    offset += r;
  }
  return gens;
}

namespace {

int slot(int signed_index) { return 2 * (std::abs(signed_index) - 1) + (signed_index < 0 ? 1 : 0); }

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// An element of mid sending e_1 to the signed basis vector d.
SignedPermutation coset_representative(const WeylGroup& mid, int d) {
  const int n = mid.rank;
  const int k = std::abs(d);
  SignedPermutation w = k == 1 ? SignedPermutation::identity(n) : SignedPermutation::transposition(n, 1, k);
  if (d < 0) {
    w = SignedPermutation::sign_change(n, k) * w;
    if (mid.family == Family::D) {
      const int other = k == n ? 1 : n;
      w = SignedPermutation::sign_change(n, other) * w;
    }
  }
  return w;
}

}  // namespace

DoubleCosetResult double_cosets(const BlockSubgroup& left, const WeylGroup& mid) {
  if (left.rank() != mid.rank) throw InvalidParameter("left subgroup rank must equal the Weyl group rank");
  const int n = mid.rank;
  // destinations of e_1 reachable inside mid: all of +-e_i once n >= 2
  std::vector<int> destinations;
  for (int i = 1; i <= n; ++i) {
    destinations.push_back(i);
    if (mid.family == Family::B || n >= 2) destinations.push_back(-i);
  }
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto gens = left.generators();
  for (int d : destinations)
    for (const auto& g : gens) parent[find(parent, slot(d))] = find(parent, slot(g.apply_index(d)));

  DoubleCosetResult out;
  out.coset_space_size = static_cast<int>(destinations.size());
  std::vector<int> root_to_orbit(2 * n, -1);
  std::vector<int> sorted = destinations;
  std::sort(sorted.begin(), sorted.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
  });
  for (int d : sorted) {
    const int r = find(parent, slot(d));
    if (root_to_orbit[r] < 0) {
      root_to_orbit[r] = out.count++;
      out.orbits.emplace_back();
      out.representatives.push_back(coset_representative(mid, d));
    }
    out.orbits[root_to_orbit[r]].push_back(d);
  }
  return out;
}

}  // namespace fjb::weyl
