#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fjb/numerics.hpp"

namespace fjb::weyl {

/// w(e_i) = sign(images[i-1]) e_{|images[i-1]|}, indices 1-based.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws InvalidParameter unless |images| is a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(int n);
  /// Swap of e_i and e_j (1-based).
  static SignedPermutation transposition(int n, int i, int j);
  /// e_i -> -e_i.
  static SignedPermutation sign_change(int n, int i);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int negative_count() const;
  /// Image of the signed basis vector s e_i, as a signed index.
  int apply_index(int signed_index) const;

  /// (a * b)(x) = a(b(x))
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  SignedPermutation inverse() const;

  /// w acting on coordinates: (w x)_{|w(i)|} = sign * x_i.
  std::vector<numerics::HalfInt> act(const std::vector<numerics::HalfInt>& x) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

  std::string str() const;

 private:
  std::vector<int> images_;
};

enum class Family { B, D };

struct WeylGroup {
  Family family = Family::D;
  int rank = 1;

  /// 2^r r! (B) or 2^{r-1} r! (D).
  std::uint64_t order() const;
  bool contains(const SignedPermutation& w) const;
  /// Simple reflections.
  std::vector<SignedPermutation> generators() const;
  /// Every element, in a deterministic order (permutations lexicographic, then sign masks).
  std::vector<SignedPermutation> elements() const;
  std::string name() const;
};

std::uint64_t weyl_order(const WeylGroup& w);

/// x and y lie in one orbit of w: equal sorted absolute values, and for type D with
/// no zero entry, equal parity of negative entries.
bool conjugate(const WeylGroup& w, const std::vector<numerics::HalfInt>& x, const std::vector<numerics::HalfInt>& y);

/// Canonical orbit representative: absolute values sorted descending; for type D with
/// no zero entry the last entry carries the sign parity.
std::vector<numerics::HalfInt> canonical_form(const WeylGroup& w, std::vector<numerics::HalfInt> x);

/// Block-diagonal product of type-D groups on consecutive coordinate blocks.
struct BlockSubgroup {
  std::vector<int> block_ranks;

  int rank() const;
  /// Generators of each factor, embedded in the full rank.
  std::vector<SignedPermutation> generators() const;
};

struct DoubleCosetResult {
  int count = 0;
  int coset_space_size = 0;  // |mid / right|
  std::vector<SignedPermutation> representatives;
  std::vector<std::vector<int>> orbits;  // destinations of e_1 as signed indices, per double coset
};

/// left \ mid / right where right is the stabilizer of e_1 in mid. Cosets of right are
/// identified with the destination w(e_1); left acts on destinations and orbits are
/// collected by union-find.
DoubleCosetResult double_cosets(const BlockSubgroup& left, const WeylGroup& mid);

}  // namespace fjb::weyl
