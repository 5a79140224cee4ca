#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "fjb/fjrep.hpp"
#include "fjb/geometry.hpp"
#include "fjb/weyl.hpp"

namespace fjb::packets {

using geometry::Subgroup;
using numerics::HalfInt;

enum class InterlaceClass { FiniteType, InfiniteType1, NoPattern };

const char* to_string(InterlaceClass c);

/// With a = seq_a (length m) and b = seq_b (length m-1 or m):
///   FiniteType     a1 > b1 > a2 > b2 > ...
///   InfiniteType1  b1 >= a1 > a2 > b2 > a3 > b3 > ...
/// both chains run through the shorter sequence. Throws InvalidParameter on other lengths.
InterlaceClass interlace_classify(const fjrep::InfChar& seq_a, const fjrep::InfChar& seq_b);

/// Coset data for W(SO(p)) x W(SO(q)) \ W(D_m) / W(D_{m-1}), m = (p+q)/2.
/// Requires p, q even with 4 <= p <= q.
weyl::DoubleCosetResult packet_double_cosets(int p, int q);

struct PacketMember {
  std::string tag;                   // "s" or "as"
  std::string levi;                  // theta-stable Levi
  std::string discrete_spectrum_of;  // the symmetric space realizing it
};

struct ArthurPacket {
  int size = 0;
  std::vector<PacketMember> members;
  weyl::DoubleCosetResult cosets;
};

/// Requires p, q even, 4 <= p <= q and lambda > 0.
ArthurPacket arthur_packet(int p, int q, HalfInt lambda);

struct RealForm {
  int p_sig = 0;
  int q_sig = 0;

  friend auto operator<=>(const RealForm&, const RealForm&) = default;
  std::string str() const;
};

/// All (p + 2k, q - 2k), k in Z, with non-negative entries; sorted by p_sig.
std::vector<RealForm> pure_inner_forms(RealForm form);

enum class Direction { drop_p, drop_q };

struct RelevantPair {
  RealForm sub;
  RealForm amb;
  friend auto operator<=>(const RelevantPair&, const RelevantPair&) = default;
};

/// Pure inner forms of the subgroup family ((p-1, q) or (p, q-1)) paired with the
/// inner forms of g_form containing them: p' <= p'', q' <= q'', p' + q' = p'' + q'' - 1.
std::vector<RelevantPair> relevant_pairs(RealForm g_form, Direction dir);

/// Support predicate on targets for fixed (p, q, lambda).
using SupportPredicate = std::function<bool(int p, int q, HalfInt lambda, HalfInt target)>;

/// Defaults. G1: s is nu = lambda + 1/2, as is nu + 1/2 <= lambda with mirrored degree
/// nu - 1 + (q-p+1)/2 >= 0. G2: s is 0 <= b <= a, as is mu = lambda + 1/2.
/// The as-predicates are model-level mirrors, not theorems.
SupportPredicate default_predicate_s(Subgroup which);
SupportPredicate default_predicate_as(Subgroup which);

struct ConjectureReport {
  std::vector<HalfInt> support_s;
  std::vector<HalfInt> support_as;
  bool disjoint = true;
};

/// Validates only lambda > 0 and p, q >= 4.
ConjectureReport conjecture_explore(int p, int q, HalfInt lambda, Subgroup which, const SupportPredicate& pred_s,
                                    const SupportPredicate& pred_as, const std::vector<HalfInt>& target_grid);

enum class Member { s, as };

const char* to_string(Member m);

/// Encoded: s is admissible for G1 only, as for G2 only.
bool admissibility_table(Member member, Subgroup which);

}  // namespace fjb::packets
