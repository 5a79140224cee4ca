#include "fjb/packets.hpp"

#include <algorithm>
#include <sstream>

#include "fjb/errors.hpp"

namespace fjb::packets {

const char* to_string(InterlaceClass c) {
  switch (c) {
    case InterlaceClass::FiniteType:
      return "FiniteType";
    case InterlaceClass::InfiniteType1:
      return "InfiniteType1";
    case InterlaceClass::NoPattern:
      return "NoPattern";
  }
  return "?";
}

namespace {

bool strictly_decreasing(const std::vector<HalfInt>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!(chain[i - 1] > chain[i])) return false;
  return true;
}

void require_packet_signature(int p, int q) {
  if (p % 2 || q % 2 || p < 4 || p > q) {
    std::ostringstream os;
    os << "packet data needs p, q even with 4 <= p <= q, got (" << p << ", " << q << ")";
    throw InvalidParameter(os.str());
  }
}

std::string so(int a, int b) { return "SO(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

InterlaceClass interlace_classify(const fjrep::InfChar& seq_a, const fjrep::InfChar& seq_b) {
  const std::size_t m = seq_a.size();
  const std::size_t n = seq_b.size();
  if (m == 0 || !(n + 1 == m || n == m)) {
    std::ostringstream os;
    os << "interlacing needs |b| = |a| - 1 or |a|, got |a| = " << m << ", |b| = " << n;
    throw InvalidParameter(os.str());
  }
  std::vector<HalfInt> chain;
  for (std::size_t i = 0; i < m; ++i) {
    chain.push_back(seq_a[i]);
    if (i < n) chain.push_back(seq_b[i]);
  }
  if (strictly_decreasing(chain)) return InterlaceClass::FiniteType;
  if (n >= 1 && seq_b[0] >= seq_a[0]) {
    // a1 > a2 > b2 > a3 > ... : the chain with b1 removed
    std::vector<HalfInt> tail(chain);
    tail.erase(tail.begin() + 1);
    if (strictly_decreasing(tail)) return InterlaceClass::InfiniteType1;
  }
  return InterlaceClass::NoPattern;
}

weyl::DoubleCosetResult packet_double_cosets(int p, int q) {
  require_packet_signature(p, q);
  const int m = (p + q) / 2;
  return weyl::double_cosets(weyl::BlockSubgroup{{p / 2, q / 2}}, weyl::WeylGroup{weyl::Family::D, m});
}

ArthurPacket arthur_packet(int p, int q, HalfInt lambda) {
  require_packet_signature(p, q);
  if (lambda <= HalfInt{}) throw InvalidParameter("arthur_packet needs lambda > 0");
  ArthurPacket out;
  out.cosets = packet_double_cosets(p, q);
  out.size = out.cosets.count;
  out.members.push_back({"s", so(p, q - 2) + so(0, 2), "SO0(" + std::to_string(p) + "," + std::to_string(q) +
                                                            ")/SO0(" + std::to_string(p) + "," +
                                                            std::to_string(q - 1) + ")"});
  out.members.push_back({"as", so(2, 0) + so(p - 2, q), "SO0(" + std::to_string(p) + "," + std::to_string(q) +
                                                            ")/SO0(" + std::to_string(p - 1) + "," +
                                                            std::to_string(q) + ")"});
  return out;
}

std::string RealForm::str() const { return so(p_sig, q_sig); }

std::vector<RealForm> pure_inner_forms(RealForm form) {
  std::vector<RealForm> out;
  const int total = form.p_sig + form.q_sig;
  // p + 2k ranges over [0, total] with the parity of p
  for (int ps = ((form.p_sig % 2) + 2) % 2; ps <= total; ps += 2) {
    if (ps < 0 || total - ps < 0) continue;
    out.push_back({ps, total - ps});
  }
  return out;
}

std::vector<RelevantPair> relevant_pairs(RealForm g_form, Direction dir) {
  const RealForm seed = dir == Direction::drop_p ? RealForm{g_form.p_sig - 1, g_form.q_sig}
                                                 : RealForm{g_form.p_sig, g_form.q_sig - 1};
  const auto subs = pure_inner_forms(seed);
  const auto ambs = pure_inner_forms(g_form);
  std::vector<RelevantPair> out;
  for (const auto& amb : ambs)
    for (const auto& sub : subs)
      if (sub.p_sig <= amb.p_sig && sub.q_sig <= amb.q_sig && sub.p_sig + sub.q_sig == amb.p_sig + amb.q_sig - 1)
        out.push_back({sub, amb});
  return out;
}

SupportPredicate default_predicate_s(Subgroup which) {
  if (which == Subgroup::G1)
    return [](int, int, HalfInt lambda, HalfInt nu) { return nu == lambda + HalfInt::half(1); };
  return [](int p, int q, HalfInt lambda, HalfInt mu) {
    const HalfInt one = HalfInt::from_int(1);
    const HalfInt a = lambda - one + HalfInt::half(p - q);
    const HalfInt b = mu - one + HalfInt::half(p - q + 1);
    return b.is_integer() && HalfInt{} <= b && b <= a;
  };
}

SupportPredicate default_predicate_as(Subgroup which) {
  if (which == Subgroup::G1)
    return [](int p, int q, HalfInt lambda, HalfInt nu) {
      const HalfInt mirrored = nu - HalfInt::from_int(1) + HalfInt::half(q - p + 1);
      return nu + HalfInt::half(1) <= lambda && mirrored >= HalfInt{};
    };
  return [](int, int, HalfInt lambda, HalfInt mu) { return mu == lambda + HalfInt::half(1); };
}

ConjectureReport conjecture_explore(int p, int q, HalfInt lambda, Subgroup /*which*/, const SupportPredicate& pred_s,
                                    const SupportPredicate& pred_as, const std::vector<HalfInt>& target_grid) {
  if (p < 4 || q < 4) throw InvalidParameter("conjecture_explore needs p, q >= 4");
  if (lambda <= HalfInt{}) throw InvalidParameter("conjecture_explore needs lambda > 0");
  ConjectureReport out;
  for (HalfInt t : target_grid) {
    const bool in_s = pred_s(p, q, lambda, t);
    const bool in_as = pred_as(p, q, lambda, t);
    if (in_s) out.support_s.push_back(t);
    if (in_as) out.support_as.push_back(t);
    if (in_s && in_as) out.disjoint = false;
  }
  return out;
}

const char* to_string(Member m) { return m == Member::s ? "s" : "as"; }

bool admissibility_table(Member member, Subgroup which) {
  return (member == Member::s) == (which == Subgroup::G1);
}

}  // namespace fjb::packets
