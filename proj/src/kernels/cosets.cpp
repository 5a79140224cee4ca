#include <map>
#include <numeric>

#include "fjb/errors.hpp"
#include "fjb/kernels.hpp"

namespace fjb::kernels {

namespace {

struct CosetGraph {
  std::vector<weyl::SignedPermutation> elements;
  std::vector<weyl::SignedPermutation> left_gens;
  std::vector<weyl::SignedPermutation> right_gens;
  std::map<std::vector<int>, int> index;
};

CosetGraph build(int p, int q) {
  if (p % 2 || q % 2 || p < 4 || p > q) throw InvalidParameter("double cosets need p, q even with 4 <= p <= q");
  const int m = (p + q) / 2;
  CosetGraph g;
  g.elements = weyl::WeylGroup{weyl::Family::D, m}.elements();
  for (int i = 0; i < static_cast<int>(g.elements.size()); ++i) g.index.emplace(g.elements[i].images(), i);
  g.left_gens = weyl::BlockSubgroup{{p / 2, q / 2}}.generators();
  // D_{m-1} on coordinates 2..m
  g.right_gens = weyl::BlockSubgroup{{1, m - 1}}.generators();
  return g;
}

// Neighbours of element i: l w for left generators, then w r for right generators.
std::vector<int> neighbours(const CosetGraph& g, int i) {
  std::vector<int> out;
  const auto& w = g.elements[i];
  for (const auto& l : g.left_gens) out.push_back(g.index.at((l * w).images()));
  for (const auto& r : g.right_gens) out.push_back(g.index.at((w * r).images()));
  return out;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

int count_components(std::vector<int>& parent) {
  int c = 0;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i)
    if (find(parent, i) == i) ++c;
  return c;
}

BruteForceCosets merge(const CosetGraph& g, const std::vector<std::vector<int>>& edges) {
  const int n = static_cast<int>(g.elements.size());
  const int n_left = static_cast<int>(g.left_gens.size());
  std::vector<int> both(n);
  std::vector<int> right_only(n);
  std::iota(both.begin(), both.end(), 0);
  std::iota(right_only.begin(), right_only.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < static_cast<int>(edges[i].size()); ++k) {
      const int j = edges[i][k];
      both[find(both, i)] = find(both, j);
      if (k >= n_left) right_only[find(right_only, i)] = find(right_only, j);
    }
  }
  BruteForceCosets out;
  out.group_order = static_cast<std::uint64_t>(n);
  out.count = count_components(both);
  out.coset_space_size = count_components(right_only);
  return out;
}

}  // namespace

BruteForceCosets brute_force_double_cosets(int p, int q) {
  const auto g = build(p, q);
  std::vector<std::vector<int>> edges(g.elements.size());
  for (int i = 0; i < static_cast<int>(g.elements.size()); ++i) edges[i] = neighbours(g, i);
  return merge(g, edges);
}

BruteForceCosets brute_force_double_cosets_omp(int p, int q) {
  const auto g = build(p, q);
  const int n = static_cast<int>(g.elements.size());
  std::vector<std::vector<int>> edges(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) edges[i] = neighbours(g, i);
  return merge(g, edges);
}

}  // namespace fjb::kernels
