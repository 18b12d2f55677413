#pragma once

// Shared test utilities: canonical fixture spaces, a deterministic rng
// (raw mt19937 output, no std distributions, so sequences are identical on
// every platform), random space generators and small brute-force oracles.

#include <aspace/group.hpp>
#include <aspace/groupoid.hpp>
#include <aspace/smith.hpp>
#include <aspace/space.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

using aspace::FiniteSpace;

inline FiniteSpace make_space(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  return FiniteSpace::from_relations(points, pairs);
}

// The 4-point circle model: a, b below c, d; weakly equivalent to S^1.
inline FiniteSpace circle_model() {
  return make_space({"a", "b", "c", "d"},
                    {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

inline FiniteSpace chain(int n) {
  std::vector<std::string> pts;
  std::vector<std::pair<std::string, std::string>> rels;
  for (int i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) rels.emplace_back(pts[i], pts[i + 1]);
  return make_space(pts, rels);
}

// componentwise order on pairs, labels "(u,v)"
inline FiniteSpace product_space(const FiniteSpace& a, const FiniteSpace& b) {
  int n = a.size(), m = b.size();
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v)
      labels.push_back("(" + a.label(u) + "," + b.label(v) + ")");
  std::vector<unsigned char> rel(static_cast<size_t>(n) * m * n * m, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v)
      for (int u2 = 0; u2 < n; ++u2)
        for (int v2 = 0; v2 < m; ++v2)
          rel[static_cast<size_t>(u * m + v) * (n * m) + (u2 * m + v2)] =
              a.leq(u, u2) && b.leq(v, v2) ? 1 : 0;
  return FiniteSpace::from_matrix(labels, std::move(rel));
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint32_t>(n)); }
  bool percent(int p) { return below(100) < p; }
};

inline std::vector<std::string> point_names(int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  return pts;
}

// Connected T0 poset on n points; index order is a linear extension.
inline FiniteSpace random_connected_poset(Rng& rng, int n) {
  auto pts = point_names(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  int seeds = rng.below(2 * n + 1);
  auto add_pair = [&] {
    int i = rng.below(n - 1);
    int j = i + 1 + rng.below(n - i - 1);
    pairs.emplace_back(pts[i], pts[j]);
  };
  for (int k = 0; k < seeds; ++k) add_pair();
  FiniteSpace x = make_space(pts, pairs);
  while (!x.is_connected()) {
    add_pair();
    x = make_space(pts, pairs);
  }
  return x;
}

// Connected preorder on n points; with force_class, at least one class of
// topologically indistinguishable points has two or more members.
inline FiniteSpace random_connected_preorder(Rng& rng, int n, bool force_class) {
  auto pts = point_names(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  int seeds = rng.below(2 * n + 1);
  auto add_pair = [&] {
    int i = rng.below(n);
    int j = rng.below(n);
    if (i == j) j = (j + 1) % n;
    pairs.emplace_back(pts[i], pts[j]);
  };
  for (int k = 0; k < seeds; ++k) add_pair();
  if (force_class) {
    int i = rng.below(n);
    int j = (i + 1 + rng.below(n - 1)) % n;
    pairs.emplace_back(pts[i], pts[j]);
    pairs.emplace_back(pts[j], pts[i]);
  }
  FiniteSpace x = make_space(pts, pairs);
  while (!x.is_connected()) {
    add_pair();
    x = make_space(pts, pairs);
  }
  return x;
}

// All non-empty totally ordered subsets, by subset enumeration. Independent
// of the library's chain walk; |X| must stay small.
inline std::vector<std::vector<int>> brute_force_chains(const FiniteSpace& x) {
  int n = x.size();
  std::vector<std::vector<int>> chains;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(i);
    bool total = true;
    for (size_t a = 0; a < sub.size() && total; ++a)
      for (size_t b = a + 1; b < sub.size() && total; ++b)
        if (!x.leq(sub[a], sub[b]) && !x.leq(sub[b], sub[a])) total = false;
    if (total) chains.push_back(sub);
  }
  return chains;
}

// A uniformly shuffled greedy spanning tree; depends only on the rng state.
inline aspace::SpanningTree random_spanning_tree(Rng& rng, const FiniteSpace& x) {
  auto edges = x.comparabilities();
  for (int i = static_cast<int>(edges.size()) - 1; i > 0; --i)
    std::swap(edges[i], edges[rng.below(i + 1)]);
  aspace::detail::UnionFind uf(x.size());
  std::vector<aspace::Comparability> picked;
  for (const auto& e : edges)
    if (uf.unite(e.first, e.second)) picked.push_back(e);
  return aspace::SpanningTree(x, std::move(picked));
}

// Uniform-ish sample from the full set of valid generator images for a hom
// into Z_n: solve relator_matrix^T v == 0 (mod n) through the Smith
// decomposition (v = L^T w with d_i w_i == 0 mod n).
inline std::vector<int> random_hom_images(Rng& rng, const aspace::Presentation& p, int n) {
  using aspace::BigInt;
  int gens = static_cast<int>(p.generators.size());
  aspace::IntMatrix m(gens, std::vector<long long>(p.relators.size(), 0));
  for (size_t j = 0; j < p.relators.size(); ++j)
    for (const auto& l : p.relators[j]) m[l.gen][j] += l.inverse ? -1 : 1;
  auto dec = aspace::smith_decompose(aspace::to_big(m));
  std::vector<long long> w(gens, 0);
  for (int i = 0; i < gens; ++i) {
    if (i < dec.result.rank) {
      long long di = (dec.result.invariant_factors[i] % BigInt(n)).to_int64();
      long long g = std::gcd(di, static_cast<long long>(n));  // gcd(0, n) == n
      w[i] = (n / g) * rng.below(static_cast<int>(g));
    } else {
      w[i] = rng.below(n);
    }
  }
  std::vector<int> v(gens, 0);
  for (int j = 0; j < gens; ++j) {
    BigInt acc;
    for (int i = 0; i < gens; ++i) acc += dec.left[i][j] * BigInt(w[i]);
    long long r = (acc % BigInt(n)).to_int64();
    v[j] = static_cast<int>(((r % n) + n) % n);
  }
  return v;
}

// Hasse edges by the definition: x < y with nothing strictly between.
inline std::vector<aspace::Comparability> brute_force_covers(const FiniteSpace& x) {
  std::vector<aspace::Comparability> covers;
  int n = x.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !x.leq(i, j)) continue;
      bool direct = true;
      for (int z = 0; z < n; ++z)
        if (z != i && z != j && x.leq(i, z) && x.leq(z, j)) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  return covers;
}

}  // namespace testutil
