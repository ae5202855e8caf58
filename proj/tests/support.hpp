#pragma once

// Independent oracles and generators for the tests. Nothing here calls the
// library's counting or connectivity code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "hypersep/hypergraph.hpp"
#include "hypersep/rational.hpp"
#include "hypersep/septree.hpp"

namespace testing {

using hypersep::BigInt;
using hypersep::Hypergraph;
using hypersep::Rational;
using hypersep::SeparatorTree;
using hypersep::Vertex;
using hypersep::VertexSet;

using Rng = std::mt19937_64;

inline BigInt choose(long n, long r) {
  if (r < 0 || n < r) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long i = 0; i < r; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

// mpq's two-argument constructor skips canonicalization.
inline Rational frac(long a, long b) { return Rational(a) / b; }

inline std::uint64_t choose64(long n, long r) { return choose(n, r).get_ui(); }

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Every r-subset of {0..n-1} as a sorted vector, in lexicographic order.
inline std::vector<VertexSet> all_subsets(const VertexSet& pool, unsigned r) {
  std::vector<VertexSet> out;
  if (pool.size() < r) return out;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s;
    for (std::size_t i : idx) s.push_back(pool[i]);
    out.push_back(s);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == pool.size() - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline VertexSet range(Vertex n) {
  VertexSet v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool meets(const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a) {
    if (std::binary_search(b.begin(), b.end(), v)) return true;
  }
  return false;
}

inline VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Edge list of h as plain vectors (via the public iteration only).
inline std::vector<VertexSet> edge_list(const Hypergraph& h) {
  std::vector<VertexSet> out;
  h.for_each_edge([&](std::span<const Vertex> e) { out.emplace_back(e.begin(), e.end()); });
  return out;
}

inline std::uint64_t naive_induced(const std::vector<VertexSet>& edges, const VertexSet& w) {
  return std::count_if(edges.begin(), edges.end(), [&](const VertexSet& e) { return subset_of(e, w); });
}

// Union-find connectivity of the surviving vertices after strong deletion.
inline bool naive_connected_after(const std::vector<VertexSet>& edges, const VertexSet& w, const VertexSet& s) {
  const VertexSet keep = minus(w, s);
  if (keep.size() <= 1) return true;
  std::vector<std::size_t> parent(keep.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto pos = [&](Vertex v) { return std::lower_bound(keep.begin(), keep.end(), v) - keep.begin(); };
  for (const auto& e : edges) {
    if (!subset_of(e, keep)) continue;
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(pos(e[i]))] = find(pos(e[0]));
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < keep.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

// (k+1)-connected on W: |W| >= k+2 and no deletion of at most k vertices
// disconnects it.
inline bool naive_k1_connected(const std::vector<VertexSet>& edges, const VertexSet& w, unsigned k) {
  if (w.size() < k + 2) return false;
  for (unsigned size = 0; size <= k; ++size) {
    for (const auto& s : all_subsets(w, size)) {
      if (!naive_connected_after(edges, w, s)) return false;
    }
  }
  return true;
}

inline bool naive_has_separator(const std::vector<VertexSet>& edges, unsigned n, unsigned k) {
  for (const auto& s : all_subsets(range(n), k)) {
    if (!naive_connected_after(edges, range(n), s)) return true;
  }
  return false;
}

inline Hypergraph random_hypergraph(Rng& rng, unsigned r, unsigned n, double density) {
  Hypergraph h(r, n);
  for (const auto& e : all_subsets(range(n), r)) {
    if (coin(rng, density)) h.add_edge(e);
  }
  return h;
}

inline VertexSet random_subset(Rng& rng, const VertexSet& pool, unsigned size) {
  VertexSet copy = pool;
  std::shuffle(copy.begin(), copy.end(), rng);
  copy.resize(size);
  std::sort(copy.begin(), copy.end());
  return copy;
}

// A random tree that splits every node larger than `limit`: S is a random
// k-subset and the rest goes to two nonempty sides at random.
inline SeparatorTree random_tree(Rng& rng, unsigned n, unsigned k, std::uint64_t limit) {
  SeparatorTree t = SeparatorTree::single_atom(range(n), k);
  for (std::size_t i = 0; i < t.subgraphs.size(); ++i) {
    const VertexSet p = t.subgraphs[i].vertices;
    if (p.size() <= limit) continue;
    const VertexSet s = random_subset(rng, p, k);
    VertexSet rest = minus(p, s);
    std::shuffle(rest.begin(), rest.end(), rng);
    const unsigned cut = uniform(rng, 1, static_cast<unsigned>(rest.size()) - 1);
    VertexSet a(rest.begin(), rest.begin() + cut);
    VertexSet b(rest.begin() + cut, rest.end());
    a.insert(a.end(), s.begin(), s.end());
    b.insert(b.end(), s.begin(), s.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    t.split(i, s, a, b);
  }
  return t;
}

// Whether r-set e lies in the parent of some separator, avoids it, and meets
// both of its sides.
inline bool crosses_some_separator(const SeparatorTree& t, const VertexSet& e) {
  for (const auto& sep : t.separators) {
    if (!subset_of(e, t.subgraphs[sep.parent].vertices) || meets(e, sep.vertices)) continue;
    const VertexSet a = minus(t.subgraphs[sep.small].vertices, sep.vertices);
    const VertexSet b = minus(t.subgraphs[sep.big].vertices, sep.vertices);
    if (meets(e, a) && meets(e, b)) return true;
  }
  return false;
}

// Random edges among the r-sets that no separator forbids.
inline Hypergraph random_compatible(Rng& rng, const SeparatorTree& t, unsigned r, unsigned n, double density) {
  Hypergraph h(r, n);
  for (const auto& e : all_subsets(range(n), r)) {
    if (!crosses_some_separator(t, e) && coin(rng, density)) h.add_edge(e);
  }
  return h;
}

}  // namespace testing
