#include "hypersep/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hypersep {

namespace {

// Visits j-subsets of `pool` in lexicographic order until f returns true.
template <class F>
bool first_subset(const VertexSet& pool, unsigned j, F&& f) {
  const std::size_t m = pool.size();
  if (j > m) return false;
  std::vector<std::size_t> idx(j);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  VertexSet cur(j);
  while (true) {
    for (unsigned i = 0; i < j; ++i) cur[i] = pool[idx[i]];
    if (f(cur)) return true;
    int i = static_cast<int>(j) - 1;
    while (i >= 0 && idx[i] == m - j + static_cast<std::size_t>(i)) --i;
    if (i < 0) return false;
    ++idx[i];
    for (unsigned t = static_cast<unsigned>(i) + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Connectivity of the surviving part of H after every vertex outside `alive`
// is strongly deleted. Vertex sets are bitmasks, so n <= 64.
class MaskGraph {
 public:
  explicit MaskGraph(const Hypergraph& h) : n_(h.n()), r_(h.r()) {
    if (r_ == 3) {
      unions_.assign(std::size_t{n_} * n_, 0);
    } else {
      lists_.resize(std::size_t{n_} * n_);
    }
    h.for_each_edge([&](std::span<const Vertex> e) {
      std::uint64_t all = 0;
      for (Vertex v : e) all |= bit(v);
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
          const std::uint64_t rest = all & ~bit(e[i]) & ~bit(e[j]);
          if (r_ == 3) {
            unions_[e[i] * n_ + e[j]] |= rest;
            unions_[e[j] * n_ + e[i]] |= rest;
          } else {
            lists_[e[i] * n_ + e[j]].push_back(rest);
            lists_[e[j] * n_ + e[i]].push_back(rest);
          }
        }
      }
    });
  }

  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  std::uint64_t full() const { return n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1); }

  // Component of `start` within `alive`.
  std::uint64_t component(std::uint64_t alive, Vertex start) const {
    const std::uint64_t dead = full() & ~alive;
    std::uint64_t comp = bit(start);
    std::uint64_t todo = comp;
    while (todo) {
      const Vertex x = static_cast<Vertex>(std::countr_zero(todo));
      todo &= todo - 1;
      std::uint64_t cand = alive & ~comp;
      while (cand) {
        const Vertex y = static_cast<Vertex>(std::countr_zero(cand));
        cand &= cand - 1;
        if (linked(x, y, dead)) {
          comp |= bit(y);
          todo |= bit(y);
        }
      }
    }
    return comp;
  }

  bool connected(std::uint64_t alive) const {
    if (alive == 0) return true;
    return component(alive, static_cast<Vertex>(std::countr_zero(alive))) == alive;
  }

 private:
  bool linked(Vertex x, Vertex y, std::uint64_t dead) const {
    if (r_ == 3) return (unions_[x * n_ + y] & ~dead) != 0;
    for (std::uint64_t rest : lists_[x * n_ + y]) {
      if ((rest & dead) == 0) return true;
    }
    return false;
  }

  unsigned n_;
  unsigned r_;
  std::vector<std::uint64_t> unions_;
  std::vector<std::vector<std::uint64_t>> lists_;
};

// Same contract for arbitrary n, by union-find over surviving edges.
class ListGraph {
 public:
  explicit ListGraph(const Hypergraph& h) : n_(h.n()) {
    h.for_each_edge([&](std::span<const Vertex> e) { edges_.emplace_back(e.begin(), e.end()); });
  }

  std::vector<VertexSet> components(const std::vector<char>& alive) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges_) {
      if (!std::all_of(e.begin(), e.end(), [&](Vertex v) { return alive[v] != 0; })) continue;
      const Vertex root = find(e[0]);
      for (std::size_t i = 1; i < e.size(); ++i) {
        const Vertex other = find(e[i]);
        if (other != root) parent[std::max(other, root)] = std::min(other, root);
      }
    }
    std::vector<VertexSet> out;
    std::vector<int> slot(n_, -1);
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive[v]) continue;
      const Vertex root = find(v);
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[slot[root]].push_back(v);
    }
    return out;
  }

 private:
  unsigned n_;
  std::vector<VertexSet> edges_;
};

std::vector<VertexSet> mask_components(const MaskGraph& g, std::uint64_t alive) {
  std::vector<VertexSet> out;
  while (alive) {
    const std::uint64_t comp = g.component(alive, static_cast<Vertex>(std::countr_zero(alive)));
    alive &= ~comp;
    VertexSet part;
    for (std::uint64_t m = comp; m; m &= m - 1) part.push_back(static_cast<Vertex>(std::countr_zero(m)));
    out.push_back(std::move(part));
  }
  return out;
}

std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= MaskGraph::bit(v);
  return m;
}

// Shared front end: decides connectivity of H[W] after deleting S from W.
class Prober {
 public:
  explicit Prober(const Hypergraph& h) : n_(h.n()) {
    if (n_ <= 64) {
      mask_.emplace(h);
    } else {
      list_.emplace(h);
    }
  }

  std::vector<VertexSet> components(const VertexSet& w, const VertexSet& s) const {
    const VertexSet alive_set = set_difference(w, s);
    if (mask_) return mask_components(*mask_, to_mask(alive_set));
    std::vector<char> alive(n_, 0);
    for (Vertex v : alive_set) alive[v] = 1;
    return list_->components(alive);
  }

  bool connected(const VertexSet& w, const VertexSet& s) const {
    if (mask_) return mask_->connected(to_mask(w) & ~to_mask(s));
    return components(w, s).size() <= 1;
  }

 private:
  unsigned n_;
  std::optional<MaskGraph> mask_;
  std::optional<ListGraph> list_;
};

void check_members(const Hypergraph& h, const VertexSet& s) {
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("vertex set must be sorted and repeat-free");
  }
  if (!s.empty() && s.back() >= h.n()) throw std::invalid_argument("vertex outside [0, n-1]");
}

}  // namespace

std::vector<VertexSet> components_after_strong_deletion(const Hypergraph& h, const VertexSet& s) {
  check_members(h, s);
  return Prober(h).components(iota_set(0, h.n()), s);
}

bool is_connected(const Hypergraph& h) { return components_after_strong_deletion(h, {}).size() == 1; }

ConnectivityWitness is_k1_connected(const Hypergraph& h, unsigned k) {
  ConnectivityWitness out;
  if (h.n() < k + 2) {
    out.kind = ConnectivityWitness::Kind::kTooFewVertices;
    return out;
  }
  const Prober probe(h);
  const VertexSet all = iota_set(0, h.n());
  for (unsigned j = 0; j <= k; ++j) {
    const bool found = first_subset(all, j, [&](const VertexSet& s) {
      if (probe.connected(all, s)) return false;
      out.kind = ConnectivityWitness::Kind::kRefuted;
      out.separator = s;
      return true;
    });
    if (found) return out;
  }
  return out;
}

std::optional<Separation> find_separator(const Hypergraph& h, unsigned k) {
  if (h.n() <= k + 1) throw std::invalid_argument("find_separator needs n > k + 1");
  const Prober probe(h);
  const VertexSet all = iota_set(0, h.n());
  std::optional<Separation> out;
  first_subset(all, k, [&](const VertexSet& s) {
    if (probe.connected(all, s)) return false;
    const auto comps = probe.components(all, s);
    VertexSet rest;
    for (std::size_t i = 1; i < comps.size(); ++i) rest = set_union(rest, comps[i]);
    out = Separation{s, set_union(s, comps[0]), set_union(s, rest)};
    return true;
  });
  return out;
}

std::vector<std::string> check_separation(const Hypergraph& h, const Separation& sep, unsigned k) {
  std::vector<std::string> out;
  if (sep.s.size() != k) out.push_back("separator size differs from k");
  if (set_intersection(sep.a, sep.b) != sep.s) out.push_back("A ∩ B differs from S");
  if (set_union(sep.a, sep.b) != iota_set(0, h.n())) out.push_back("A ∪ B differs from V");
  const VertexSet a_only = set_difference(sep.a, sep.s);
  const VertexSet b_only = set_difference(sep.b, sep.s);
  if (a_only.empty()) out.push_back("A \\ S is empty");
  if (b_only.empty()) out.push_back("B \\ S is empty");
  if (!a_only.empty() && !b_only.empty() && set_intersection(a_only, b_only).empty()) {
    std::uint64_t crossing = 0;
    h.for_each_edge([&](std::span<const Vertex> e) {
      if (intersects(e, sep.s)) return;
      if (intersects(e, a_only) && intersects(e, b_only)) ++crossing;
    });
    if (crossing > 0) out.push_back(std::to_string(crossing) + " edges avoid S and cross A/B");
  }
  return out;
}

std::optional<VertexSet> contains_k1_connected_subgraph(const Hypergraph& h, unsigned k,
                                                        unsigned min_size) {
  if (min_size < k + 2) throw std::invalid_argument("min_size must be at least k + 2");
  const Prober probe(h);
  const VertexSet all = iota_set(0, h.n());
  std::optional<VertexSet> out;
  for (unsigned size = h.n(); size >= min_size && size >= 1; --size) {
    const bool found = first_subset(all, size, [&](const VertexSet& w) {
      // With |W| >= k + 2, a smaller disconnecting set pads to a k-set, so
      // k-subsets decide (k+1)-connectivity.
      const bool cut = first_subset(w, k, [&](const VertexSet& s) { return !probe.connected(w, s); });
      if (cut) return false;
      out = w;
      return true;
    });
    if (found) break;
  }
  return out;
}

}  // namespace hypersep
