#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hypersep {

using Vertex = std::uint32_t;
// Sorted ascending, no repeats.
using VertexSet = std::vector<Vertex>;

// Unvalidated edge list as read from input.
struct HypergraphData {
  long long r = 0;
  long long n = 0;
  std::vector<std::vector<long long>> edges;
};

std::vector<std::string> validate_hypergraph(const HypergraphData& data);

// r-uniform hypergraph on vertices 0..n-1. Edges live in a bitset indexed by
// the colex rank sum_i C(v_i, i) of the sorted r-set (v_1 < ... < v_r), so the
// ranks of sets inside {0..m-1} form the prefix [0, C(m, r)).
class Hypergraph {
 public:
  static constexpr std::uint64_t kMaxRsets = std::uint64_t{1} << 32;

  Hypergraph() = default;
  Hypergraph(unsigned r, unsigned n);

  // Throws std::invalid_argument listing every violation.
  static Hypergraph from_data(const HypergraphData& data);
  static Hypergraph from_edges(unsigned r, unsigned n, const std::vector<VertexSet>& edges);
  static Hypergraph complete(unsigned r, unsigned n);
  // Adopts a raw bitset in colex-rank order; bits past C(n, r) must be clear.
  static Hypergraph from_words(unsigned r, unsigned n, std::vector<std::uint64_t> words);

  unsigned r() const { return r_; }
  unsigned n() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }
  std::uint64_t rset_count() const { return rset_count_; }

  std::uint64_t rank(std::span<const Vertex> sorted) const;
  VertexSet unrank(std::uint64_t rank) const;

  bool test(std::uint64_t rank) const { return (words_[rank >> 6] >> (rank & 63)) & 1U; }
  bool contains(std::span<const Vertex> sorted) const { return test(rank(sorted)); }

  void set(std::uint64_t rank);
  void reset(std::uint64_t rank);
  void add_edge(std::span<const Vertex> sorted) { set(rank(sorted)); }

  // Edges in lexicographic order.
  void for_each_edge(const std::function<void(std::span<const Vertex>)>& fn) const;
  std::vector<VertexSet> edges() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::uint64_t popcount_range(std::uint64_t begin, std::uint64_t length) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  unsigned r_ = 0;
  unsigned n_ = 0;
  std::uint64_t rset_count_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct InducedSubgraph {
  Hypergraph graph;
  // labels[i] is the original label of new vertex i.
  VertexSet labels;
};

InducedSubgraph induced_subgraph(const Hypergraph& h, const VertexSet& w);

// e(H[W]) without materializing H[W].
std::uint64_t count_induced_edges(const Hypergraph& h, const VertexSet& w);

std::uint64_t anti_edge_count(const Hypergraph& h, const VertexSet& w);

struct PartCount {
  std::uint64_t rsets = 0;
  std::uint64_t edges = 0;
  std::uint64_t anti_edges() const { return rsets - edges; }
};

// Over r-subsets of the union of pairwise disjoint `parts` that meet every
// part whose bit is set in `required`.
PartCount count_by_parts(const Hypergraph& h, const std::vector<VertexSet>& parts,
                         std::uint32_t required);

// All r-subsets of `w` in lexicographic order.
void for_each_rset(const VertexSet& w, unsigned r,
                   const std::function<void(std::span<const Vertex>)>& fn);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(std::span<const Vertex> a, const VertexSet& b);
bool intersects(std::span<const Vertex> a, const VertexSet& b);
VertexSet iota_set(Vertex begin, Vertex end);

}  // namespace hypersep
