#include "hypersep/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hypersep/binomial.hpp"
#include "hypersep/colex.hpp"

namespace hypersep {

std::vector<std::string> validate_hypergraph(const HypergraphData& data) {
  std::vector<std::string> out;
  if (data.r < 2) out.push_back("uniformity r=" + std::to_string(data.r) + " is below 2");
  if (data.n < 1) out.push_back("vertex count n=" + std::to_string(data.n) + " is below 1");
  const std::vector<long long>* prev = nullptr;
  for (std::size_t i = 0; i < data.edges.size(); ++i) {
    const auto& e = data.edges[i];
    const std::string where = "edge #" + std::to_string(i);
    if (static_cast<long long>(e.size()) != data.r) {
      out.push_back(where + " has " + std::to_string(e.size()) + " members, expected " +
                    std::to_string(data.r));
      prev = nullptr;
      continue;
    }
    if (std::any_of(e.begin(), e.end(), [&](long long v) { return v < 0 || v >= data.n; })) {
      out.push_back(where + " has a member outside [0, n-1]");
      prev = nullptr;
      continue;
    }
    std::vector<long long> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back(where + " repeats a vertex");
      prev = nullptr;
      continue;
    }
    if (sorted != e) {
      out.push_back(where + " is not in ascending order");
      prev = nullptr;
      continue;
    }
    if (prev != nullptr) {
      if (*prev == e) {
        out.push_back(where + " duplicates the previous edge");
      } else if (e < *prev) {
        out.push_back(where + " breaks lexicographic edge order");
      }
    }
    prev = &e;
  }
  return out;
}

Hypergraph::Hypergraph(unsigned r, unsigned n) : r_(r), n_(n) {
  if (r == 0 || r > BinomialTable::kMaxR) throw std::length_error("uniformity out of supported range");
  if (n > BinomialTable::kMaxN) throw std::length_error("vertex count out of supported range");
  rset_count_ = BinomialTable::instance()(n, r);
  if (rset_count_ > kMaxRsets) {
    throw std::length_error("C(n, r) exceeds the dense edge-set capacity");
  }
  words_.assign((rset_count_ + 63) / 64, 0);
}

Hypergraph Hypergraph::from_data(const HypergraphData& data) {
  const auto violations = validate_hypergraph(data);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid hypergraph:";
    for (const auto& v : violations) msg << "\n  " << v;
    throw std::invalid_argument(msg.str());
  }
  Hypergraph h(static_cast<unsigned>(data.r), static_cast<unsigned>(data.n));
  VertexSet e(h.r_);
  for (const auto& raw : data.edges) {
    for (unsigned i = 0; i < h.r_; ++i) e[i] = static_cast<Vertex>(raw[i]);
    h.add_edge(e);
  }
  return h;
}

Hypergraph Hypergraph::from_edges(unsigned r, unsigned n, const std::vector<VertexSet>& edges) {
  HypergraphData data{r, n, {}};
  std::vector<std::vector<long long>> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) sorted.emplace_back(e.begin(), e.end());
  std::sort(sorted.begin(), sorted.end());
  data.edges = std::move(sorted);
  return from_data(data);
}

Hypergraph Hypergraph::complete(unsigned r, unsigned n) {
  Hypergraph h(r, n);
  for (std::uint64_t i = 0; i < h.rset_count_; ++i) h.set(i);
  return h;
}

Hypergraph Hypergraph::from_words(unsigned r, unsigned n, std::vector<std::uint64_t> words) {
  Hypergraph h(r, n);
  if (words.size() != h.words_.size()) throw std::invalid_argument("bitset size differs from C(n, r)");
  const unsigned tail = static_cast<unsigned>(h.rset_count_ & 63);
  if (tail != 0 && (words.back() >> tail) != 0) throw std::invalid_argument("bits set past C(n, r)");
  h.words_ = std::move(words);
  h.edge_count_ = 0;
  for (std::uint64_t w : h.words_) h.edge_count_ += static_cast<std::uint64_t>(std::popcount(w));
  return h;
}

std::uint64_t Hypergraph::rank(std::span<const Vertex> sorted) const {
  const auto& binom = BinomialTable::instance();
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) out += binom(sorted[i], static_cast<unsigned>(i + 1));
  return out;
}

VertexSet Hypergraph::unrank(std::uint64_t rank) const {
  const auto& binom = BinomialTable::instance();
  VertexSet out(r_);
  Vertex hi = n_;
  for (unsigned i = r_; i >= 1; --i) {
    Vertex v = hi;
    while (v > 0 && binom(v - 1, i) > rank) --v;
    --v;
    out[i - 1] = v;
    rank -= binom(v, i);
    hi = v;
  }
  return out;
}

void Hypergraph::set(std::uint64_t rank) {
  const std::uint64_t mask = std::uint64_t{1} << (rank & 63);
  std::uint64_t& word = words_[rank >> 6];
  if (!(word & mask)) {
    word |= mask;
    ++edge_count_;
  }
}

void Hypergraph::reset(std::uint64_t rank) {
  const std::uint64_t mask = std::uint64_t{1} << (rank & 63);
  std::uint64_t& word = words_[rank >> 6];
  if (word & mask) {
    word &= ~mask;
    --edge_count_;
  }
}

void Hypergraph::for_each_edge(const std::function<void(std::span<const Vertex>)>& fn) const {
  for_each_rset(iota_set(0, n_), r_, [&](std::span<const Vertex> e) {
    if (contains(e)) fn(e);
  });
}

std::vector<VertexSet> Hypergraph::edges() const {
  std::vector<VertexSet> out;
  out.reserve(edge_count_);
  for_each_edge([&](std::span<const Vertex> e) { out.emplace_back(e.begin(), e.end()); });
  return out;
}

std::uint64_t Hypergraph::popcount_range(std::uint64_t begin, std::uint64_t length) const {
  if (length == 0) return 0;
  const std::uint64_t end = begin + length;
  std::uint64_t first = begin >> 6;
  const std::uint64_t last = (end - 1) >> 6;
  const std::uint64_t head = ~std::uint64_t{0} << (begin & 63);
  const std::uint64_t tail = ~std::uint64_t{0} >> (63 - ((end - 1) & 63));
  if (first == last) return std::popcount(words_[first] & head & tail);
  std::uint64_t out = std::popcount(words_[first] & head);
  for (++first; first < last; ++first) out += std::popcount(words_[first]);
  return out + std::popcount(words_[last] & tail);
}

namespace {

// Maximal runs of consecutive labels in a sorted vertex list.
struct Runs {
  struct Run {
    Vertex label;
    std::size_t length;
  };
  std::vector<Run> runs;

  explicit Runs(std::span<const Vertex> verts) {
    for (std::size_t i = 0; i < verts.size();) {
      std::size_t j = i + 1;
      while (j < verts.size() && verts[j] == verts[j - 1] + 1) ++j;
      runs.push_back({verts[i], j - i});
      i = j;
    }
  }

  // Edges among base + label over the first `count` listed vertices.
  std::uint64_t count_edges(const Hypergraph& h, std::uint64_t base, std::size_t count) const {
    std::uint64_t out = 0;
    for (const Run& run : runs) {
      if (count == 0) break;
      const std::size_t take = std::min(count, run.length);
      out += h.popcount_range(base + run.label, take);
      count -= take;
    }
    return out;
  }
};

struct Empty {};

}  // namespace

InducedSubgraph induced_subgraph(const Hypergraph& h, const VertexSet& w) {
  InducedSubgraph out{Hypergraph(h.r(), static_cast<unsigned>(w.size())), w};
  colex_walk(
      std::span<const Vertex>(w), h.r(), Empty{},
      [](const Empty& s, Vertex, unsigned) { return std::optional<Empty>(s); },
      [&](const Empty&, std::uint64_t lb, std::uint64_t pb, std::size_t limit) {
        for (std::size_t j = 0; j < limit; ++j) {
          if (h.test(lb + w[j])) out.graph.set(pb + j);
        }
      });
  return out;
}

std::uint64_t count_induced_edges(const Hypergraph& h, const VertexSet& w) {
  const Runs runs{std::span<const Vertex>(w)};
  std::uint64_t total = 0;
  colex_walk(
      std::span<const Vertex>(w), h.r(), Empty{},
      [](const Empty& s, Vertex, unsigned) { return std::optional<Empty>(s); },
      [&](const Empty&, std::uint64_t lb, std::uint64_t, std::size_t limit) {
        total += runs.count_edges(h, lb, limit);
      });
  return total;
}

std::uint64_t anti_edge_count(const Hypergraph& h, const VertexSet& w) {
  const std::uint64_t all = BinomialTable::instance()(static_cast<unsigned>(w.size()), h.r());
  return all - count_induced_edges(h, w);
}

PartCount count_by_parts(const Hypergraph& h, const std::vector<VertexSet>& parts,
                         std::uint32_t required) {
  if (parts.size() > 32) throw std::invalid_argument("at most 32 parts");
  VertexSet merged;
  for (const auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) {
    throw std::invalid_argument("parts must be disjoint");
  }
  if (!merged.empty() && merged.back() >= h.n()) throw std::invalid_argument("part outside vertex range");

  std::vector<std::uint8_t> tag(h.n(), 0);
  for (std::size_t t = 0; t < parts.size(); ++t) {
    for (Vertex v : parts[t]) tag[v] = static_cast<std::uint8_t>(t);
  }
  // below[t][p]: members of part t among merged[0..p).
  std::vector<std::vector<std::uint32_t>> below(parts.size(),
                                                std::vector<std::uint32_t>(merged.size() + 1, 0));
  for (std::size_t p = 0; p < merged.size(); ++p) {
    for (std::size_t t = 0; t < parts.size(); ++t) below[t][p + 1] = below[t][p];
    ++below[tag[merged[p]]][p + 1];
  }
  const Runs merged_runs{std::span<const Vertex>(merged)};
  std::vector<Runs> part_runs;
  for (const auto& p : parts) part_runs.emplace_back(std::span<const Vertex>(p));

  PartCount out;
  colex_walk(
      std::span<const Vertex>(merged), h.r(), std::uint32_t{0},
      [&](std::uint32_t covered, Vertex v, unsigned remaining) -> std::optional<std::uint32_t> {
        const std::uint32_t next = covered | (std::uint32_t{1} << tag[v]);
        if (static_cast<unsigned>(std::popcount(required & ~next)) > remaining) return std::nullopt;
        return next;
      },
      [&](std::uint32_t covered, std::uint64_t lb, std::uint64_t, std::size_t limit) {
        const std::uint32_t needed = required & ~covered;
        if (needed == 0) {
          out.rsets += limit;
          out.edges += merged_runs.count_edges(h, lb, limit);
        } else if (std::popcount(needed) == 1) {
          const int t = std::countr_zero(needed);
          const std::size_t count = below[t][limit];
          out.rsets += count;
          out.edges += part_runs[t].count_edges(h, lb, count);
        }
      });
  return out;
}

void for_each_rset(const VertexSet& w, unsigned r,
                   const std::function<void(std::span<const Vertex>)>& fn) {
  const std::size_t m = w.size();
  if (r > m) return;
  std::vector<std::size_t> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i;
  VertexSet cur(r);
  while (true) {
    for (unsigned i = 0; i < r; ++i) cur[i] = w[idx[i]];
    fn(cur);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == m - r + static_cast<std::size_t>(i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const Vertex> a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(std::span<const Vertex> a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

VertexSet iota_set(Vertex begin, Vertex end) {
  VertexSet out;
  out.reserve(end > begin ? end - begin : 0);
  for (Vertex v = begin; v < end; ++v) out.push_back(v);
  return out;
}

}  // namespace hypersep
