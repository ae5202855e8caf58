#include "hypersep/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hypersep/binomial.hpp"
#include "hypersep/constructions.hpp"

namespace hypersep {

namespace {

using Mask = std::uint32_t;

// Everything here works on vertex masks and edge-index masks, independent of
// the connectivity module.
class Checker {
 public:
  Checker(unsigned n, unsigned k, unsigned r, unsigned min_size) {
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      if (static_cast<unsigned>(std::popcount(m)) == r) rsets_.push_back(m);
    }
    for (Mask w = 0; w < (Mask{1} << n); ++w) {
      if (static_cast<unsigned>(std::popcount(w)) < min_size) continue;
      Window window{w, {}};
      for (Mask s = w;; s = (s - 1) & w) {
        if (static_cast<unsigned>(std::popcount(s)) == k) window.survivors.push_back(w & ~s);
        if (s == 0) break;
      }
      windows_.push_back(std::move(window));
    }
  }

  const std::vector<Mask>& rsets() const { return rsets_; }

  // Whether edge set `h` (bits index rsets()) has a (k+1)-connected H[W]
  // with W containing `must`.
  bool fails(Mask h, Mask must) const {
    for (const auto& window : windows_) {
      if ((window.w & must) != must) continue;
      bool all_connected = true;
      for (Mask u : window.survivors) {
        if (!connected(h, u)) {
          all_connected = false;
          break;
        }
      }
      if (all_connected) return true;
    }
    return false;
  }

 private:
  struct Window {
    Mask w;
    std::vector<Mask> survivors;
  };

  bool connected(Mask h, Mask u) const {
    Mask comp = u & (~u + 1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Mask rest = h; rest; rest &= rest - 1) {
        const Mask e = rsets_[std::countr_zero(rest)];
        if ((e & u) == e && (e & comp) && (e & ~comp)) {
          comp |= e;
          grew = true;
        }
      }
    }
    return comp == u;
  }

  std::vector<Mask> rsets_;
  std::vector<Window> windows_;
};

struct SubtreeResult {
  bool found = false;
  unsigned best = 0;
  Mask witness = 0;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
};

class Search {
 public:
  Search(const Checker& checker, unsigned floor) : checker_(checker), floor_(floor), total_(checker.rsets().size()) {}

  SubtreeResult run(unsigned depth, Mask prefix) {
    result_ = {};
    Mask h = 0;
    unsigned count = 0;
    for (unsigned i = 0; i < depth; ++i) {
      if (prefix >> (depth - 1 - i) & 1U) continue;  // set bit: exclude, so index order is DFS order
      h |= Mask{1} << i;
      ++count;
      ++result_.nodes;
      if (checker_.fails(h, checker_.rsets()[i])) {
        ++result_.prunes;
        return result_;
      }
    }
    descend(depth, h, count);
    return result_;
  }

 private:
  void descend(unsigned i, Mask h, unsigned count) {
    ++result_.nodes;
    const unsigned target = std::max(floor_, result_.found ? result_.best + 1 : 0U);
    if (count + (total_ - i) < target) {
      ++result_.prunes;
      return;
    }
    if (i == total_) {
      result_.found = true;
      result_.best = count;
      result_.witness = h;
      return;
    }
    const Mask with = h | (Mask{1} << i);
    if (checker_.fails(with, checker_.rsets()[i])) {
      ++result_.prunes;
    } else {
      descend(i + 1, with, count + 1);
    }
    descend(i + 1, h, count);
  }

  const Checker& checker_;
  unsigned floor_;
  unsigned total_;
  SubtreeResult result_;
};

// Edge count of a verified construction on these parameters, if any.
std::optional<unsigned> construction_floor(const Checker& checker, unsigned n, unsigned k, unsigned r) {
  if (k == 0 || n % k != 0 || n / k < 2 || n < r) return std::nullopt;
  const ConstructionOutput c = mader_hypergraph(n / k, k, r);
  Mask h = 0;
  const auto& rsets = checker.rsets();
  c.graph.for_each_edge([&](std::span<const Vertex> e) {
    Mask m = 0;
    for (Vertex v : e) m |= Mask{1} << v;
    h |= Mask{1} << (std::find(rsets.begin(), rsets.end(), m) - rsets.begin());
  });
  if (checker.fails(h, 0)) return std::nullopt;
  return static_cast<unsigned>(std::popcount(h));
}

Hypergraph to_hypergraph(unsigned n, unsigned r, const std::vector<Mask>& rsets, Mask h) {
  Hypergraph out(r, n);
  for (Mask rest = h; rest; rest &= rest - 1) {
    VertexSet e;
    for (Mask m = rsets[std::countr_zero(rest)]; m; m &= m - 1) e.push_back(static_cast<Vertex>(std::countr_zero(m)));
    out.add_edge(e);
  }
  return out;
}

}  // namespace

OracleResult oracle_max_edges(unsigned n, unsigned k, unsigned r, unsigned min_size, const OracleOptions& options) {
  if (r < 1 || n < r) throw std::invalid_argument("need 1 <= r <= n");
  if (binom_int(n, r) > kOracleMaxRsets) throw std::invalid_argument("C(n, r) exceeds the oracle limit of 25");
  if (n < k + 2) throw std::invalid_argument("need n >= k + 2");
  if (min_size < k + 2) throw std::invalid_argument("need min_size >= k + 2");
  const Checker checker(n, k, r, min_size);
  OracleResult out;
  out.n = n;
  out.k = k;
  out.r = r;
  out.min_size = min_size;
  if (options.construction_seed) {
    if (auto seed = construction_floor(checker, n, k, r)) out.seed = *seed;
  }
  const unsigned total = static_cast<unsigned>(checker.rsets().size());
  const unsigned depth = std::min(total, 10U);
  const unsigned subtrees = 1U << depth;
  out.subtrees = subtrees;

  auto solve = [&](unsigned floor) {
    std::vector<SubtreeResult> results(subtrees);
    std::atomic<unsigned> next{0};
    auto worker = [&] {
      Search search(checker, floor);
      for (unsigned i = next++; i < subtrees; i = next++) results[i] = search.run(depth, i);
    };
    const unsigned threads = std::max(1U, std::min(options.threads, subtrees));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
  };

  std::vector<SubtreeResult> results = solve(out.seed.value_or(0));
  if (std::none_of(results.begin(), results.end(), [](const SubtreeResult& s) { return s.found; })) {
    // A seed above the true optimum would hide every set; it never should.
    results = solve(0);
  }
  const SubtreeResult* best = nullptr;
  for (const auto& s : results) {
    out.nodes += s.nodes;
    out.prunes += s.prunes;
    if (s.found && (!best || s.best > best->best)) best = &s;
  }
  if (!best) throw std::logic_error("oracle found no admissible edge set");
  out.max_edges = best->best;
  out.witness = to_hypergraph(n, r, checker.rsets(), best->witness);
  return out;
}

}  // namespace hypersep
