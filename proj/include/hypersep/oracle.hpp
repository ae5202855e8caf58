#pragma once

#include <cstdint>
#include <optional>

#include "hypersep/hypergraph.hpp"

namespace hypersep {

inline constexpr unsigned kOracleMaxRsets = 25;

struct OracleOptions {
  unsigned threads = 1;
  // Start from the edge count of a verified construction when one applies.
  bool construction_seed = true;
};

struct OracleResult {
  unsigned n = 0;
  unsigned k = 0;
  unsigned r = 0;
  unsigned min_size = 0;
  std::uint64_t max_edges = 0;
  Hypergraph witness;
  std::optional<std::uint64_t> seed;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  unsigned subtrees = 0;
};

// Largest edge set on n vertices with no W, |W| >= min_size, for which H[W]
// is (k+1)-connected. Exhaustive depth-first search, edges included before
// excluded; a failing set is cut together with all its supersets. The work
// splits into fixed subtrees searched independently, and ties go to the
// earliest subtree, so value, witness and statistics ignore `threads`.
// Requires C(n,r) <= 25, n >= k + 2 and min_size >= k + 2.
OracleResult oracle_max_edges(unsigned n, unsigned k, unsigned r, unsigned min_size,
                              const OracleOptions& options = {});

}  // namespace hypersep
