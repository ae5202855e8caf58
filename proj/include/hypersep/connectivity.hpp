#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersep/hypergraph.hpp"

namespace hypersep {

// Strong deletion: every edge meeting S is discarded before connectivity is
// judged on V \ S. Components are sorted by smallest member.
std::vector<VertexSet> components_after_strong_deletion(const Hypergraph& h, const VertexSet& s);

bool is_connected(const Hypergraph& h);

struct ConnectivityWitness {
  enum class Kind { kConnected, kRefuted, kTooFewVertices };
  Kind kind = Kind::kConnected;
  // Minimum-size disconnecting set when kind == kRefuted.
  VertexSet separator;

  bool connected() const { return kind == Kind::kConnected; }
};

ConnectivityWitness is_k1_connected(const Hypergraph& h, unsigned k);

// A ∩ B = S, A ∪ B = V, both sides strictly larger than S, and no edge
// avoiding S meets both A \ S and B \ S.
struct Separation {
  VertexSet s;
  VertexSet a;
  VertexSet b;
};

// Lexicographically first k-set whose strong deletion disconnects H. Its
// components are folded into A (the one holding the smallest label) and B.
// Throws std::invalid_argument when n <= k + 1.
std::optional<Separation> find_separator(const Hypergraph& h, unsigned k);

// Independent re-check of a separation; empty iff valid.
std::vector<std::string> check_separation(const Hypergraph& h, const Separation& sep, unsigned k);

// Some W with |W| >= min_size and H[W] (k+1)-connected, searched from the
// largest W down. Throws std::invalid_argument when min_size < k + 2.
std::optional<VertexSet> contains_k1_connected_subgraph(const Hypergraph& h, unsigned k,
                                                        unsigned min_size);

}  // namespace hypersep
