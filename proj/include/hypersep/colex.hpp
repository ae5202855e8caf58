#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "hypersep/binomial.hpp"
#include "hypersep/hypergraph.hpp"

namespace hypersep {

// Walks r-subsets of `verts` (ascending) from the top down. After fixing the
// r-1 largest members it calls leaf(state, label_base, position_base, limit):
// the smallest member then ranges over verts[0..limit), with colex rank
// label_base + verts[j] in the full labelling and position_base + j in the
// relabelling by position. `step(state, v, remaining)` extends the state when v
// is chosen with `remaining` smaller members still to pick, or prunes.
template <class State, class Step, class Leaf>
void colex_walk(std::span<const Vertex> verts, unsigned r, const State& init, Step&& step,
                Leaf&& leaf) {
  const auto& binom = BinomialTable::instance();
  if (r == 0 || verts.size() < r) return;
  if (r == 1) {
    leaf(init, std::uint64_t{0}, std::uint64_t{0}, verts.size());
    return;
  }
  auto walk = [&](auto& self, unsigned depth, std::size_t hi, const State& state,
                  std::uint64_t label_base, std::uint64_t pos_base) -> void {
    for (std::size_t p = depth - 1; p < hi; ++p) {
      const Vertex v = verts[p];
      std::optional<State> next = step(state, v, depth - 1);
      if (!next) continue;
      const std::uint64_t lb = label_base + binom(v, depth);
      const std::uint64_t pb = pos_base + binom(static_cast<unsigned>(p), depth);
      if (depth == 2) {
        leaf(*next, lb, pb, p);
      } else {
        self(self, depth - 1, p, *next, lb, pb);
      }
    }
  };
  walk(walk, r, verts.size(), init, 0, 0);
}

}  // namespace hypersep
