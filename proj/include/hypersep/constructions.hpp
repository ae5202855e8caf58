#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypersep/hypergraph.hpp"
#include "hypersep/rational.hpp"
#include "hypersep/septree.hpp"

namespace hypersep {

struct ConstructionOutput {
  std::string family;
  Hypergraph graph;
  SeparatorTree tree;  // oriented certificate for (k, c)
  unsigned k = 0;
  Rational c;
  BigInt predicted_edges;
  // Parameter record in emission order.
  std::vector<std::pair<std::string, Rational>> params;
};

// Complete atoms, and every r-set that crosses some separator while avoiding
// it removed. At most 64 separators.
Hypergraph saturate(unsigned r, const SeparatorTree& t);

// V_0 independent, V_1..V_{q-1} complete, and every r-set meeting V_0 and
// the rest. Certificate for c = 1.
ConstructionOutput mader_hypergraph(unsigned q, unsigned k, unsigned r);
ConstructionOutput mader_graph(unsigned q, unsigned k);

// k = 2^s r, n = k + 2^{s+1} c k; edge count equals the c^{r-1} >= 2r bound.
ConstructionOutput example1(unsigned s, unsigned r, unsigned c);

// The independent k-set of example1 used for gluing: r/2 exclusive vertices
// per atom, or alternately ceil(r/2) and floor(r/2) for odd r.
VertexSet example1_independent_set(const ConstructionOutput& base);

// m copies of example1 glued along its independent k-set.
ConstructionOutput example1_chain(unsigned s, unsigned r, unsigned c, unsigned m);

// c = 1, k = 2^s r, pk integer in [1, k]; n = k + 2^{s+1}(1+p)k.
ConstructionOutput example2(unsigned s, unsigned r, const Rational& p);

struct GlueResult {
  Hypergraph graph;
  // second_labels[v]: label of H2's vertex v in the glued graph.
  VertexSet second_labels;
};

// H1 keeps its labels; s1[i] is identified with s2[i]; H2's other vertices
// follow in ascending order. Every r-set meeting S and both private parts is
// added. Throws std::invalid_argument when H1[S] and H2[S] differ.
GlueResult glue(const Hypergraph& h1, const Hypergraph& h2, const std::vector<Vertex>& s1,
                const std::vector<Vertex>& s2);

// Copy 1 keeps its labels; copy i >= 2 sends the j-th vertex of V \ S to
// n + (i-2)(n-k) + j. Cross r-sets are edges iff they meet S.
Hypergraph glue_copies(const Hypergraph& h, const VertexSet& s, unsigned m);
// Certificate for glue_copies: nested root separators S over relabelled copies
// of `t`.
SeparatorTree glue_copies_tree(const SeparatorTree& t, unsigned n, const VertexSet& s, unsigned m);

// New vertex n joined by every r-set containing it and meeting S.
Hypergraph extend_by_vertex(const Hypergraph& h, const VertexSet& s);
// Certificate for extend_by_vertex: one atom when it fits, else a new root
// separator S with sides S + v and the old tree.
SeparatorTree extend_by_vertex_tree(const SeparatorTree& t, unsigned n, const VertexSet& s, const Rational& c);

}  // namespace hypersep
