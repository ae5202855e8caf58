#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersep/connectivity.hpp"
#include "hypersep/hypergraph.hpp"
#include "hypersep/rational.hpp"

namespace hypersep {

inline constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

struct SubgraphNode {
  VertexSet vertices;
  std::size_t parent = kNoNode;     // separator index
  std::size_t separator = kNoNode;  // child separator index; kNoNode for atoms
};

struct SeparatorNode {
  VertexSet vertices;
  std::size_t parent = kNoNode;  // subgraph index
  std::size_t small = kNoNode;   // subgraph index
  std::size_t big = kNoNode;     // subgraph index
};

// Alternating subgraph/separator tree; subgraphs[0] is the root.
struct SeparatorTree {
  unsigned k = 0;
  std::vector<SubgraphNode> subgraphs;
  std::vector<SeparatorNode> separators;

  static SeparatorTree single_atom(VertexSet vertices, unsigned k);

  // Splits atom `node` by `s` into children `a` and `b` (stored small, big).
  std::size_t split(std::size_t node, VertexSet s, VertexSet a, VertexSet b);

  bool is_atom(std::size_t node) const { return subgraphs[node].separator == kNoNode; }
  std::vector<std::size_t> atoms() const;
};

struct AbstractSubgraph {
  std::uint64_t size = 0;
  std::size_t parent = kNoNode;
  std::size_t separator = kNoNode;
};

struct AbstractSeparator {
  std::size_t parent = kNoNode;
  std::size_t small = kNoNode;
  std::size_t big = kNoNode;
};

struct AbstractTree {
  unsigned k = 0;
  std::vector<AbstractSubgraph> subgraphs;
  std::vector<AbstractSeparator> separators;

  bool is_atom(std::size_t node) const { return subgraphs[node].separator == kNoNode; }
  std::vector<std::size_t> atoms() const;
  std::uint64_t vertex_count() const { return subgraphs.empty() ? 0 : subgraphs[0].size; }
};

// Normal iff size > 4k/3; tiny otherwise.
inline bool is_normal_size(std::uint64_t size, unsigned k) { return 3 * size > 4 * std::uint64_t{k}; }

std::uint64_t atom_size_limit(unsigned k, const Rational& c);

struct BuildOutcome {
  std::optional<SeparatorTree> tree;
  // On failure: the subgraph node that admits no separator of size <= k.
  VertexSet stuck;
  ConnectivityWitness stuck_witness;
};

// Recursive decomposition with find_separator; the result is oriented.
BuildOutcome build_separator_tree(const Hypergraph& h, unsigned k, const Rational& c);

std::vector<std::string> validate_separator_tree(const Hypergraph& h, const SeparatorTree& t,
                                                 unsigned k, const Rational& c);

struct SeparatorOrientation {
  std::size_t small = kNoNode;
  std::size_t big = kNoNode;
  unsigned ell = 0;       // normal atoms in the small branch
  unsigned ell_plus = 0;  // normal atoms in the big branch
  std::uint64_t tiny_small = 0;
  std::uint64_t tiny_big = 0;
  bool balanced = false;
};

struct Orientation {
  std::vector<SeparatorOrientation> separators;
};

// Big branch: more normal atoms, then more tiny vertices, then (labelled
// trees) the side whose private part holds the smallest label; abstract trees
// keep the stored order on full ties.
Orientation orient(const SeparatorTree& t);
Orientation orient(const AbstractTree& t);

SeparatorTree apply_orientation(SeparatorTree t, const Orientation& sigma);

// Collapses every separator whose two children are atoms with
// |A| + |B| < (c + 2)k into one atom.
SeparatorTree merge_small_sibling_atoms(SeparatorTree t, const Rational& c);

enum class AntiEdgeKind { kAtomic, kFree, kBonded };

struct AntiEdgeClass {
  AntiEdgeKind kind = AntiEdgeKind::kAtomic;
  std::size_t node = kNoNode;  // subgraph node where the recursion stopped
};

AntiEdgeClass classify_anti_edge(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma,
                                 const VertexSet& e, std::size_t node);

// Anti-edges inside S that are free in the small branch of S.
std::uint64_t free_count(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma,
                         std::size_t separator);

struct AtomTerm {
  std::size_t node = kNoNode;
  std::uint64_t size = 0;
  std::uint64_t anti_edges = 0;
};

struct SeparatorTerm {
  std::size_t separator = kNoNode;
  std::uint64_t anti_edges = 0;          // anti-edges inside S
  std::uint64_t bonded_edges = 0;        // edges meeting S and both private parts
  std::uint64_t bonded_anti_direct = 0;  // counted bonded anti-edges
  BigInt bonded_anti_formula;            // inclusion-exclusion minus bonded edges
};

struct EdgeLedger {
  unsigned n = 0;
  unsigned r = 0;
  unsigned k = 0;
  std::uint64_t edges = 0;
  BigInt rhs;
  std::vector<AtomTerm> atoms;
  std::vector<SeparatorTerm> separators;
};

// Throws std::logic_error when either count disagrees.
EdgeLedger audit_edge_identity(const Hypergraph& h, const SeparatorTree& t);

// C(n,r) - C(n-k,r) + sum_A C(|A|-k,r) + sum_S f(S).
BigInt free_sum_upper_bound(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma);

struct AssignmentData {
  // (tiny atom, separator) -> tiny vertices of the atom assigned to it.
  std::map<std::pair<std::size_t, std::size_t>, unsigned> m_atom;
  std::vector<unsigned> m_separator;
  std::vector<Vertex> unassigned;
};

AssignmentData assignment(const SeparatorTree& t, const Orientation& sigma);

AbstractTree abstract_tree(const SeparatorTree& t);

std::vector<std::string> validate_abstract_tree(const AbstractTree& t);

struct DeletionResult {
  AbstractTree tree;
  // origin[i]: separator of the input tree that became separator i.
  std::vector<std::size_t> origin;
  std::uint64_t removed_vertices = 0;
};

// Requires at least one normal atom and no separator with two tiny atoms.
DeletionResult delete_tiny_atoms(const AbstractTree& t);

// Rejects sum a_i > t.
Rational essential_difference(const AbstractTree& t, unsigned r);

BigInt fhat(unsigned k, unsigned r, unsigned ell);

BigInt free_difference(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma,
                       std::size_t separator);

// Free-count ceiling when m tiny vertices are assigned to S; per_atom lists the
// m(A,S). Requires ell >= 1.
BigInt tiny_free_bound(unsigned k, unsigned r, unsigned ell, unsigned m, const std::vector<unsigned>& per_atom);

}  // namespace hypersep
