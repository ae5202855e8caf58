#include "hypersep/septree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hypersep/binomial.hpp"

namespace hypersep {

SeparatorTree SeparatorTree::single_atom(VertexSet vertices, unsigned k) {
  SeparatorTree t;
  t.k = k;
  t.subgraphs.push_back({std::move(vertices), kNoNode, kNoNode});
  return t;
}

std::size_t SeparatorTree::split(std::size_t node, VertexSet s, VertexSet a, VertexSet b) {
  if (!is_atom(node)) throw std::logic_error("split of a node that already has a separator");
  const std::size_t sep = separators.size();
  const std::size_t first = subgraphs.size();
  separators.push_back({std::move(s), node, first, first + 1});
  subgraphs.push_back({std::move(a), sep, kNoNode});
  subgraphs.push_back({std::move(b), sep, kNoNode});
  subgraphs[node].separator = sep;
  return sep;
}

std::vector<std::size_t> SeparatorTree::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    if (is_atom(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> AbstractTree::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    if (is_atom(i)) out.push_back(i);
  }
  return out;
}

std::uint64_t atom_size_limit(unsigned k, const Rational& c) {
  const BigInt fl = floor(c * k);
  if (fl < 0) throw std::invalid_argument("c must be nonnegative");
  return fl.get_ui() + k;
}

namespace {

// Size-only view shared by labelled and abstract trees.
struct Shape {
  unsigned k = 0;
  std::vector<std::uint64_t> size;
  std::vector<std::size_t> separator_of;
  std::vector<std::pair<std::size_t, std::size_t>> children;  // stored (small, big)
};

Shape shape_of(const SeparatorTree& t) {
  Shape s;
  s.k = t.k;
  for (const auto& node : t.subgraphs) {
    s.size.push_back(node.vertices.size());
    s.separator_of.push_back(node.separator);
  }
  for (const auto& sep : t.separators) s.children.emplace_back(sep.small, sep.big);
  return s;
}

Shape shape_of(const AbstractTree& t) {
  Shape s;
  s.k = t.k;
  for (const auto& node : t.subgraphs) {
    s.size.push_back(node.size);
    s.separator_of.push_back(node.separator);
  }
  for (const auto& sep : t.separators) s.children.emplace_back(sep.small, sep.big);
  return s;
}

struct BranchTally {
  unsigned normal = 0;
  std::uint64_t tiny = 0;
};

// tie(sep) answers whether the stored small child should become big when
// normal and tiny tallies agree.
Orientation orient_shape(const Shape& s, const std::function<bool(std::size_t)>& tie) {
  Orientation out;
  out.separators.resize(s.children.size());
  if (s.size.empty()) return out;
  std::vector<BranchTally> tally(s.size.size());
  std::function<void(std::size_t)> visit = [&](std::size_t node) {
    const std::size_t sep = s.separator_of[node];
    if (sep == kNoNode) {
      if (is_normal_size(s.size[node], s.k)) {
        tally[node].normal = 1;
      } else {
        tally[node].tiny = s.size[node] - s.k;
      }
      return;
    }
    const auto [x, y] = s.children[sep];
    visit(x);
    visit(y);
    tally[node].normal = tally[x].normal + tally[y].normal;
    tally[node].tiny = tally[x].tiny + tally[y].tiny;
    bool swap = false;
    if (tally[x].normal != tally[y].normal) {
      swap = tally[x].normal > tally[y].normal;
    } else if (tally[x].tiny != tally[y].tiny) {
      swap = tally[x].tiny > tally[y].tiny;
    } else {
      swap = tie(sep);
    }
    const std::size_t small = swap ? y : x;
    const std::size_t big = swap ? x : y;
    SeparatorOrientation& o = out.separators[sep];
    o.small = small;
    o.big = big;
    o.ell = tally[small].normal;
    o.ell_plus = tally[big].normal;
    o.tiny_small = tally[small].tiny;
    o.tiny_big = tally[big].tiny;
    o.balanced = o.ell == o.ell_plus;
  };
  visit(0);
  return out;
}

bool contains_vertex(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

bool well_formed(const VertexSet& s, unsigned n) {
  if (!std::is_sorted(s.begin(), s.end())) return false;
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return s.empty() || s.back() < n;
}

// Copies the live part of `t` reachable from the root, skipping separators in
// `dropped` (their parent becomes an atom).
SeparatorTree compact(const SeparatorTree& t, const std::vector<char>& dropped) {
  SeparatorTree out;
  out.k = t.k;
  std::function<std::size_t(std::size_t, std::size_t)> copy = [&](std::size_t node, std::size_t parent) {
    const std::size_t id = out.subgraphs.size();
    out.subgraphs.push_back({t.subgraphs[node].vertices, parent, kNoNode});
    const std::size_t sep = t.subgraphs[node].separator;
    if (sep != kNoNode && !dropped[sep]) {
      const std::size_t new_sep = out.separators.size();
      out.separators.push_back({t.separators[sep].vertices, id, kNoNode, kNoNode});
      out.subgraphs[id].separator = new_sep;
      const std::size_t small = copy(t.separators[sep].small, new_sep);
      const std::size_t big = copy(t.separators[sep].big, new_sep);
      out.separators[new_sep].small = small;
      out.separators[new_sep].big = big;
    }
    return id;
  };
  if (!t.subgraphs.empty()) copy(0, kNoNode);
  return out;
}

}  // namespace

Orientation orient(const SeparatorTree& t) {
  return orient_shape(shape_of(t), [&](std::size_t sep) {
    const auto& node = t.separators[sep];
    const VertexSet x = set_difference(t.subgraphs[node.small].vertices, node.vertices);
    const VertexSet y = set_difference(t.subgraphs[node.big].vertices, node.vertices);
    if (x.empty()) return false;
    if (y.empty()) return true;
    return x.front() < y.front();
  });
}

Orientation orient(const AbstractTree& t) {
  return orient_shape(shape_of(t), [](std::size_t) { return false; });
}

SeparatorTree apply_orientation(SeparatorTree t, const Orientation& sigma) {
  for (std::size_t i = 0; i < t.separators.size(); ++i) {
    t.separators[i].small = sigma.separators[i].small;
    t.separators[i].big = sigma.separators[i].big;
  }
  return t;
}

SeparatorTree merge_small_sibling_atoms(SeparatorTree t, const Rational& c) {
  while (true) {
    std::vector<char> dropped(t.separators.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < t.separators.size(); ++i) {
      const auto& sep = t.separators[i];
      if (!t.is_atom(sep.small) || !t.is_atom(sep.big)) continue;
      const Rational total(static_cast<unsigned long>(t.subgraphs[sep.small].vertices.size() +
                                                      t.subgraphs[sep.big].vertices.size()));
      if (total < (c + 2) * t.k) {
        dropped[i] = 1;
        any = true;
      }
    }
    if (!any) return t;
    t = compact(t, dropped);
  }
}

BuildOutcome build_separator_tree(const Hypergraph& h, unsigned k, const Rational& c) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  const std::uint64_t limit = atom_size_limit(k, c);
  if (h.n() > limit && h.n() <= k + 1) throw std::invalid_argument("n <= k + 1 but above the atom limit");
  BuildOutcome out;
  SeparatorTree t = SeparatorTree::single_atom(iota_set(0, h.n()), k);
  for (std::size_t i = 0; i < t.subgraphs.size(); ++i) {
    const VertexSet p = t.subgraphs[i].vertices;
    if (p.size() <= limit) continue;
    const InducedSubgraph sub = induced_subgraph(h, p);
    std::optional<Separation> sep;
    if (p.size() > k + 1) sep = find_separator(sub.graph, k);
    if (!sep) {
      out.stuck = p;
      out.stuck_witness = is_k1_connected(sub.graph, k);
      return out;
    }
    auto relabel = [&](const VertexSet& local) {
      VertexSet global;
      for (Vertex v : local) global.push_back(sub.labels[v]);
      return global;
    };
    t.split(i, relabel(sep->s), relabel(sep->a), relabel(sep->b));
  }
  out.tree = apply_orientation(t, orient(t));
  return out;
}

std::vector<std::string> validate_separator_tree(const Hypergraph& h, const SeparatorTree& t, unsigned k,
                                                 const Rational& c) {
  std::vector<std::string> out;
  if (t.subgraphs.empty()) {
    out.push_back("tree has no root");
    return out;
  }
  const std::uint64_t limit = atom_size_limit(k, c);
  if (t.subgraphs[0].vertices != iota_set(0, h.n())) out.push_back("root vertex set differs from V(H)");
  if (t.subgraphs[0].parent != kNoNode) out.push_back("root has a parent");

  // Structure: every node reached exactly once from the root.
  std::vector<int> seen_sub(t.subgraphs.size(), 0);
  std::vector<int> seen_sep(t.separators.size(), 0);
  bool structural = true;
  std::function<void(std::size_t)> walk = [&](std::size_t node) {
    if (node >= t.subgraphs.size() || seen_sub[node]++) {
      structural = false;
      return;
    }
    const std::size_t sep = t.subgraphs[node].separator;
    if (sep == kNoNode) return;
    if (sep >= t.separators.size() || seen_sep[sep]++ || t.separators[sep].parent != node) {
      structural = false;
      return;
    }
    for (std::size_t child : {t.separators[sep].small, t.separators[sep].big}) {
      if (child >= t.subgraphs.size() || t.subgraphs[child].parent != sep) {
        structural = false;
        return;
      }
      walk(child);
    }
  };
  walk(0);
  if (!structural || std::count(seen_sub.begin(), seen_sub.end(), 1) != static_cast<long>(seen_sub.size()) ||
      std::count(seen_sep.begin(), seen_sep.end(), 1) != static_cast<long>(seen_sep.size())) {
    out.push_back("nodes do not form a single alternating tree");
    return out;
  }

  for (std::size_t i = 0; i < t.subgraphs.size(); ++i) {
    const auto& node = t.subgraphs[i];
    const std::string where = "subgraph node " + std::to_string(i);
    if (!well_formed(node.vertices, h.n())) {
      out.push_back(where + " has a malformed vertex set");
      continue;
    }
    if (node.vertices.size() > limit && t.is_atom(i)) {
      out.push_back(where + " is an atom of size " + std::to_string(node.vertices.size()) +
                    " above the limit " + std::to_string(limit));
    }
    if (node.vertices.size() <= limit && !t.is_atom(i)) {
      out.push_back(where + " of size " + std::to_string(node.vertices.size()) + " should be a leaf");
    }
  }
  for (std::size_t i = 0; i < t.separators.size(); ++i) {
    const auto& sep = t.separators[i];
    const std::string where = "separator " + std::to_string(i);
    if (!well_formed(sep.vertices, h.n())) {
      out.push_back(where + " has a malformed vertex set");
      continue;
    }
    if (sep.vertices.size() != k) {
      out.push_back(where + " has size " + std::to_string(sep.vertices.size()) + ", expected " + std::to_string(k));
    }
    const VertexSet& p = t.subgraphs[sep.parent].vertices;
    const VertexSet& a = t.subgraphs[sep.small].vertices;
    const VertexSet& b = t.subgraphs[sep.big].vertices;
    if (!well_formed(a, h.n()) || !well_formed(b, h.n()) || !well_formed(p, h.n())) continue;
    if (set_intersection(a, b) != sep.vertices) out.push_back(where + ": children do not meet exactly in S");
    if (set_union(a, b) != p) out.push_back(where + ": children do not cover the parent");
    const VertexSet a_only = set_difference(a, sep.vertices);
    const VertexSet b_only = set_difference(b, sep.vertices);
    if (a_only.empty() || b_only.empty()) {
      out.push_back(where + ": a side has no private vertex");
      continue;
    }
    if (!set_intersection(a_only, b_only).empty()) continue;
    const PartCount crossing = count_by_parts(h, {a_only, b_only}, 0b11);
    if (crossing.edges > 0) {
      out.push_back(where + ": " + std::to_string(crossing.edges) + " edges avoid S and cross its sides");
    }
  }
  return out;
}

AntiEdgeClass classify_anti_edge(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma,
                                 const VertexSet& e, std::size_t node) {
  if (e.size() != h.r() || !well_formed(e, h.n())) throw std::invalid_argument("not an r-set of V(H)");
  if (h.contains(e)) throw std::invalid_argument("classify_anti_edge called on an edge");
  if (!is_subset(e, t.subgraphs.at(node).vertices)) throw std::invalid_argument("r-set not inside the node");
  while (true) {
    const std::size_t sep = t.subgraphs[node].separator;
    if (sep == kNoNode) return {AntiEdgeKind::kAtomic, node};
    const VertexSet& s = t.separators[sep].vertices;
    const std::size_t small = sigma.separators[sep].small;
    const std::size_t big = sigma.separators[sep].big;
    const VertexSet& a = t.subgraphs[small].vertices;
    const VertexSet& b = t.subgraphs[big].vertices;
    bool meets_s = false;
    bool meets_a = false;
    bool meets_b = false;
    for (Vertex v : e) {
      if (contains_vertex(s, v)) {
        meets_s = true;
      } else if (contains_vertex(a, v)) {
        meets_a = true;
      } else if (contains_vertex(b, v)) {
        meets_b = true;
      }
    }
    if (meets_a && meets_b) return {meets_s ? AntiEdgeKind::kBonded : AntiEdgeKind::kFree, node};
    node = is_subset(e, b) ? big : small;
  }
}

std::uint64_t free_count(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma,
                         std::size_t separator) {
  const std::size_t small = sigma.separators.at(separator).small;
  std::uint64_t out = 0;
  for_each_rset(t.separators[separator].vertices, h.r(), [&](std::span<const Vertex> e) {
    if (h.contains(e)) return;
    const VertexSet set(e.begin(), e.end());
    if (classify_anti_edge(h, t, sigma, set, small).kind == AntiEdgeKind::kFree) ++out;
  });
  return out;
}

EdgeLedger audit_edge_identity(const Hypergraph& h, const SeparatorTree& t) {
  if (t.subgraphs.empty() || t.subgraphs[0].vertices != iota_set(0, h.n())) {
    throw std::invalid_argument("tree root differs from V(H)");
  }
  EdgeLedger ledger;
  ledger.n = h.n();
  ledger.r = h.r();
  ledger.k = t.k;
  ledger.edges = h.edge_count();
  const long r = h.r();
  const long k = t.k;
  BigInt rhs = binom_int(h.n(), r) - binom_int(static_cast<long>(h.n()) - k, r);
  for (std::size_t node : t.atoms()) {
    const VertexSet& a = t.subgraphs[node].vertices;
    AtomTerm term{node, a.size(), anti_edge_count(h, a)};
    rhs += binom_int(static_cast<long>(a.size()) - k, r) - BigInt(static_cast<unsigned long>(term.anti_edges));
    ledger.atoms.push_back(term);
  }
  std::ostringstream trouble;
  for (std::size_t i = 0; i < t.separators.size(); ++i) {
    const auto& sep = t.separators[i];
    const VertexSet a_only = set_difference(t.subgraphs[sep.small].vertices, sep.vertices);
    const VertexSet b_only = set_difference(t.subgraphs[sep.big].vertices, sep.vertices);
    SeparatorTerm term;
    term.separator = i;
    term.anti_edges = anti_edge_count(h, sep.vertices);
    const PartCount bonded = count_by_parts(h, {sep.vertices, a_only, b_only}, 0b111);
    term.bonded_edges = bonded.edges;
    term.bonded_anti_direct = bonded.anti_edges();
    const long p1 = static_cast<long>(a_only.size());
    const long p2 = static_cast<long>(b_only.size());
    const BigInt bonded_sets = binom_int(p1 + p2 + k, r) - binom_int(p1 + k, r) - binom_int(p2 + k, r) +
                               binom_int(k, r) - binom_int(p1 + p2, r) + binom_int(p1, r) + binom_int(p2, r);
    term.bonded_anti_formula = bonded_sets - BigInt(static_cast<unsigned long>(term.bonded_edges));
    if (term.bonded_anti_formula != BigInt(static_cast<unsigned long>(term.bonded_anti_direct))) {
      trouble << "separator " << i << ": bonded anti-edges counted " << term.bonded_anti_direct
              << " but inclusion-exclusion gives " << term.bonded_anti_formula.get_str() << "\n";
    }
    rhs += BigInt(static_cast<unsigned long>(term.anti_edges)) - term.bonded_anti_formula;
    ledger.separators.push_back(std::move(term));
  }
  ledger.rhs = rhs;
  if (rhs != BigInt(static_cast<unsigned long>(ledger.edges))) {
    trouble << "edge identity: counted " << ledger.edges << " edges, ledger gives " << rhs.get_str() << "\n";
  }
  if (!trouble.str().empty()) throw std::logic_error(trouble.str());
  return ledger;
}

BigInt free_sum_upper_bound(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma) {
  const long r = h.r();
  const long k = t.k;
  BigInt out = binom_int(h.n(), r) - binom_int(static_cast<long>(h.n()) - k, r);
  for (std::size_t node : t.atoms()) {
    out += binom_int(static_cast<long>(t.subgraphs[node].vertices.size()) - k, r);
  }
  for (std::size_t i = 0; i < t.separators.size(); ++i) {
    out += BigInt(static_cast<unsigned long>(free_count(h, t, sigma, i)));
  }
  return out;
}

AssignmentData assignment(const SeparatorTree& t, const Orientation& sigma) {
  AssignmentData out;
  out.m_separator.assign(t.separators.size(), 0);
  for (std::size_t atom : t.atoms()) {
    const auto& node = t.subgraphs[atom];
    if (node.parent == kNoNode || is_normal_size(node.vertices.size(), t.k)) continue;
    const VertexSet tiny = set_difference(node.vertices, t.separators[node.parent].vertices);
    for (Vertex v : tiny) {
      // Climb from the subgraph node directly above the atom's separator.
      std::size_t below = t.separators[node.parent].parent;
      std::size_t found = kNoNode;
      while (t.subgraphs[below].parent != kNoNode) {
        const std::size_t sep = t.subgraphs[below].parent;
        if (sigma.separators[sep].small == below && contains_vertex(t.separators[sep].vertices, v)) {
          found = sep;
          break;
        }
        below = t.separators[sep].parent;
      }
      if (found == kNoNode) {
        out.unassigned.push_back(v);
        continue;
      }
      ++out.m_atom[{atom, found}];
      ++out.m_separator[found];
    }
  }
  std::sort(out.unassigned.begin(), out.unassigned.end());
  return out;
}

AbstractTree abstract_tree(const SeparatorTree& t) {
  AbstractTree out;
  out.k = t.k;
  for (const auto& node : t.subgraphs) out.subgraphs.push_back({node.vertices.size(), node.parent, node.separator});
  for (const auto& sep : t.separators) out.separators.push_back({sep.parent, sep.small, sep.big});
  return out;
}

std::vector<std::string> validate_abstract_tree(const AbstractTree& t) {
  std::vector<std::string> out;
  if (t.subgraphs.empty()) {
    out.push_back("tree has no root");
    return out;
  }
  std::vector<int> seen(t.subgraphs.size(), 0);
  std::vector<int> seen_sep(t.separators.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t node) {
    if (node >= t.subgraphs.size() || seen[node]++) {
      out.push_back("subgraph node reached twice or out of range");
      return;
    }
    const std::size_t sep = t.subgraphs[node].separator;
    if (sep == kNoNode) {
      if (t.subgraphs[node].size < t.k) out.push_back("atom smaller than k");
      return;
    }
    if (sep >= t.separators.size() || seen_sep[sep]++ || t.separators[sep].parent != node) {
      out.push_back("separator links are inconsistent");
      return;
    }
    const auto& s = t.separators[sep];
    if (s.small >= t.subgraphs.size() || s.big >= t.subgraphs.size()) {
      out.push_back("separator child out of range");
      return;
    }
    const std::uint64_t a = t.subgraphs[s.small].size;
    const std::uint64_t b = t.subgraphs[s.big].size;
    if (a <= t.k || b <= t.k) out.push_back("separator " + std::to_string(sep) + " has a side without private vertices");
    if (a + b != t.subgraphs[node].size + t.k) {
      out.push_back("separator " + std::to_string(sep) + " breaks |P| = |A| + |B| - k");
    }
    for (std::size_t child : {s.small, s.big}) {
      if (t.subgraphs[child].parent != sep) out.push_back("child parent link is inconsistent");
      walk(child);
    }
  };
  walk(0);
  if (std::count(seen.begin(), seen.end(), 0) != 0 || std::count(seen_sep.begin(), seen_sep.end(), 0) != 0) {
    out.push_back("unreachable nodes present");
  }
  return out;
}

DeletionResult delete_tiny_atoms(const AbstractTree& t) {
  const unsigned k = t.k;
  const auto atoms = t.atoms();
  if (std::none_of(atoms.begin(), atoms.end(), [&](std::size_t a) { return is_normal_size(t.subgraphs[a].size, k); })) {
    throw std::invalid_argument("deletion needs at least one normal atom");
  }
  for (const auto& sep : t.separators) {
    if (t.is_atom(sep.small) && t.is_atom(sep.big) && !is_normal_size(t.subgraphs[sep.small].size, k) &&
        !is_normal_size(t.subgraphs[sep.big].size, k)) {
      throw std::invalid_argument("a separator has two tiny atoms; merge them first");
    }
  }
  AbstractTree work = t;
  std::vector<char> removed_sep(t.separators.size(), 0);
  DeletionResult out;
  for (std::size_t a : atoms) {
    if (is_normal_size(work.subgraphs[a].size, k) || work.subgraphs[a].parent == kNoNode) continue;
    const std::size_t s = work.subgraphs[a].parent;
    const std::size_t p = work.separators[s].parent;
    const std::size_t q = work.separators[s].small == a ? work.separators[s].big : work.separators[s].small;
    const std::uint64_t amount = work.subgraphs[a].size - k;
    work.subgraphs[p].size = work.subgraphs[q].size;
    work.subgraphs[p].separator = work.subgraphs[q].separator;
    if (work.subgraphs[p].separator != kNoNode) work.separators[work.subgraphs[p].separator].parent = p;
    removed_sep[s] = 1;
    for (std::size_t up = work.subgraphs[p].parent; up != kNoNode;) {
      const std::size_t anc = work.separators[up].parent;
      work.subgraphs[anc].size -= amount;
      up = work.subgraphs[anc].parent;
    }
    out.removed_vertices += amount;
  }
  // Re-index the surviving nodes from the root.
  std::function<std::size_t(std::size_t, std::size_t)> copy = [&](std::size_t node, std::size_t parent) {
    const std::size_t id = out.tree.subgraphs.size();
    out.tree.subgraphs.push_back({work.subgraphs[node].size, parent, kNoNode});
    const std::size_t sep = work.subgraphs[node].separator;
    if (sep != kNoNode) {
      const std::size_t new_sep = out.tree.separators.size();
      out.tree.separators.push_back({id, kNoNode, kNoNode});
      out.origin.push_back(sep);
      out.tree.subgraphs[id].separator = new_sep;
      const std::size_t small = copy(work.separators[sep].small, new_sep);
      const std::size_t big = copy(work.separators[sep].big, new_sep);
      out.tree.separators[new_sep].small = small;
      out.tree.separators[new_sep].big = big;
    }
    return id;
  };
  out.tree.k = k;
  copy(0, kNoNode);
  return out;
}

Rational essential_difference(const AbstractTree& t, unsigned r) {
  const long k = t.k;
  const long total = static_cast<long>(t.vertex_count()) - k;
  long removed = 0;
  BigInt atoms_term = 0;
  for (std::size_t a : t.atoms()) {
    if (is_normal_size(t.subgraphs[a].size, t.k)) continue;
    const long ai = static_cast<long>(t.subgraphs[a].size) - k;
    removed += ai;
    atoms_term += binom_int(ai, r);
  }
  if (removed > total) throw std::invalid_argument("tiny vertices exceed t");
  const long rest = total - removed;
  return Rational(binom_int(total + k, r) - binom_int(total, r) - binom_int(rest + k, r) + binom_int(rest, r) +
                  atoms_term);
}

BigInt fhat(unsigned k, unsigned r, unsigned ell) {
  if (ell < 1) throw std::invalid_argument("fhat needs ell >= 1");
  const unsigned q = k % ell;
  return binom_int(k, r) - BigInt(ell - q) * binom_int(k / ell, r) - BigInt(q) * binom_int((k + ell - 1) / ell, r);
}

BigInt free_difference(const Hypergraph& h, const SeparatorTree& t, const Orientation& sigma,
                       std::size_t separator) {
  const unsigned ell = sigma.separators.at(separator).ell;
  if (ell < 1) throw std::invalid_argument("free difference needs reach >= 1");
  return BigInt(static_cast<unsigned long>(free_count(h, t, sigma, separator))) - fhat(t.k, h.r(), ell);
}

BigInt tiny_free_bound(unsigned k, unsigned r, unsigned ell, unsigned m, const std::vector<unsigned>& per_atom) {
  if (ell < 1) throw std::invalid_argument("bound needs ell >= 1");
  if (m > k) throw std::invalid_argument("m(S) exceeds k");
  const unsigned rest = k - m;
  const unsigned q = rest % ell;
  BigInt out = binom_int(k, r) - BigInt(ell - q) * binom_int(rest / ell, r) -
               BigInt(q) * binom_int((rest + ell - 1) / ell, r);
  for (unsigned mi : per_atom) out -= binom_int(mi, r);
  return out;
}

}  // namespace hypersep
