#include "hypersep/constructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hypersep/binomial.hpp"
#include "hypersep/bounds.hpp"
#include "hypersep/colex.hpp"

namespace hypersep {

namespace {

void set_bit(std::vector<std::uint64_t>& words, std::uint64_t rank) {
  words[rank >> 6] |= std::uint64_t{1} << (rank & 63);
}

std::vector<std::uint64_t> empty_words(unsigned r, unsigned n) {
  return std::vector<std::uint64_t>((Hypergraph(r, n).rset_count() + 63) / 64, 0);
}

VertexSet map_set(const VertexSet& s, const std::function<Vertex(Vertex)>& map) {
  VertexSet out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(map(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Copies the subtree of `src` rooted at `node` under separator `parent` of
// `dst`, relabelling through `map`. Returns the new subgraph index.
std::size_t graft(SeparatorTree& dst, const SeparatorTree& src, std::size_t node, std::size_t parent,
                  const std::function<Vertex(Vertex)>& map) {
  const std::size_t id = dst.subgraphs.size();
  dst.subgraphs.push_back({map_set(src.subgraphs[node].vertices, map), parent, kNoNode});
  const std::size_t sep = src.subgraphs[node].separator;
  if (sep == kNoNode) return id;
  const std::size_t new_sep = dst.separators.size();
  dst.separators.push_back({map_set(src.separators[sep].vertices, map), id, kNoNode, kNoNode});
  dst.subgraphs[id].separator = new_sep;
  const std::size_t small = graft(dst, src, src.separators[sep].small, new_sep, map);
  const std::size_t big = graft(dst, src, src.separators[sep].big, new_sep, map);
  dst.separators[new_sep].small = small;
  dst.separators[new_sep].big = big;
  return id;
}

// A tree under construction by repeated doubling. `pools` are the vertex
// groups the next separator draws from; `used` marks vertices already spent
// on a doubling separator.
struct Layout {
  SeparatorTree tree;
  unsigned n = 0;
  std::vector<char> used;
  std::vector<VertexSet> pools;
};

// Copy 2 keeps the labels of S and sends its other vertices to n, n+1, ...
Layout double_along(const Layout& in, const VertexSet& s) {
  const unsigned k = static_cast<unsigned>(s.size());
  std::vector<Vertex> second(in.n);
  Vertex next = in.n;
  for (Vertex v = 0; v < in.n; ++v) {
    second[v] = std::binary_search(s.begin(), s.end(), v) ? v : next++;
  }
  Layout out;
  out.n = 2 * in.n - k;
  out.tree.k = in.tree.k;
  out.tree.subgraphs.push_back({iota_set(0, out.n), kNoNode, 0});
  out.tree.separators.push_back({s, 0, kNoNode, kNoNode});
  const auto identity = [](Vertex v) { return v; };
  const auto copy2 = [&](Vertex v) { return second[v]; };
  out.tree.separators[0].small = graft(out.tree, in.tree, 0, 0, identity);
  out.tree.separators[0].big = graft(out.tree, in.tree, 0, 0, copy2);
  out.used.assign(out.n, 0);
  for (Vertex v = 0; v < in.n; ++v) {
    if (!in.used[v]) continue;
    out.used[v] = 1;
    out.used[second[v]] = 1;
  }
  for (Vertex v : s) out.used[v] = 1;
  out.pools = in.pools;
  for (const auto& pool : in.pools) out.pools.push_back(map_set(pool, copy2));
  return out;
}

// `per` smallest unused vertices from every pool.
VertexSet draw_separator(const Layout& layout, unsigned per) {
  VertexSet s;
  for (const auto& pool : layout.pools) {
    unsigned taken = 0;
    for (Vertex v : pool) {
      if (taken == per) break;
      if (layout.used[v]) continue;
      s.push_back(v);
      ++taken;
    }
    if (taken != per) throw std::logic_error("pool ran out of unused vertices");
  }
  std::sort(s.begin(), s.end());
  return s;
}

SeparatorTree oriented(SeparatorTree t) { return apply_orientation(t, orient(t)); }

unsigned checked_k(unsigned s, unsigned r) {
  if (s < 1 || s > 8) throw std::invalid_argument("s must be in [1, 8]");
  if (r < 3 || r > BinomialTable::kMaxR) throw std::invalid_argument("r must be in [3, 16]");
  return (1U << s) * r;
}

Rational integer_param(unsigned v) { return Rational(v); }

}  // namespace

Hypergraph saturate(unsigned r, const SeparatorTree& t) {
  if (t.subgraphs.empty()) throw std::invalid_argument("empty tree");
  const unsigned n = static_cast<unsigned>(t.subgraphs[0].vertices.size());
  if (t.subgraphs[0].vertices != iota_set(0, n)) throw std::invalid_argument("tree root must be 0..n-1");
  if (t.separators.size() > 64) throw std::invalid_argument("at most 64 separators supported");
  std::vector<std::uint64_t> in_p(n, 0), in_a(n, 0), in_b(n, 0), in_s(n, 0);
  for (std::size_t j = 0; j < t.separators.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    const auto& sep = t.separators[j];
    for (Vertex v : t.subgraphs[sep.parent].vertices) in_p[v] |= bit;
    for (Vertex v : t.subgraphs[sep.small].vertices) in_a[v] |= bit;
    for (Vertex v : t.subgraphs[sep.big].vertices) in_b[v] |= bit;
    for (Vertex v : sep.vertices) in_s[v] |= bit;
  }
  struct State {
    std::uint64_t p, a, b, s;
  };
  std::vector<std::uint64_t> words = empty_words(r, n);
  const VertexSet verts = iota_set(0, n);
  // X is missing iff at some separator X lies in P, in neither side, and
  // avoids S.
  colex_walk(
      std::span<const Vertex>(verts), r, State{~std::uint64_t{0}, ~std::uint64_t{0}, ~std::uint64_t{0}, 0},
      [&](const State& st, Vertex v, unsigned) {
        return std::optional<State>(State{st.p & in_p[v], st.a & in_a[v], st.b & in_b[v], st.s | in_s[v]});
      },
      [&](const State& st, std::uint64_t label_base, std::uint64_t, std::size_t limit) {
        for (Vertex v = 0; v < limit; ++v) {
          const std::uint64_t cut = (st.p & in_p[v]) & ~(st.a & in_a[v]) & ~(st.b & in_b[v]) & ~(st.s | in_s[v]);
          if (cut == 0) set_bit(words, label_base + v);
        }
      });
  return Hypergraph::from_words(r, n, std::move(words));
}

ConstructionOutput mader_hypergraph(unsigned q, unsigned k, unsigned r) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (r < 2 || r > BinomialTable::kMaxR) throw std::invalid_argument("r must be in [2, 16]");
  const unsigned n = q * k;
  if (n < r) throw std::invalid_argument("qk must be at least r");
  struct State {
    bool any_zero;
    bool all_zero;
    int part;  // -1 none yet, -2 several
  };
  auto extend = [k](const State& st, Vertex v) {
    const int part = static_cast<int>(v / k);
    State out = st;
    if (part == 0) {
      out.any_zero = true;
    } else {
      out.all_zero = false;
      if (st.part == -1) {
        out.part = part;
      } else if (st.part != part) {
        out.part = -2;
      }
    }
    return out;
  };
  std::vector<std::uint64_t> words = empty_words(r, n);
  const VertexSet verts = iota_set(0, n);
  colex_walk(
      std::span<const Vertex>(verts), r, State{false, true, -1},
      [&](const State& st, Vertex v, unsigned) { return std::optional<State>(extend(st, v)); },
      [&](const State& st, std::uint64_t label_base, std::uint64_t, std::size_t limit) {
        for (Vertex v = 0; v < limit; ++v) {
          const State x = extend(st, v);
          if (x.all_zero) continue;
          if (!x.any_zero && x.part == -2) continue;
          set_bit(words, label_base + v);
        }
      });
  ConstructionOutput out;
  out.family = r == 2 ? "mader-graph" : "mader-hyper";
  out.graph = Hypergraph::from_words(r, n, std::move(words));
  out.k = k;
  out.c = 1;
  const VertexSet v0 = iota_set(0, k);
  out.tree = SeparatorTree::single_atom(iota_set(0, n), k);
  std::size_t node = 0;
  for (unsigned i = 1; i + 1 < q; ++i) {
    // Node holds V_0 and V_i..V_{q-1}; peel V_i off.
    const VertexSet a = set_union(v0, iota_set(i * k, (i + 1) * k));
    const VertexSet b = set_union(v0, iota_set((i + 1) * k, n));
    out.tree.split(node, v0, a, b);
    node = out.tree.subgraphs.size() - 1;
  }
  out.tree = oriented(std::move(out.tree));
  out.predicted_edges = binom_int(n, r) - binom_int(n - k, r) + BigInt(q - 2) * binom_int(k, r);
  out.params = {{"q", integer_param(q)}, {"k", integer_param(k)}, {"r", integer_param(r)}, {"n", integer_param(n)}};
  return out;
}

ConstructionOutput mader_graph(unsigned q, unsigned k) { return mader_hypergraph(q, k, 2); }

ConstructionOutput example1(unsigned s, unsigned r, unsigned c) {
  const unsigned k = checked_k(s, r);
  if (c < 1) throw std::invalid_argument("c must be at least 1");
  const unsigned atom = c * k + k;
  Layout layout;
  layout.n = atom;
  layout.tree = SeparatorTree::single_atom(iota_set(0, atom), k);
  layout.used.assign(atom, 0);
  layout.pools = {iota_set(0, atom)};
  for (unsigned i = 1; i <= s + 1; ++i) {
    layout = double_along(layout, draw_separator(layout, k >> (i - 1)));
  }
  ConstructionOutput out;
  out.family = "example1";
  out.k = k;
  out.c = c;
  out.graph = saturate(r, layout.tree);
  out.tree = oriented(std::move(layout.tree));
  const unsigned n = layout.n;
  BigInt level_sum = 0;
  for (unsigned i = 0; i <= s; ++i) level_sum += binom_int(k >> i, r);
  const BigInt atoms = BigInt(1U << (s + 1));
  out.predicted_edges = binom_int(n, r) - binom_int(n - k, r) + atoms * binom_int(c * k, r) +
                        (atoms - 1) * binom_int(k, r) - BigInt(1U << s) * level_sum;
  out.params = {{"s", integer_param(s)}, {"r", integer_param(r)}, {"c", integer_param(c)},
                {"k", integer_param(k)}, {"n", integer_param(n)}};
  return out;
}

VertexSet example1_independent_set(const ConstructionOutput& base) {
  const unsigned r = base.graph.r();
  VertexSet separator_vertices;
  for (const auto& sep : base.tree.separators) separator_vertices = set_union(separator_vertices, sep.vertices);
  VertexSet out;
  std::size_t index = 0;
  for (std::size_t atom : base.tree.atoms()) {
    const unsigned take = (r % 2 == 0 || index % 2 == 1) ? r / 2 : (r + 1) / 2;
    const VertexSet own = set_difference(base.tree.subgraphs[atom].vertices, separator_vertices);
    if (own.size() < take) throw std::logic_error("atom has too few exclusive vertices");
    out.insert(out.end(), own.begin(), own.begin() + take);
    ++index;
  }
  std::sort(out.begin(), out.end());
  if (out.size() != base.k) throw std::logic_error("independent set has the wrong size");
  return out;
}

ConstructionOutput example1_chain(unsigned s, unsigned r, unsigned c, unsigned m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  ConstructionOutput base = example1(s, r, c);
  const VertexSet independent = example1_independent_set(base);
  const unsigned n = base.graph.n();
  const unsigned k = base.k;
  ConstructionOutput out;
  out.family = "example1-chain";
  out.k = k;
  out.c = c;
  SeparatorTree tree = glue_copies_tree(base.tree, n, independent, m);
  out.graph = saturate(r, tree);
  out.tree = oriented(std::move(tree));
  // Gluing count with e(S) = 0.
  const unsigned total = n + (m - 1) * (n - k);
  const BigInt per_copy = binom_int(n, r) - binom_int(n - k, r) - binom_int(k, r);
  out.predicted_edges = BigInt(m) * base.predicted_edges + binom_int(total, r) - binom_int(total - k, r) -
                        binom_int(k, r) - BigInt(m) * per_copy;
  out.params = {{"s", integer_param(s)}, {"r", integer_param(r)}, {"c", integer_param(c)},
                {"m", integer_param(m)}, {"k", integer_param(k)}, {"n", integer_param(total)}};
  return out;
}

ConstructionOutput example2(unsigned s, unsigned r, const Rational& p) {
  const unsigned k = checked_k(s, r);
  const Rational pk_exact = p * k;
  if (!is_integer(pk_exact) || pk_exact < 1 || pk_exact > k) {
    throw std::invalid_argument("p * k must be an integer in [1, k]");
  }
  const unsigned pk = static_cast<unsigned>(pk_exact.get_num().get_ui());
  // H0 on 0..2k-1 and G0 on S + 2k..2k+pk-1, glued along S = 0..k-1.
  Layout layout;
  layout.n = 2 * k + pk;
  layout.tree = SeparatorTree::single_atom(iota_set(0, layout.n), k);
  const VertexSet s0 = iota_set(0, k);
  layout.tree.split(0, s0, iota_set(0, 2 * k), set_union(s0, iota_set(2 * k, 2 * k + pk)));
  layout.used.assign(layout.n, 0);
  layout.pools = {s0};
  const VertexSet first = set_union(iota_set(2 * k, 2 * k + pk), iota_set(k, 2 * k - pk));
  layout = double_along(layout, first);
  for (unsigned i = 2; i <= s + 1; ++i) {
    layout = double_along(layout, draw_separator(layout, k >> (i - 1)));
  }
  ConstructionOutput out;
  out.family = "example2";
  out.k = k;
  out.c = 1;
  out.graph = saturate(r, layout.tree);
  out.tree = oriented(std::move(layout.tree));
  const unsigned n = layout.n;
  const BigInt two_s = BigInt(1U << s);
  const Rational halving = halving_sum(Rational(k), r);
  const Rational level_form = Rational(binom_int(n, r) - binom_int(n - k, r) + 2 * two_s * binom_int(k, r) +
                                       2 * two_s * binom_int(pk, r) + (3 * two_s - 1) * binom_int(k, r) -
                                       two_s * (binom_int(k - pk, r) + binom_int(pk, r))) -
                              Rational(two_s) * halving;
  const Rational scale = Rational(n - k) / (2 * (1 + p) * k);
  const Rational closed_form = Rational(binom_int(n, r) - binom_int(n - k, r)) +
                               (5 * scale - 1) * Rational(binom_int(k, r)) -
                               scale * Rational(binom_int(k - pk, r)) - scale * halving +
                               scale * Rational(binom_int(pk, r));
  if (level_form != closed_form || !is_integer(level_form)) {
    throw std::logic_error("the two edge-count forms disagree");
  }
  out.predicted_edges = level_form.get_num();
  out.params = {{"s", integer_param(s)}, {"r", integer_param(r)}, {"p", p},
                {"k", integer_param(k)}, {"n", integer_param(n)}, {"c", integer_param(1)}};
  return out;
}

GlueResult glue(const Hypergraph& h1, const Hypergraph& h2, const std::vector<Vertex>& s1,
                const std::vector<Vertex>& s2) {
  if (h1.r() != h2.r()) throw std::invalid_argument("uniformities differ");
  if (s1.size() != s2.size()) throw std::invalid_argument("embedding sides differ in size");
  const unsigned r = h1.r();
  const unsigned k = static_cast<unsigned>(s1.size());
  VertexSet sorted1(s1.begin(), s1.end());
  VertexSet sorted2(s2.begin(), s2.end());
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (std::adjacent_find(sorted1.begin(), sorted1.end()) != sorted1.end() ||
      std::adjacent_find(sorted2.begin(), sorted2.end()) != sorted2.end()) {
    throw std::invalid_argument("embedding repeats a vertex");
  }
  if ((k > 0 && (sorted1.back() >= h1.n() || sorted2.back() >= h2.n()))) {
    throw std::invalid_argument("embedding leaves the vertex range");
  }
  GlueResult out;
  out.second_labels.assign(h2.n(), 0);
  std::vector<char> in_s2(h2.n(), 0);
  for (unsigned i = 0; i < k; ++i) {
    out.second_labels[s2[i]] = s1[i];
    in_s2[s2[i]] = 1;
  }
  Vertex next = h1.n();
  for (Vertex v = 0; v < h2.n(); ++v) {
    if (!in_s2[v]) out.second_labels[v] = next++;
  }
  // H1[S] and H2[S] must agree under the embedding.
  for_each_rset(sorted1, r, [&](std::span<const Vertex> e) {
    VertexSet image;
    for (Vertex v : e) {
      const auto pos = static_cast<std::size_t>(std::find(s1.begin(), s1.end(), v) - s1.begin());
      image.push_back(s2[pos]);
    }
    std::sort(image.begin(), image.end());
    if (h1.contains(e) != h2.contains(image)) throw std::invalid_argument("H1[S] and H2[S] differ");
  });
  const unsigned n = h1.n() + h2.n() - k;
  Hypergraph g(r, n);
  h1.for_each_edge([&](std::span<const Vertex> e) { g.add_edge(e); });
  VertexSet mapped(r);
  h2.for_each_edge([&](std::span<const Vertex> e) {
    for (unsigned i = 0; i < r; ++i) mapped[i] = out.second_labels[e[i]];
    std::sort(mapped.begin(), mapped.end());
    g.add_edge(mapped);
  });
  // Bonded r-sets: tag 1 = S, 2 = H1 private, 4 = H2 private.
  std::vector<std::uint32_t> tag(n, 4);
  for (Vertex v = 0; v < h1.n(); ++v) tag[v] = 2;
  for (Vertex v : sorted1) tag[v] = 1;
  const VertexSet verts = iota_set(0, n);
  colex_walk(
      std::span<const Vertex>(verts), r, std::uint32_t{0},
      [&](std::uint32_t st, Vertex v, unsigned) { return std::optional<std::uint32_t>(st | tag[v]); },
      [&](std::uint32_t st, std::uint64_t label_base, std::uint64_t, std::size_t limit) {
        for (Vertex v = 0; v < limit; ++v) {
          if ((st | tag[v]) == 7) g.set(label_base + v);
        }
      });
  out.graph = std::move(g);
  return out;
}

namespace {

// Label map of copy i (1-based) for glue_copies.
std::vector<Vertex> copy_labels(unsigned n, const VertexSet& s, unsigned i) {
  std::vector<Vertex> out(n);
  const unsigned k = static_cast<unsigned>(s.size());
  Vertex next = i == 1 ? 0 : n + (i - 2) * (n - k);
  for (Vertex v = 0; v < n; ++v) {
    if (i == 1 || std::binary_search(s.begin(), s.end(), v)) {
      out[v] = v;
    } else {
      out[v] = next++;
    }
  }
  return out;
}

void check_glue_set(unsigned n, const VertexSet& s, unsigned m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end() ||
      (!s.empty() && s.back() >= n)) {
    throw std::invalid_argument("S must be a sorted subset of V(H)");
  }
  if (s.size() >= n) throw std::invalid_argument("S must leave private vertices");
}

}  // namespace

Hypergraph glue_copies(const Hypergraph& h, const VertexSet& s, unsigned m) {
  check_glue_set(h.n(), s, m);
  const unsigned n = h.n();
  const unsigned k = static_cast<unsigned>(s.size());
  const unsigned r = h.r();
  const unsigned total = n + (m - 1) * (n - k);
  Hypergraph g(r, total);
  VertexSet mapped(r);
  for (unsigned i = 1; i <= m; ++i) {
    const auto labels = copy_labels(n, s, i);
    h.for_each_edge([&](std::span<const Vertex> e) {
      for (unsigned j = 0; j < r; ++j) mapped[j] = labels[e[j]];
      std::sort(mapped.begin(), mapped.end());
      g.add_edge(mapped);
    });
  }
  // owner: 0 for S, else the copy whose private part holds the vertex.
  std::vector<unsigned> owner(total, 0);
  for (unsigned i = 1; i <= m; ++i) {
    const auto labels = copy_labels(n, s, i);
    for (Vertex v = 0; v < n; ++v) {
      if (!std::binary_search(s.begin(), s.end(), v)) owner[labels[v]] = i;
    }
  }
  struct State {
    unsigned copy;  // 0 none yet
    bool several;
    bool meets_s;
  };
  auto extend = [&](const State& st, Vertex v) {
    State out = st;
    if (owner[v] == 0) {
      out.meets_s = true;
    } else if (st.copy == 0) {
      out.copy = owner[v];
    } else if (st.copy != owner[v]) {
      out.several = true;
    }
    return out;
  };
  const VertexSet verts = iota_set(0, total);
  colex_walk(
      std::span<const Vertex>(verts), r, State{0, false, false},
      [&](const State& st, Vertex v, unsigned) { return std::optional<State>(extend(st, v)); },
      [&](const State& st, std::uint64_t label_base, std::uint64_t, std::size_t limit) {
        for (Vertex v = 0; v < limit; ++v) {
          const State x = extend(st, v);
          if (x.several && x.meets_s) g.set(label_base + v);
        }
      });
  return g;
}

SeparatorTree glue_copies_tree(const SeparatorTree& t, unsigned n, const VertexSet& s, unsigned m) {
  check_glue_set(n, s, m);
  if (t.subgraphs.empty() || t.subgraphs[0].vertices != iota_set(0, n)) {
    throw std::invalid_argument("tree root must be 0..n-1");
  }
  const unsigned k = static_cast<unsigned>(s.size());
  const unsigned total = n + (m - 1) * (n - k);
  SeparatorTree out;
  out.k = t.k;
  out.subgraphs.push_back({iota_set(0, total), kNoNode, kNoNode});
  if (m == 1) return t;
  std::size_t node = 0;
  for (unsigned i = 1; i < m; ++i) {
    const auto labels = copy_labels(n, s, i);
    const std::size_t sep = out.separators.size();
    out.separators.push_back({s, node, kNoNode, kNoNode});
    out.subgraphs[node].separator = sep;
    out.separators[sep].small = graft(out, t, 0, sep, [&](Vertex v) { return labels[v]; });
    if (i + 1 == m) {
      const auto last = copy_labels(n, s, m);
      out.separators[sep].big = graft(out, t, 0, sep, [&](Vertex v) { return last[v]; });
      break;
    }
    VertexSet rest = s;
    for (unsigned j = i + 1; j <= m; ++j) {
      const auto other = copy_labels(n, s, j);
      for (Vertex v = 0; v < n; ++v) {
        if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(other[v]);
      }
    }
    std::sort(rest.begin(), rest.end());
    node = out.subgraphs.size();
    out.subgraphs.push_back({std::move(rest), sep, kNoNode});
    out.separators[sep].big = node;
  }
  return out;
}

Hypergraph extend_by_vertex(const Hypergraph& h, const VertexSet& s) {
  const unsigned n = h.n();
  const unsigned r = h.r();
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end() ||
      (!s.empty() && s.back() >= n)) {
    throw std::invalid_argument("S must be a sorted subset of V(H)");
  }
  std::vector<std::uint64_t> words = empty_words(r, n + 1);
  std::copy(h.words().begin(), h.words().end(), words.begin());
  std::vector<char> in_s(n, 0);
  for (Vertex v : s) in_s[v] = 1;
  // Sets holding the new vertex rank after every set inside 0..n-1.
  const std::uint64_t base = h.rset_count();
  const VertexSet verts = iota_set(0, n);
  colex_walk(
      std::span<const Vertex>(verts), r - 1, false,
      [&](bool st, Vertex v, unsigned) { return std::optional<bool>(st || in_s[v]); },
      [&](bool st, std::uint64_t label_base, std::uint64_t, std::size_t limit) {
        for (Vertex v = 0; v < limit; ++v) {
          if (st || in_s[v]) set_bit(words, base + label_base + v);
        }
      });
  return Hypergraph::from_words(r, n + 1, std::move(words));
}

SeparatorTree extend_by_vertex_tree(const SeparatorTree& t, unsigned n, const VertexSet& s, const Rational& c) {
  if (t.subgraphs.empty() || t.subgraphs[0].vertices != iota_set(0, n)) {
    throw std::invalid_argument("tree root must be 0..n-1");
  }
  if (s.size() != t.k) throw std::invalid_argument("S must have exactly k vertices");
  if (n + 1 <= atom_size_limit(t.k, c)) return SeparatorTree::single_atom(iota_set(0, n + 1), t.k);
  SeparatorTree out;
  out.k = t.k;
  out.subgraphs.push_back({iota_set(0, n + 1), kNoNode, 0});
  out.separators.push_back({s, 0, kNoNode, kNoNode});
  VertexSet with_v = s;
  with_v.push_back(n);
  out.subgraphs.push_back({std::move(with_v), 0, kNoNode});
  out.separators[0].small = 1;
  out.separators[0].big = graft(out, t, 0, 0, [](Vertex v) { return v; });
  return oriented(std::move(out));
}

}  // namespace hypersep
