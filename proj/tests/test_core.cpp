#include <map>
#include <set>

#include "doctest.h"
#include "hypersep/binomial.hpp"
#include "hypersep/colex.hpp"
#include "hypersep/hypergraph.hpp"
#include "hypersep/rational.hpp"
#include "support.hpp"

using namespace hypersep;
using testing::choose;

TEST_SUITE("core") {

TEST_CASE("rational text is canonical and strict") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("7")) == "7/1");
  CHECK(to_string(parse_rational("+3/1")) == "3/1");
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "abc", "1.5", "1/2/3", " 1"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  CHECK(floor(parse_rational("-7/2")) == -4);
  CHECK(ceil(parse_rational("-7/2")) == -3);
  CHECK(pow(testing::frac(2, 3), 3) == testing::frac(8, 27));
}

TEST_CASE("integer binomials") {
  CHECK(binom_int(6, 3) == 20);
  CHECK(binom_int(3, 3) == 1);
  CHECK(binom_int(78, 3) == 76076);
  CHECK(binom_int(2, 3) == 0);
  CHECK(binom_int(-4, 3) == 0);
  CHECK(binom_int(4096, 16) == choose(4096, 16));
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("extended binomials") {
  CHECK(binom_ext(Rational(5), 3) == 10);
  CHECK(binom_ext(testing::frac(3, 2), 3) == 0);
  CHECK(binom_ext(testing::frac(5, 2), 3) == testing::frac(5, 16));
  CHECK(binom_ext(Rational(2), 3) == 0);  // exactly r - 1
}

TEST_CASE("property: binom_ext matches integers, is monotone and midpoint convex") {
  for (unsigned r = 1; r <= 6; ++r) {
    for (long n = 0; n <= 40; ++n) CHECK(binom_ext(Rational(n), r) == choose(n, r));
    Rational prev = -1;
    for (int i = 0; i <= 160; ++i) {
      const Rational x = Rational(i) / 8;
      const Rational fx = binom_ext(x, r);
      CHECK(fx >= prev);
      prev = fx;
      for (int j = i; j <= 160; j += 7) {
        const Rational y = Rational(j) / 8;
        CHECK(2 * binom_ext((x + y) / 2, r) <= fx + binom_ext(y, r));
      }
    }
  }
}

TEST_CASE("binomial table saturates instead of overflowing") {
  const auto& table = BinomialTable::instance();
  CHECK(table(4096, 1) == 4096);
  CHECK(table(10, 11) == 0);
  CHECK(table(4096, 16) == BinomialTable::kSaturated);
  CHECK(table(64, 5) == testing::choose64(64, 5));
}

TEST_CASE("validation reports each malformed edge") {
  HypergraphData ok{3, 5, {{0, 1, 2}, {2, 3, 4}}};
  CHECK(validate_hypergraph(ok).empty());
  HypergraphData repeated{3, 5, {{0, 1, 1}}};
  CHECK(validate_hypergraph(repeated).size() == 1);
  HypergraphData short_edge{3, 5, {{0, 1}}};
  CHECK(validate_hypergraph(short_edge).size() == 1);
  HypergraphData outside{3, 5, {{0, 1, 5}}};
  CHECK(validate_hypergraph(outside).size() == 1);
  HypergraphData unsorted{3, 5, {{2, 1, 0}}};
  CHECK(validate_hypergraph(unsorted).size() == 1);
  HypergraphData duplicate{3, 5, {{0, 1, 2}, {0, 1, 2}}};
  CHECK(validate_hypergraph(duplicate).size() == 1);
  CHECK_THROWS_AS(Hypergraph::from_data(repeated), std::invalid_argument);
}

TEST_CASE("property: colex rank is a bijection onto a prefix-closed range") {
  for (unsigned r = 1; r <= 5; ++r) {
    const unsigned n = 11;
    const Hypergraph h(r, n);
    CHECK(h.rset_count() == testing::choose64(n, r));
    std::set<std::uint64_t> seen;
    for (const auto& e : testing::all_subsets(testing::range(n), r)) {
      const std::uint64_t rank = h.rank(e);
      CHECK(h.unrank(rank) == e);
      // Sets inside {0..max} rank below C(max + 1, r).
      CHECK(rank < testing::choose64(e.back() + 1, r));
      seen.insert(rank);
    }
    CHECK(seen.size() == h.rset_count());
    CHECK(*seen.rbegin() == h.rset_count() - 1);
  }
}

TEST_CASE("property: colex_walk visits every subset once with both ranks") {
  testing::Rng rng(11);
  for (int round = 0; round < 20; ++round) {
    const unsigned r = testing::uniform(rng, 1, 4);
    const unsigned n = testing::uniform(rng, r, 12);
    const Hypergraph h(r, 14);
    const VertexSet verts = testing::random_subset(rng, testing::range(14), n);
    const auto subsets = testing::all_subsets(verts, r);
    std::map<std::uint64_t, std::uint64_t> label_to_pos;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      VertexSet positions;
      for (Vertex v : subsets[i]) positions.push_back(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      label_to_pos[h.rank(subsets[i])] = Hypergraph(r, n).rank(positions);
    }
    std::map<std::uint64_t, std::uint64_t> walked;
    colex_walk(
        std::span<const Vertex>(verts), r, 0,
        [](int, Vertex, unsigned) { return std::optional<int>(0); },
        [&](int, std::uint64_t label_base, std::uint64_t pos_base, std::size_t limit) {
          for (std::size_t j = 0; j < limit; ++j) {
            CHECK(walked.emplace(label_base + verts[j], pos_base + j).second);
          }
        });
    CHECK(walked == label_to_pos);
  }
}

TEST_CASE("edges, induced subgraphs and anti-edges") {
  const Hypergraph k6 = Hypergraph::complete(3, 6);
  CHECK(k6.edge_count() == 20);
  const InducedSubgraph sub = induced_subgraph(k6, {0, 2, 3, 5});
  CHECK(sub.graph.edge_count() == 4);
  CHECK(sub.graph == Hypergraph::complete(3, 4));
  CHECK(sub.labels == VertexSet{0, 2, 3, 5});
  CHECK(anti_edge_count(k6, testing::range(6)) == 0);
  CHECK(anti_edge_count(Hypergraph(3, 6), testing::range(6)) == 20);

  const Hypergraph two = Hypergraph::from_edges(3, 5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(induced_subgraph(two, {0, 1, 2}).graph.edge_count() == 1);
  CHECK(induced_subgraph(two, {0, 1, 3}).graph.edge_count() == 0);
  CHECK(two.edges() == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("from_words rejects stray tail bits") {
  const Hypergraph k5 = Hypergraph::complete(3, 5);
  CHECK(Hypergraph::from_words(3, 5, k5.words()) == k5);
  auto words = k5.words();
  words[0] |= std::uint64_t{1} << 12;  // rank 12 >= C(5,3)
  CHECK_THROWS_AS(Hypergraph::from_words(3, 5, words), std::invalid_argument);
}

TEST_CASE("property: counting agrees with a naive edge scan") {
  testing::Rng rng(7);
  for (int round = 0; round < 40; ++round) {
    const unsigned r = testing::uniform(rng, 2, 4);
    const unsigned n = testing::uniform(rng, r + 1, 12);
    const Hypergraph h = testing::random_hypergraph(rng, r, n, 0.4);
    const auto edges = testing::edge_list(h);
    CHECK(edges.size() == h.edge_count());
    const VertexSet w = testing::random_subset(rng, testing::range(n), testing::uniform(rng, 0, n));
    CHECK(count_induced_edges(h, w) == testing::naive_induced(edges, w));
    CHECK(anti_edge_count(h, w) == testing::choose64(w.size(), r) - testing::naive_induced(edges, w));
    CHECK(induced_subgraph(h, w).graph.edge_count() == testing::naive_induced(edges, w));

    // Three disjoint parts, random requirement mask.
    std::vector<VertexSet> parts(3);
    for (Vertex v = 0; v < n; ++v) {
      const unsigned which = testing::uniform(rng, 0, 3);
      if (which < 3) parts[which].push_back(v);
    }
    const std::uint32_t required = testing::uniform(rng, 0, 7);
    const VertexSet all = set_union(set_union(parts[0], parts[1]), parts[2]);
    std::uint64_t rsets = 0;
    std::uint64_t hits = 0;
    for (const auto& e : testing::all_subsets(all, r)) {
      bool ok = true;
      for (unsigned p = 0; p < 3; ++p) {
        if ((required >> p & 1U) && !testing::meets(e, parts[p])) ok = false;
      }
      if (!ok) continue;
      ++rsets;
      if (h.contains(e)) ++hits;
    }
    const PartCount pc = count_by_parts(h, parts, required);
    CHECK(pc.rsets == rsets);
    CHECK(pc.edges == hits);
  }
}

TEST_CASE("set helpers") {
  CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
  CHECK(set_intersection({1, 3, 5}, {3, 4, 5}) == VertexSet{3, 5});
  CHECK(set_difference({1, 3, 5}, {3}) == VertexSet{1, 5});
  CHECK(iota_set(2, 5) == VertexSet{2, 3, 4});
}

}
