// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypersep/binomial.hpp"
#include "hypersep/bounds.hpp"
#include "hypersep/connectivity.hpp"
#include "hypersep/constructions.hpp"
#include "hypersep/oracle.hpp"
#include "hypersep/septree.hpp"

using namespace hypersep;

namespace {

// Collects failures; a criterion passes when nothing was recorded.
struct Check {
  std::vector<std::string> failures;
  std::uint64_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::string str(const Rational& q) { return to_string(q); }

struct Instance {
  std::string name;
  ConstructionOutput out;
};

std::vector<Instance> example1_grid() {
  std::vector<Instance> all;
  for (unsigned r : {3U, 4U}) {
    for (unsigned s : {1U, 2U}) {
      for (unsigned c : {1U, 2U, 3U}) {
        all.push_back({"example1(s=" + std::to_string(s) + ",r=" + std::to_string(r) + ",c=" + std::to_string(c) + ")",
                       example1(s, r, c)});
      }
    }
  }
  return all;
}

// Every admissible p = pk/k, 1 <= pk <= k, on the same (r, s) grid.
std::vector<Instance> example2_grid() {
  std::vector<Instance> all;
  for (unsigned r : {3U, 4U}) {
    for (unsigned s : {1U, 2U}) {
      const unsigned k = (1U << s) * r;
      for (unsigned pk = 1; pk <= k; ++pk) {
        all.push_back({"example2(s=" + std::to_string(s) + ",r=" + std::to_string(r) + ",p=" + std::to_string(pk) + "/" +
                           std::to_string(k) + ")",
                       example2(s, r, Rational(pk) / k)});
      }
    }
  }
  return all;
}

void criterion1(Check& check, const std::vector<Instance>& e1, const std::vector<Instance>& e2) {
  for (const auto* grid : {&e1, &e2}) {
    for (const Instance& inst : *grid) {
      try {
        const EdgeLedger ledger = audit_edge_identity(inst.out.graph, inst.out.tree);
        check.expect(ledger.rhs == BigInt(static_cast<unsigned long>(ledger.edges)), inst.name + ": ledger total");
      } catch (const std::exception& e) {
        check.expect(false, inst.name + ": " + e.what());
      }
    }
  }
}

void criterion2(Check& check, const std::vector<Instance>& e1, const std::vector<Instance>& e2) {
  for (const Instance& inst : e1) {
    const unsigned k = inst.out.k;
    const std::uint64_t n = inst.out.graph.n();
    const Rational predicted = bound_special(Rational(static_cast<unsigned long>(n - k)), k, inst.out.graph.r(),
                                             inst.out.c).value;
    check.expect(Rational(static_cast<unsigned long>(inst.out.graph.edge_count())) == predicted,
                 inst.name + ": e(H) differs from " + str(predicted));
  }
  for (const Instance& inst : e2) {
    check.expect(BigInt(static_cast<unsigned long>(inst.out.graph.edge_count())) == inst.out.predicted_edges,
                 inst.name + ": e(H) differs from its prediction");
  }
  check.expect(example1(1, 3, 1).graph.edge_count() == 2134, "example1(1,3,1) != 2134");
  check.expect(example1(1, 3, 3).graph.edge_count() == 19718, "example1(1,3,3) != 19718");
  check.expect(example2(1, 3, Rational(1) / 6).graph.edge_count() == 2826, "example2(1,3,1/6) != 2826");
}

void criterion3(Check& check) {
  const ConstructionOutput m = mader_hypergraph(2, 3, 3);
  check.expect(!contains_k1_connected_subgraph(m.graph, 3, 5).has_value(), "found a 4-connected subgraph");
  check.expect(m.graph.edge_count() == 19, "e != 19");
  check.expect(conjecture_bound(6, 3, 3).value == 19, "conjecture_bound(6,3,3) != 19");
}

void criterion4(Check& check) {
  const GLimit g = g_limit_exact(6, 3, 3, 3);
  check.expect(g.value == Rational(1651) / 216, "value " + str(g.value));
  check.expect(g.surplus_counted == g.surplus_formula, "surplus paths disagree");
  check.expect(g.slope_holds, "chain slope fails");
  const BigInt ck = binom_int(6, 3);
  for (unsigned m = 1; m <= g.chain_surplus.size(); ++m) {
    check.expect(g.chain_surplus[m - 1] == BigInt(m) * g.chain_surplus[0] + BigInt(m - 1) * ck,
                 "chain member " + std::to_string(m));
  }
  check.expect(g.chain_surplus.size() == 3, "chain length");
}

void criterion5(Check& check) {
  for (unsigned r = 3; r <= 8; ++r) {
    for (unsigned k = r; k <= 64; ++k) {
      for (unsigned ell = 1; ell <= 16; ++ell) {
        for (unsigned ell_plus = ell; ell_plus <= 16; ++ell_plus) {
          const Rational x = x_of_separator(k, r, ell, ell_plus);
          const std::string at = "(" + std::to_string(k) + "," + std::to_string(r) + "," + std::to_string(ell) + "," +
                                 std::to_string(ell_plus) + ")";
          check.expect(x >= 0, "X < 0 at " + at);
          if (ell == ell_plus && Rational(ell) / k <= Rational(1) / (r - 1)) check.expect(x == 0, "X != 0 at " + at);
        }
      }
      if (k >= 2 * (r - 1)) {
        // Unbalanced separator with reach one on the small side.
        const Rational floor_value = Rational(binom_int(k, r)) / 2 - Rational(3) / 2 * binom_ext(Rational(k) / 2, r);
        for (unsigned ell_plus = 2; ell_plus <= 16; ++ell_plus) {
          check.expect(x_of_separator(k, r, 1, ell_plus) >= floor_value,
                       "unbalanced floor at (" + std::to_string(k) + "," + std::to_string(r) + ",1," +
                           std::to_string(ell_plus) + ")");
        }
      }
    }
  }
  const Rational lhs = x_of_separator(6, 3, 1, 2);
  const Rational rhs = Rational(binom_int(6, 3)) / 2 - Rational(3) / 2 * binom_ext(Rational(3), 3);
  check.expect(lhs == Rational(17) / 2 && rhs == Rational(17) / 2, "(6,3,1,2): " + str(lhs) + " vs " + str(rhs));

  for (unsigned r = 3; r <= 8; ++r) {
    for (unsigned k = r; k <= 200; ++k) {
      check.expect(check_halving_inequality(k, r).holds, "halving inequality at k=" + std::to_string(k) + ", r=" + std::to_string(r));
    }
    for (int i = 1; i <= 8 * 64; ++i) {
      const Rational x = Rational(i) / 8;
      check.expect(phi(2 * x, r) >= 2 * phi(x, r), "phi at x=" + str(x) + ", r=" + std::to_string(r));
    }
  }
}

void criterion6(Check& check, const std::vector<Instance>& e2) {
  for (const Instance& inst : e2) {
    const SeparatorTree& t = inst.out.tree;
    const unsigned k = t.k;
    const unsigned r = inst.out.graph.r();
    const AbstractTree before = abstract_tree(t);
    DeletionResult del;
    try {
      del = delete_tiny_atoms(before);
    } catch (const std::exception& e) {
      check.expect(false, inst.name + ": " + e.what());
      continue;
    }
    check.expect(validate_abstract_tree(del.tree).empty(), inst.name + ": result is malformed");
    std::uint64_t tiny = 0;
    for (std::size_t a : before.atoms()) {
      if (!is_normal_size(before.subgraphs[a].size, k)) tiny += before.subgraphs[a].size - k;
    }
    for (std::size_t a : del.tree.atoms()) {
      check.expect(is_normal_size(del.tree.subgraphs[a].size, k), inst.name + ": a tiny atom survived");
    }
    check.expect(del.tree.vertex_count() == before.vertex_count() - tiny, inst.name + ": t' != t - tiny");

    const Orientation sigma_before = orient(before);
    const Orientation sigma_after = orient(del.tree);
    for (std::size_t i = 0; i < del.origin.size(); ++i) {
      const auto& b = sigma_before.separators[del.origin[i]];
      const auto& a = sigma_after.separators[i];
      check.expect(std::min(a.ell, a.ell_plus) == std::min(b.ell, b.ell_plus) &&
                       std::max(a.ell, a.ell_plus) == std::max(b.ell, b.ell_plus),
                   inst.name + ": reach changed at separator " + std::to_string(i));
    }

    const Orientation sigma = orient(t);
    BigInt d_sum = 0;
    for (std::size_t origin : del.origin) d_sum += free_difference(inst.out.graph, t, sigma, origin);
    const Rational ceiling = normal_tree_edge_bound(del.tree, r, Rational(1)) + essential_difference(before, r) +
                             Rational(d_sum);
    check.expect(Rational(static_cast<unsigned long>(inst.out.graph.edge_count())) <= ceiling,
                 inst.name + ": e(H) exceeds " + str(ceiling));
  }
}

// Returns the number of in-regime comparisons made.
std::uint64_t criterion7(Check& check, const std::vector<Instance>& all) {
  std::uint64_t compared = 0;
  for (const Instance& inst : all) {
    const unsigned n = inst.out.graph.n();
    const unsigned k = inst.out.k;
    const unsigned r = inst.out.graph.r();
    const Rational& c = inst.out.c;
    const Rational e(static_cast<unsigned long>(inst.out.graph.edge_count()));
    const Rational t(n - k);
    const Bound rhs = relative_surplus_ceiling(n, k, r, c);
    if (rhs.in_regime) {
      ++compared;
      const Rational g = g_relative(n, k, r, surplus(inst.out.graph, k));
      check.expect(g <= rhs.value, inst.name + ": g = " + str(g) + " > " + str(rhs.value));
    }
    for (const Bound& b : {bound_general(t, k, r, c), bound_special(t, k, r, c)}) {
      if (!b.in_regime) continue;
      ++compared;
      check.expect(e <= b.value, inst.name + ": e = " + str(e) + " > " + str(b.value));
    }
  }
  return compared;
}

void criterion8(Check& check, std::string& detail) {
  const OracleResult base = oracle_max_edges(6, 3, 3, 5, {.threads = 1});
  check.expect(base.max_edges >= 19, "value " + std::to_string(base.max_edges));
  check.expect(!contains_k1_connected_subgraph(base.witness, 3, 5).has_value(), "witness fails membership");
  for (unsigned threads : {2U, 4U, 8U}) {
    const OracleResult other = oracle_max_edges(6, 3, 3, 5, {.threads = threads});
    check.expect(other.max_edges == base.max_edges && other.witness == base.witness,
                 "threads=" + std::to_string(threads) + " differs");
  }
  detail = "value " + std::to_string(base.max_edges);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  bool all_pass = true;
  auto report = [&](int id, const std::string& title, const std::function<std::string(Check&)>& body,
                    double time_limit = 0) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (time_limit > 0) check.expect(elapsed < time_limit, "over the " + std::to_string(time_limit) + " s budget");
    const bool pass = check.failures.empty();
    all_pass = all_pass && pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << check.count
         << " checks";
    if (!detail.empty()) line << ", " << detail;
    line << ", " << elapsed << " s)";
    std::cout << line.str() << '\n';
    for (const auto& f : check.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
  };

  const std::vector<Instance> e1 = example1_grid();
  const std::vector<Instance> e2 = example2_grid();

  report(1, "edge-count identity on every construction instance", [&](Check& c) {
    criterion1(c, e1, e2);
    return std::to_string(e1.size() + e2.size()) + " instances";
  });
  report(2, "edge counts equal their predictions", [&](Check& c) {
    criterion2(c, e1, e2);
    return std::string();
  });
  report(3, "two-part Mader hypergraph has no 4-connected part", [&](Check& c) {
    criterion3(c);
    return std::string();
  }, 10);
  report(4, "exact limit 1651/216 with chain slope", [&](Check& c) {
    criterion4(c);
    return std::string();
  });
  report(5, "inequality grids", [&](Check& c) {
    criterion5(c);
    return std::string();
  });
  report(6, "tiny-atom deletion on every p-construction", [&](Check& c) {
    criterion6(c, e2);
    return std::to_string(e2.size()) + " instances";
  });
  report(7, "constructions stay below in-regime bounds", [&](Check& c) {
    std::vector<Instance> all = e1;
    all.insert(all.end(), e2.begin(), e2.end());
    for (unsigned m = 1; m <= 3; ++m) all.push_back({"chain m=" + std::to_string(m), example1_chain(1, 3, 3, m)});
    for (unsigned q = 2; q <= 4; ++q) {
      for (unsigned k = 3; k <= 4; ++k) {
        all.push_back({"mader(" + std::to_string(q) + "," + std::to_string(k) + ",3)", mader_hypergraph(q, k, 3)});
      }
    }
    const std::uint64_t compared = criterion7(c, all);
    c.expect(compared > 0, "no instance fell inside a regime");
    return std::to_string(compared) + " in-regime comparisons over " + std::to_string(all.size()) + " instances";
  });
  report(8, "oracle determinism across thread counts", [&](Check& c) {
    std::string detail;
    criterion8(c, detail);
    return detail;
  }, 300);

  return all_pass ? 0 : 1;
}
