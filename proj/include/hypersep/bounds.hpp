#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypersep/hypergraph.hpp"
#include "hypersep/rational.hpp"
#include "hypersep/septree.hpp"

namespace hypersep {

// A formula value together with whether its parameters satisfy the stated
// regime. Out-of-regime values are still exact, just not proven bounds.
struct Bound {
  Rational value;
  bool in_regime = false;
};

// sum_{i >= from} binom_ext(k / 2^i, r); stops at the first zero term.
Rational halving_sum(const Rational& k, unsigned r, unsigned from = 0);

// (L/2) sum_{i>=0} binom_ext(k / (2^i L), r). Requires L > 0.
Rational f_krl(const Rational& k, unsigned r, const Rational& L);
// Same sum, cut at the last index i with k / (2^i L) >= r - 1.
Rational f_krl_truncated(const Rational& k, unsigned r, const Rational& L);
// Largest i with k / (2^i L) >= r - 1, or -1 when there is none.
long truncation_index(const Rational& k, unsigned r, const Rational& L);

// f(k,r,l+l') - f(k,r,l) - f(k,r,l') + l * binom_ext(k/l, r); 1 <= l <= l'.
Rational x_of_separator(unsigned k, unsigned r, unsigned ell, unsigned ell_plus);

Bound bound_general(const Rational& t, unsigned k, unsigned r, const Rational& c);
Bound bound_special(const Rational& t, unsigned k, unsigned r, const Rational& c);

// The upper bound for c^{r-1} >= 2r trees at t = n - k.
Bound bound_N(unsigned n, unsigned k, unsigned r, const Rational& c);
// The general bound at c = 1, t = n - k.
Bound bound_M(unsigned n, unsigned k, unsigned r);

// e(H) - C(n,r) + C(n-k,r); may be negative. Requires k < n.
BigInt surplus(const Hypergraph& h, unsigned k);
BigInt surplus(std::uint64_t edges, unsigned n, unsigned k, unsigned r);

// r! * surplus / (k^{r-1} (n - k)). Requires n > k.
Rational g_relative(unsigned n, unsigned k, unsigned r, const BigInt& surplus_value);

// c^{r-1} + (1/c)(1 - 1/(2^{r+1} - 2)) - k/(n-k), in regime when
// k >= r >= 3, c >= 1 and n >= (2^r c/(2^r - 1) + 1) k.
Bound relative_surplus_ceiling(unsigned n, unsigned k, unsigned r, const Rational& c);

// Leading form c^{r-1} + (1/(2c))(1 - 1/(2^r - 1)) without its O(1/k) term.
Rational limit_leading_form(unsigned r, const Rational& c);

struct HalvingCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  Rational slack;  // rhs - lhs
};

// C(k,r) - sum_{i>=1} binom_ext(k/2^i, r) <= (k^r/r!)(1 - 1/(2^r - 1)).
HalvingCheck check_halving_inequality(unsigned k, unsigned r);

// g(x) = f(k, r, kx); checks 2g(x) = g(2x) + xk binom_ext(1/x, r).
// Throws std::invalid_argument unless 0 < x <= 1/(r-1).
bool check_doubling_identity(unsigned k, unsigned r, const Rational& x);

// x^r/r! - binom_ext(x, r).
Rational phi(const Rational& x, unsigned r);

// Edge ceiling of a normal abstract tree; throws std::invalid_argument when an
// atom is tiny.
Rational normal_tree_edge_bound(const AbstractTree& t, unsigned r, const Rational& c);

// C(n,r) - C(n-k,r) + (n/k - 2) C(k,r); in_regime records k | n.
Bound conjecture_bound(unsigned n, unsigned k, unsigned r);

struct GLimit {
  Rational value;
  BigInt surplus_counted;  // first chain member, by direct edge count
  BigInt surplus_formula;  // first chain member, from bound_N
  std::vector<BigInt> chain_surplus;  // m = 1, 2, ...
  bool slope_holds = false;
  Rational leading_form;
  Rational correction;  // leading_form - value
};

// Exact limit of the relative surplus along the glued chain of the
// power-of-two construction; k = 2^s r with s >= 1. Throws std::logic_error when the two
// surplus computations disagree, std::invalid_argument on bad parameters.
GLimit g_limit_exact(unsigned k, unsigned r, unsigned c, unsigned chain_length = 3);

struct BoundsReport {
  unsigned n = 0;
  unsigned k = 0;
  unsigned r = 0;
  Rational c;
  Bound n_bound;
  Bound m_bound;
  Bound general;
  Bound special;
  Bound surplus_ceiling;
  Rational leading_form;
  Bound conjecture;
  std::optional<HalvingCheck> halving;
  std::optional<BigInt> surplus_value;
  std::optional<Rational> relative_surplus;
};

// Requires n > k >= 1, r >= 2, c > 0.
BoundsReport bounds_report(unsigned n, unsigned k, unsigned r, const Rational& c);
void attach_hypergraph(BoundsReport& report, const Hypergraph& h);

}  // namespace hypersep
