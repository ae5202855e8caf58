#include "hypersep/bounds.hpp"

#include <bit>
#include <stdexcept>

#include "hypersep/binomial.hpp"
#include "hypersep/constructions.hpp"

namespace hypersep {

namespace {

Rational two_pow(unsigned e) { return Rational(BigInt(1) << e); }

Rational binom_r(long n, unsigned r) { return Rational(binom_int(n, r)); }

void require_r(unsigned r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
}

// Common part of both tree bounds, with the given coefficient on C(k, r).
Rational tree_bound(const Rational& t, unsigned k, unsigned r, const Rational& c, const Rational& k_coefficient) {
  require_r(r);
  if (c <= 0) throw std::invalid_argument("c must be positive");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (t < 0 || !is_integer(t)) throw std::invalid_argument("t must be a nonnegative integer");
  const long tt = floor(t).get_si();
  const Rational ck = c * k;
  return binom_r(tt + k, r) - binom_r(tt, r) + (t / ck) * binom_ext(ck, r) +
         k_coefficient * binom_r(k, r) - (t / (2 * ck)) * halving_sum(Rational(k), r);
}

}  // namespace

Rational halving_sum(const Rational& k, unsigned r, unsigned from) {
  require_r(r);
  Rational sum = 0;
  Rational x = k / two_pow(from);
  while (true) {
    const Rational term = binom_ext(x, r);
    if (term == 0) break;
    sum += term;
    x /= 2;
  }
  return sum;
}

Rational f_krl(const Rational& k, unsigned r, const Rational& L) {
  if (L <= 0) throw std::invalid_argument("L must be positive");
  return L / 2 * halving_sum(k / L, r);
}

long truncation_index(const Rational& k, unsigned r, const Rational& L) {
  require_r(r);
  if (L <= 0) throw std::invalid_argument("L must be positive");
  const Rational q = k / (L * (r - 1));
  long i = -1;
  Rational power = 1;
  while (power <= q) {
    ++i;
    power *= 2;
  }
  return i;
}

Rational f_krl_truncated(const Rational& k, unsigned r, const Rational& L) {
  const long last = truncation_index(k, r, L);
  Rational sum = 0;
  for (long i = 0; i <= last; ++i) sum += binom_ext(k / (two_pow(static_cast<unsigned>(i)) * L), r);
  return L / 2 * sum;
}

Rational x_of_separator(unsigned k, unsigned r, unsigned ell, unsigned ell_plus) {
  if (ell < 1 || ell > ell_plus) throw std::invalid_argument("need 1 <= ell <= ell_plus");
  const Rational kk(k);
  return f_krl(kk, r, Rational(ell + ell_plus)) - f_krl(kk, r, Rational(ell)) - f_krl(kk, r, Rational(ell_plus)) +
         ell * binom_ext(kk / ell, r);
}

Bound bound_general(const Rational& t, unsigned k, unsigned r, const Rational& c) {
  Bound out;
  out.value = tree_bound(t, k, r, c, 3 * t / (2 * c * k) - 1);
  const Rational threshold = two_pow(r) / (two_pow(r) - 1) * c * k;
  out.in_regime = r >= 3 && k >= r && t >= threshold;
  return out;
}

Bound bound_special(const Rational& t, unsigned k, unsigned r, const Rational& c) {
  Bound out;
  out.value = tree_bound(t, k, r, c, t / (c * k) - 1);
  const Rational threshold = Rational(k) + Rational(4, 3) * c * k + c * k * k / Rational(r - 1);
  out.in_regime = r >= 3 && t >= threshold && pow(c, r - 1) >= 2 * r && k >= 2 * (r - 1);
  return out;
}

Bound bound_N(unsigned n, unsigned k, unsigned r, const Rational& c) {
  if (n < k) throw std::invalid_argument("n must be at least k");
  return bound_special(Rational(n - k), k, r, c);
}

Bound bound_M(unsigned n, unsigned k, unsigned r) {
  if (n < k) throw std::invalid_argument("n must be at least k");
  return bound_general(Rational(n - k), k, r, Rational(1));
}

BigInt surplus(std::uint64_t edges, unsigned n, unsigned k, unsigned r) {
  if (k >= n) throw std::invalid_argument("surplus needs k < n");
  return BigInt(static_cast<unsigned long>(edges)) - binom_int(n, r) + binom_int(n - k, r);
}

BigInt surplus(const Hypergraph& h, unsigned k) { return surplus(h.edge_count(), h.n(), k, h.r()); }

Rational g_relative(unsigned n, unsigned k, unsigned r, const BigInt& surplus_value) {
  if (n <= k) throw std::invalid_argument("g needs n > k");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return Rational(factorial(r) * surplus_value) / (pow(Rational(k), r - 1) * (n - k));
}

Bound relative_surplus_ceiling(unsigned n, unsigned k, unsigned r, const Rational& c) {
  if (n <= k) throw std::invalid_argument("need n > k");
  if (c <= 0) throw std::invalid_argument("c must be positive");
  Bound out;
  out.value = pow(c, r - 1) + (1 - 1 / (two_pow(r + 1) - 2)) / c - Rational(k) / (n - k);
  const Rational threshold = (two_pow(r) * c / (two_pow(r) - 1) + 1) * k;
  out.in_regime = k >= r && r >= 3 && c >= 1 && Rational(n) >= threshold;
  return out;
}

Rational limit_leading_form(unsigned r, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("c must be positive");
  return pow(c, r - 1) + (1 - 1 / (two_pow(r) - 1)) / (2 * c);
}

HalvingCheck check_halving_inequality(unsigned k, unsigned r) {
  if (r < 3 || k < r) throw std::invalid_argument("need k >= r >= 3");
  HalvingCheck out;
  out.lhs = binom_r(k, r) - halving_sum(Rational(k), r, 1);
  out.rhs = pow(Rational(k), r) / Rational(factorial(r)) * (1 - 1 / (two_pow(r) - 1));
  out.slack = out.rhs - out.lhs;
  out.holds = out.slack >= 0;
  return out;
}

bool check_doubling_identity(unsigned k, unsigned r, const Rational& x) {
  require_r(r);
  if (x <= 0 || x > Rational(1, r - 1)) throw std::invalid_argument("need 0 < x <= 1/(r-1)");
  const Rational kk(k);
  auto g = [&](const Rational& y) { return f_krl(kk, r, kk * y); };
  return 2 * g(x) == g(2 * x) + x * kk * binom_ext(1 / x, r);
}

Rational phi(const Rational& x, unsigned r) {
  return pow(x, r) / Rational(factorial(r)) - binom_ext(x, r);
}

Rational normal_tree_edge_bound(const AbstractTree& t, unsigned r, const Rational& c) {
  const auto problems = validate_abstract_tree(t);
  if (!problems.empty()) throw std::invalid_argument("malformed abstract tree: " + problems.front());
  const auto atoms = t.atoms();
  for (std::size_t a : atoms) {
    if (!is_normal_size(t.subgraphs[a].size, t.k)) throw std::invalid_argument("tree has a tiny atom");
  }
  const unsigned k = t.k;
  const Rational tt(static_cast<unsigned long>(t.vertex_count() - k));
  const Orientation sigma = orient(t);
  Rational x_total = 0;
  for (const auto& o : sigma.separators) x_total += x_of_separator(k, r, o.ell, o.ell_plus);
  const Rational base = tree_bound(tt, k, r, c, tt / (c * k) - 1);
  return base + f_krl(Rational(k), r, Rational(static_cast<unsigned long>(atoms.size()))) - x_total;
}

Bound conjecture_bound(unsigned n, unsigned k, unsigned r) {
  if (k < 1 || n < k) throw std::invalid_argument("need n >= k >= 1");
  Bound out;
  out.value = binom_r(n, r) - binom_r(n - k, r) + (Rational(n) / k - 2) * binom_r(k, r);
  out.in_regime = n % k == 0;
  return out;
}

GLimit g_limit_exact(unsigned k_in, unsigned r, unsigned c, unsigned chain_length) {
  if (chain_length < 1) throw std::invalid_argument("chain length must be at least 1");
  if (r < 3) throw std::invalid_argument("need r >= 3");
  if (k_in % r != 0 || k_in / r < 2 || !std::has_single_bit(k_in / r)) {
    throw std::invalid_argument("need k = 2^s r with s >= 1");
  }
  const unsigned s = static_cast<unsigned>(std::countr_zero(k_in / r));
  if (pow(Rational(c), r - 1) < 2 * r) throw std::invalid_argument("need c^{r-1} >= 2r");
  const ConstructionOutput base = example1(s, r, c);
  const unsigned k = base.k;
  const unsigned n = base.graph.n();
  const VertexSet independent = example1_independent_set(base);
  if (count_induced_edges(base.graph, independent) != 0) throw std::logic_error("gluing set is not independent");
  GLimit out;
  out.surplus_counted = surplus(base.graph, k);
  const Rational from_formula = bound_N(n, k, r, Rational(c)).value - binom_r(n, r) + binom_r(n - k, r);
  if (!is_integer(from_formula)) throw std::logic_error("surplus formula is not an integer");
  out.surplus_formula = from_formula.get_num();
  if (out.surplus_formula != out.surplus_counted) {
    throw std::logic_error("counted surplus " + out.surplus_counted.get_str() + " differs from formula " +
                           out.surplus_formula.get_str());
  }
  const BigInt full_k = binom_int(k, r);
  out.slope_holds = true;
  for (unsigned m = 1; m <= chain_length; ++m) {
    const ConstructionOutput chain = example1_chain(s, r, c, m);
    const BigInt value = surplus(chain.graph, k);
    out.chain_surplus.push_back(value);
    if (value != BigInt(m) * out.surplus_counted + BigInt(m - 1) * full_k) out.slope_holds = false;
  }
  const Rational growth(static_cast<unsigned long>(n - k));
  out.value = Rational(factorial(r) * (out.surplus_counted + full_k)) / (pow(Rational(k), r - 1) * growth);
  out.leading_form = limit_leading_form(r, Rational(c));
  out.correction = out.leading_form - out.value;
  return out;
}

BoundsReport bounds_report(unsigned n, unsigned k, unsigned r, const Rational& c) {
  if (k < 1 || n <= k) throw std::invalid_argument("need n > k >= 1");
  require_r(r);
  if (c <= 0) throw std::invalid_argument("c must be positive");
  BoundsReport out;
  out.n = n;
  out.k = k;
  out.r = r;
  out.c = c;
  const Rational t(n - k);
  out.n_bound = bound_N(n, k, r, c);
  out.m_bound = bound_M(n, k, r);
  out.general = bound_general(t, k, r, c);
  out.special = bound_special(t, k, r, c);
  out.surplus_ceiling = relative_surplus_ceiling(n, k, r, c);
  out.leading_form = limit_leading_form(r, c);
  out.conjecture = conjecture_bound(n, k, r);
  if (r >= 3 && k >= r) out.halving = check_halving_inequality(k, r);
  return out;
}

void attach_hypergraph(BoundsReport& report, const Hypergraph& h) {
  if (h.n() != report.n || h.r() != report.r) throw std::invalid_argument("hypergraph does not match n and r");
  report.surplus_value = surplus(h, report.k);
  report.relative_surplus = g_relative(report.n, report.k, report.r, *report.surplus_value);
}

}  // namespace hypersep
