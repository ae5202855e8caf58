#include "hypersep/binomial.hpp"

namespace hypersep {

BigInt binom_int(long n, long r) {
  if (r < 0 || n < r) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational binom_ext(const Rational& x, unsigned r) {
  if (r == 0) return 1;
  if (x < Rational(static_cast<long>(r) - 1)) return 0;
  Rational prod(1);
  for (unsigned i = 0; i < r; ++i) prod *= x - static_cast<long>(i);
  prod /= Rational(factorial(r));
  return prod;
}

const BinomialTable& BinomialTable::instance() {
  static const BinomialTable table;
  return table;
}

BinomialTable::BinomialTable() : table_((kMaxN + 1) * (kMaxR + 1), 0) {
  for (unsigned n = 0; n <= kMaxN; ++n) {
    std::uint64_t* row = &table_[n * (kMaxR + 1)];
    row[0] = 1;
    if (n == 0) continue;
    const std::uint64_t* prev = &table_[(n - 1) * (kMaxR + 1)];
    for (unsigned r = 1; r <= kMaxR && r <= n; ++r) {
      const std::uint64_t a = prev[r - 1];
      const std::uint64_t b = prev[r];
      row[r] = (a == kSaturated || b == kSaturated || a > kSaturated - b) ? kSaturated : a + b;
    }
  }
}

}  // namespace hypersep
