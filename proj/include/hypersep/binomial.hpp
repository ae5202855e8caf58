#pragma once

#include <cstdint>
#include <vector>

#include "hypersep/rational.hpp"

namespace hypersep {

// Zero whenever n < r, including negative n.
BigInt binom_int(long n, long r);

// x(x-1)...(x-r+1)/r! for x >= r-1, and exactly 0 below r-1.
Rational binom_ext(const Rational& x, unsigned r);

BigInt factorial(unsigned n);

// Saturating machine binomials used for colex ranks.
class BinomialTable {
 public:
  static constexpr unsigned kMaxN = 4096;
  static constexpr unsigned kMaxR = 16;
  static constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

  static const BinomialTable& instance();

  std::uint64_t operator()(unsigned n, unsigned r) const {
    if (r > n) return 0;
    return table_[n * (kMaxR + 1) + r];
  }

 private:
  BinomialTable();
  std::vector<std::uint64_t> table_;
};

}  // namespace hypersep
