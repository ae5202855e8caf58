#include "hypersep/rational.hpp"

#include <stdexcept>

namespace hypersep {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("empty integer in rational");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const BigInt num = parse_integer(text.substr(0, slash), true);
  const BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace hypersep
