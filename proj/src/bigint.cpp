#include "commensurate/bigint.hpp"

#include <cctype>

#include "commensurate/errors.hpp"

namespace commensurate {

BigInt pow_ui(const BigInt &base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt factorial_ui(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+'))
    ++i;
  if (i == text.size())
    throw MalformedLiteral("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw MalformedLiteral("expected an integer, got '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

unsigned long valuation(const BigInt &n, unsigned long p) {
  if (n == 0)
    return 0;
  BigInt rest;
  BigInt prime(p);
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
}

} // namespace commensurate
