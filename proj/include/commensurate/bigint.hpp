#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace commensurate {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt pow_ui(const BigInt &base, unsigned long exponent);
BigInt factorial_ui(unsigned long n);

/// Parses an optionally signed decimal integer. Throws MalformedLiteral.
BigInt parse_bigint(std::string_view text);

/// Multiplicity of the prime p in n (n != 0).
unsigned long valuation(const BigInt &n, unsigned long p);

inline std::string to_string(const BigInt &n) { return n.get_str(); }

} // namespace commensurate
