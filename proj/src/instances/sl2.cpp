#include "commensurate/instances/sl2.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "commensurate/errors.hpp"

namespace commensurate::instances {

Rational Matrix2::determinant() const {
  return entries[0] * entries[3] - entries[1] * entries[2];
}

Matrix2 operator*(const Matrix2 &x, const Matrix2 &y) {
  Matrix2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Rational sum = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
      sum.canonicalize();
      out.entries[2 * i + j] = sum;
    }
  }
  return out;
}

SL2Pair::SL2Pair(unsigned long p) : p_(p) {
  if (p < 2 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0)
    throw std::invalid_argument("sl2_pair: " + std::to_string(p) + " is not prime");
}

Matrix2 SL2Pair::make(Rational a, Rational b, Rational c, Rational d) const {
  Matrix2 m;
  m.entries = {std::move(a), std::move(b), std::move(c), std::move(d)};
  for (auto &e : m.entries) {
    e.canonicalize();
    const BigInt &den = e.get_den();
    BigInt rest;
    BigInt prime(p_);
    mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
    if (rest != 1)
      throw ContractViolation("SL2(Z[1/" + std::to_string(p_) + "]): entry " + e.get_str() +
                              " has a denominator prime to p");
  }
  if (m.determinant() != 1)
    throw ContractViolation("SL2(Z[1/" + std::to_string(p_) + "]): determinant " +
                            m.determinant().get_str() + " is not 1");
  return m;
}

Matrix2 SL2Pair::inverse(const Matrix2 &x) const {
  Matrix2 out;
  out.entries = {x.entries[3], -x.entries[1], -x.entries[2], x.entries[0]};
  return out;
}

bool SL2Pair::in_level(const Matrix2 &x, Depth d) const {
  const BigInt modulus = level_modulus(d);
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational &e = x.entries[i];
    if (e.get_den() != 1)
      return false;
    const BigInt offset = e.get_num() - ((i == 0 || i == 3) ? 1 : 0);
    if (mpz_divisible_p(offset.get_mpz_t(), modulus.get_mpz_t()) == 0)
      return false;
  }
  return true;
}

unsigned long SL2Pair::denominator_exponent(const Matrix2 &g) const {
  unsigned long v = 0;
  for (const Matrix2 &m : {g, inverse(g)}) {
    for (const Rational &e : m.entries)
      v = std::max(v, valuation(e.get_den(), p_));
  }
  return v;
}

Depth SL2Pair::conj_depth(const Matrix2 &g, Depth d) const {
  return d + 2 * denominator_exponent(g);
}

BigInt SL2Pair::index_of_level(Depth d) const {
  if (d.value() == 0)
    return 1;
  const BigInt p(p_);
  return pow_ui(p, 3 * d.value() - 2) * (p * p - 1);
}

std::string SL2Pair::render(const Matrix2 &x) const {
  return "[[" + x.entries[0].get_str() + "," + x.entries[1].get_str() + "],[" +
         x.entries[2].get_str() + "," + x.entries[3].get_str() + "]]";
}

namespace {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw MalformedLiteral("denominator must be unsigned: '" + std::string(text) + "'");
  const BigInt den = parse_bigint(den_text);
  if (den == 0)
    throw MalformedLiteral("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

} // namespace

Matrix2 SL2Pair::parse(std::string_view text) const {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)))
      compact.push_back(ch);
  }
  const std::string_view s = compact;
  const auto malformed = [&] {
    return MalformedLiteral("expected '[[a,b],[c,d]]', got '" + std::string(text) + "'");
  };
  if (s.size() < 2 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
    throw malformed();
  const std::string_view inner = s.substr(2, s.size() - 4);
  const auto mid = inner.find("],[");
  if (mid == std::string_view::npos)
    throw malformed();
  std::vector<std::string_view> fields;
  for (std::string_view row : {inner.substr(0, mid), inner.substr(mid + 3)}) {
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      throw malformed();
    fields.push_back(row.substr(0, comma));
    fields.push_back(row.substr(comma + 1));
  }
  for (std::string_view f : fields) {
    if (f.find_first_of("[]") != std::string_view::npos)
      throw malformed();
  }
  return make(parse_rational(fields[0]), parse_rational(fields[1]), parse_rational(fields[2]),
              parse_rational(fields[3]));
}

} // namespace commensurate::instances
