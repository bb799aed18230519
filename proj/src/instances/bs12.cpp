#include "commensurate/instances/bs12.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "commensurate/errors.hpp"

namespace commensurate::instances {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out))
    throw std::overflow_error("BS(1,2): t-exponent overflow");
  return out;
}

std::int64_t checked_neg(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("BS(1,2): t-exponent overflow");
  return -x;
}

} // namespace

Dyadic::Dyadic(BigInt numerator, unsigned long exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  reduce();
}

void Dyadic::reduce() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const unsigned long twos = mpz_scan1(numerator_.get_mpz_t(), 0);
  const unsigned long shift = twos < exponent_ ? twos : exponent_;
  if (shift > 0) {
    mpz_tdiv_q_2exp(numerator_.get_mpz_t(), numerator_.get_mpz_t(), shift);
    exponent_ -= shift;
  }
}

bool Dyadic::divisible_by_pow2(std::size_t e) const {
  if (exponent_ != 0)
    return false;
  if (numerator_ == 0)
    return true;
  return mpz_scan1(numerator_.get_mpz_t(), 0) >= e;
}

Dyadic Dyadic::scaled(std::int64_t e) const {
  if (e >= 0) {
    const auto up = static_cast<unsigned long>(e);
    if (up <= exponent_)
      return Dyadic(numerator_, exponent_ - up);
    BigInt n;
    mpz_mul_2exp(n.get_mpz_t(), numerator_.get_mpz_t(), up - exponent_);
    return Dyadic(n, 0);
  }
  return Dyadic(numerator_, exponent_ + static_cast<unsigned long>(-e));
}

Dyadic Dyadic::mod_pow2(std::int64_t e) const {
  // floor(value / 2^e) = floor(numerator / 2^(exponent + e))
  const std::int64_t shift = static_cast<std::int64_t>(exponent_) + e;
  BigInt quotient;
  if (shift >= 0)
    mpz_fdiv_q_2exp(quotient.get_mpz_t(), numerator_.get_mpz_t(),
                    static_cast<unsigned long>(shift));
  else
    mpz_mul_2exp(quotient.get_mpz_t(), numerator_.get_mpz_t(),
                 static_cast<unsigned long>(-shift));
  return *this - Dyadic(quotient).scaled(e);
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

Dyadic operator+(const Dyadic &x, const Dyadic &y) {
  const unsigned long k = std::max(x.exponent_, y.exponent_);
  BigInt lhs, rhs;
  mpz_mul_2exp(lhs.get_mpz_t(), x.numerator_.get_mpz_t(), k - x.exponent_);
  mpz_mul_2exp(rhs.get_mpz_t(), y.numerator_.get_mpz_t(), k - y.exponent_);
  return Dyadic(BigInt(lhs + rhs), k);
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0)
    return numerator_.get_str();
  return numerator_.get_str() + "/" + pow_ui(BigInt(2), exponent_).get_str();
}

Dyadic Dyadic::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Dyadic(parse_bigint(text), 0);
  const BigInt numerator = parse_bigint(trim(text.substr(0, slash)));
  const std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw MalformedLiteral("dyadic denominator must be unsigned: '" + std::string(text) + "'");
  const BigInt denominator = parse_bigint(den_text);
  if (denominator == 0)
    throw MalformedLiteral("zero denominator in '" + std::string(text) + "'");
  const unsigned long k = mpz_scan1(denominator.get_mpz_t(), 0);
  if (denominator != pow_ui(BigInt(2), k))
    throw ContractViolation("'" + std::string(text) +
                            "' is not a dyadic rational (denominator not a power of 2)");
  return Dyadic(numerator, k);
}

BS12Element BS12Pair::multiply(const BS12Element &x, const BS12Element &y) const {
  return {x.r + y.r.scaled(x.m), checked_add(x.m, y.m)};
}

BS12Element BS12Pair::inverse(const BS12Element &x) const {
  const std::int64_t minus_m = checked_neg(x.m);
  return {-x.r.scaled(minus_m), minus_m};
}

bool BS12Pair::in_level(const BS12Element &x, Depth d) const {
  return x.m == 0 && x.r.divisible_by_pow2(d.value());
}

Depth BS12Pair::conj_depth(const BS12Element &g, Depth d) const {
  const std::uint64_t shift =
      g.m < 0 ? static_cast<std::uint64_t>(-(g.m + 1)) + 1 : static_cast<std::uint64_t>(g.m);
  return d + shift;
}

BS12Element BS12Pair::canonical_rep(const BS12Element &x, Depth d) const {
  // x N_d = {(r + 2^(m+d) z, m)}
  return {x.r.mod_pow2(checked_add(x.m, static_cast<std::int64_t>(d.value()))), x.m};
}

std::string BS12Pair::render(const BS12Element &x) const {
  return "(" + x.r.to_string() + "; " + std::to_string(x.m) + ")";
}

BS12Element BS12Pair::parse(std::string_view text) const {
  const std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw MalformedLiteral("expected '(r; m)', got '" + std::string(text) + "'");
  const std::string_view inner = body.substr(1, body.size() - 2);
  const auto semi = inner.find(';');
  if (semi == std::string_view::npos || inner.find(';', semi + 1) != std::string_view::npos)
    throw MalformedLiteral("expected '(r; m)', got '" + std::string(text) + "'");
  const Dyadic r = Dyadic::parse(inner.substr(0, semi));
  const BigInt m = parse_bigint(trim(inner.substr(semi + 1)));
  if (!m.fits_slong_p())
    throw MalformedLiteral("t-exponent out of range in '" + std::string(text) + "'");
  return {r, static_cast<std::int64_t>(m.get_si())};
}

} // namespace commensurate::instances
