#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "commensurate/bigint.hpp"
#include "commensurate/depth.hpp"

namespace commensurate::instances {

/// Exact dyadic rational numerator / 2^exponent, kept reduced (exponent is
/// zero or the numerator is odd).
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(long value) : numerator_(value) {} // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt numerator, unsigned long exponent = 0);

  const BigInt &numerator() const { return numerator_; }
  unsigned long exponent() const { return exponent_; }

  bool is_integer() const { return exponent_ == 0; }
  /// True iff the value is an integer divisible by 2^e.
  bool divisible_by_pow2(std::size_t e) const;

  /// value * 2^e for any integer e.
  Dyadic scaled(std::int64_t e) const;
  /// Representative of value modulo 2^e Z in [0, 2^e).
  Dyadic mod_pow2(std::int64_t e) const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic &x, const Dyadic &y);
  friend Dyadic operator-(const Dyadic &x, const Dyadic &y) { return x + (-y); }
  friend bool operator==(const Dyadic &x, const Dyadic &y) {
    return x.exponent_ == y.exponent_ && x.numerator_ == y.numerator_;
  }

  /// "n" or "n/2^k" written with the denominator in decimal, e.g. "3/4".
  std::string to_string() const;
  /// Inverse of to_string; accepts unreduced fractions. Throws
  /// MalformedLiteral on bad syntax and ContractViolation when the
  /// denominator is not a power of two.
  static Dyadic parse(std::string_view text);

private:
  void reduce();

  BigInt numerator_{0};
  unsigned long exponent_ = 0;
};

/// (r, m) in Z[1/2] x Z with (r1, m1)(r2, m2) = (r1 + 2^m1 r2, m1 + m2).
struct BS12Element {
  Dyadic r;
  std::int64_t m = 0;

  friend bool operator==(const BS12Element &, const BS12Element &) = default;
};

/// BS(1,2) = <a, t | t a t^-1 = a^2> with a = (1, 0), t = (0, 1),
/// K = <a> and chain N_d = <a^(2^d)>. Conjugation by t^m rescales K by
/// 2^m, hence conj_depth((r, m), d) = d + |m|, constant on the coset.
class BS12Pair {
public:
  using element_type = BS12Element;

  static BS12Element a() { return {Dyadic(1), 0}; }
  static BS12Element t() { return {Dyadic(0), 1}; }

  BS12Element identity() const { return {}; }
  BS12Element multiply(const BS12Element &x, const BS12Element &y) const;
  BS12Element inverse(const BS12Element &x) const;
  bool equal(const BS12Element &x, const BS12Element &y) const { return x == y; }
  bool in_level(const BS12Element &x, Depth d) const;
  Depth conj_depth(const BS12Element &g, Depth d) const;

  BigInt index_of_level(Depth d) const { return pow_ui(BigInt(2), d.value()); }
  BS12Element canonical_rep(const BS12Element &x, Depth d) const;

  std::string chain_spec() const { return "base:2"; }

  /// "(r; m)", e.g. "(3/4; -2)".
  std::string render(const BS12Element &x) const;
  BS12Element parse(std::string_view text) const;
};

} // namespace commensurate::instances
