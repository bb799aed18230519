#pragma once

#include <array>
#include <string>
#include <string_view>

#include "commensurate/bigint.hpp"
#include "commensurate/depth.hpp"

namespace commensurate::instances {

/// 2x2 matrix of exact rationals, row-major [[a, b], [c, d]].
struct Matrix2 {
  std::array<Rational, 4> entries{Rational(1), Rational(0), Rational(0), Rational(1)};

  const Rational &operator()(std::size_t row, std::size_t col) const {
    return entries[2 * row + col];
  }

  Rational determinant() const;

  friend bool operator==(const Matrix2 &, const Matrix2 &) = default;
};

Matrix2 operator*(const Matrix2 &x, const Matrix2 &y);

/// G = SL_2(Z[1/p]), K = SL_2(Z), N_d = Gamma(p^d).
///
/// The chain is the principal congruence filtration, which is not cofinal in
/// the finite-index subgroups of SL_2(Z): the completion computed here is the
/// p-congruence one. conj_depth(g, d) = d + 2 v(g) with v(g) the largest
/// p-power in a denominator of g or g^-1; v is constant on g Gamma(p^d).
class SL2Pair {
public:
  using element_type = Matrix2;

  /// Throws std::invalid_argument unless p is prime.
  explicit SL2Pair(unsigned long p);

  unsigned long prime() const { return p_; }
  std::string chain_spec() const { return "congruence:" + std::to_string(p_); }

  /// Validated constructor: det 1 and entries in Z[1/p], else ContractViolation.
  Matrix2 make(Rational a, Rational b, Rational c, Rational d) const;

  Matrix2 identity() const { return {}; }
  Matrix2 multiply(const Matrix2 &x, const Matrix2 &y) const { return x * y; }
  Matrix2 inverse(const Matrix2 &x) const;
  bool equal(const Matrix2 &x, const Matrix2 &y) const { return x == y; }
  bool in_level(const Matrix2 &x, Depth d) const;
  Depth conj_depth(const Matrix2 &g, Depth d) const;

  /// Largest exponent of p in a denominator of g or g^-1.
  unsigned long denominator_exponent(const Matrix2 &g) const;

  /// [SL_2(Z) : Gamma(p^d)] = p^(3d) (1 - p^-2) for d >= 1.
  BigInt index_of_level(Depth d) const;
  /// p^d, the congruence modulus of level d.
  BigInt level_modulus(Depth d) const { return pow_ui(BigInt(p_), d.value()); }

  /// "[[a,b],[c,d]]" with entries "n" or "n/m" in lowest terms.
  std::string render(const Matrix2 &x) const;
  Matrix2 parse(std::string_view text) const;

private:
  unsigned long p_;
};

} // namespace commensurate::instances
