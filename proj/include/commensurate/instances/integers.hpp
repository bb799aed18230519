#pragma once

#include <string>
#include <string_view>

#include "commensurate/bigint.hpp"
#include "commensurate/depth.hpp"

namespace commensurate::instances {

/// G = K = Z written multiplicatively, with chain N_d = base^d Z or, for the
/// cofinal factorial chain, N_d = d! Z. The factorial chain yields the full
/// profinite completion of Z; base m yields its pro-m quotient.
class IntegersPair {
public:
  using element_type = BigInt;

  enum class ChainKind { power, factorial };

  /// Throws std::invalid_argument for base < 2.
  static IntegersPair with_base(unsigned long base);
  static IntegersPair factorial();

  ChainKind chain_kind() const { return kind_; }
  unsigned long base() const { return base_; }

  /// "base:<m>" or "factorial".
  std::string chain_spec() const;

  /// Generator of the N_d as an ideal of Z.
  BigInt modulus(Depth d) const;

  BigInt identity() const { return 0; }
  BigInt multiply(const BigInt &x, const BigInt &y) const { return x + y; }
  BigInt inverse(const BigInt &x) const { return -x; }
  bool equal(const BigInt &x, const BigInt &y) const { return x == y; }
  bool in_level(const BigInt &x, Depth d) const;
  Depth conj_depth(const BigInt &, Depth d) const { return d; }

  BigInt index_of_level(Depth d) const { return modulus(d); }
  /// Least non-negative residue.
  BigInt canonical_rep(const BigInt &x, Depth d) const;

  std::string render(const BigInt &x) const { return x.get_str(); }
  BigInt parse(std::string_view text) const { return parse_bigint(text); }

private:
  IntegersPair(ChainKind kind, unsigned long base) : kind_(kind), base_(base) {}

  ChainKind kind_;
  unsigned long base_;
};

} // namespace commensurate::instances
