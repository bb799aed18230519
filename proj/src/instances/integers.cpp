#include "commensurate/instances/integers.hpp"

#include <stdexcept>

namespace commensurate::instances {

IntegersPair IntegersPair::with_base(unsigned long base) {
  if (base < 2)
    throw std::invalid_argument("integers_pair: base must be at least 2, got " +
                                std::to_string(base));
  return IntegersPair(ChainKind::power, base);
}

IntegersPair IntegersPair::factorial() { return IntegersPair(ChainKind::factorial, 0); }

std::string IntegersPair::chain_spec() const {
  if (kind_ == ChainKind::factorial)
    return "factorial";
  return "base:" + std::to_string(base_);
}

BigInt IntegersPair::modulus(Depth d) const {
  if (kind_ == ChainKind::factorial)
    return factorial_ui(d.value());
  return pow_ui(BigInt(base_), d.value());
}

bool IntegersPair::in_level(const BigInt &x, Depth d) const {
  return mpz_divisible_p(x.get_mpz_t(), modulus(d).get_mpz_t()) != 0;
}

BigInt IntegersPair::canonical_rep(const BigInt &x, Depth d) const {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus(d).get_mpz_t());
  return r;
}

} // namespace commensurate::instances
