#include "commensurate/instances/targets.hpp"

#include <optional>
#include <stdexcept>

namespace commensurate::instances {

DiscreteTarget<BS12Pair, std::int64_t> t_exponent_target() {
  return {
      "texp",
      [](const BS12Element &x) { return x.m; },
      [](const std::int64_t &a, const std::int64_t &b) {
        std::int64_t out;
        if (__builtin_add_overflow(a, b, &out))
          throw std::overflow_error("texp: overflow");
        return out;
      },
      0,
      Depth{0},
  };
}

DiscreteTarget<IntegersPair, BigInt> residue_target(const IntegersPair &pair, const BigInt &m) {
  if (m < 1)
    throw std::invalid_argument("mod:m needs m >= 1");
  // m | base^d for some d iff it does for d = bit length of m; for the
  // factorial chain m | m! bounds the search.
  std::size_t limit = mpz_sizeinbase(m.get_mpz_t(), 2);
  if (pair.chain_kind() == IntegersPair::ChainKind::factorial) {
    if (!m.fits_ulong_p() || m.get_ui() > 100000)
      throw std::invalid_argument("mod:" + m.get_str() + " is too large for the factorial chain");
    limit = m.get_ui();
  }
  std::optional<Depth> kill;
  for (std::size_t d = 0; d <= limit && !kill; ++d) {
    if (mpz_divisible_p(pair.modulus(Depth{d}).get_mpz_t(), m.get_mpz_t()) != 0)
      kill = Depth{d};
  }
  if (!kill)
    throw std::invalid_argument("mod:" + m.get_str() + " does not factor through chain " +
                                pair.chain_spec());
  return {
      "mod:" + m.get_str(),
      [m](const BigInt &x) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        return r;
      },
      [m](const BigInt &a, const BigInt &b) {
        BigInt r;
        const BigInt sum = a + b;
        mpz_fdiv_r(r.get_mpz_t(), sum.get_mpz_t(), m.get_mpz_t());
        return r;
      },
      BigInt(0),
      *kill,
  };
}

DiscreteTarget<FiniteModelPair, ElementIndex>
quotient_target(const std::shared_ptr<const FiniteModel> &model) {
  const Depth bottom = model->bottom_depth();
  return {
      "quot",
      [model, bottom](const FiniteElement &x) { return model->left_coset(x.index, bottom).min(); },
      [model, bottom](const ElementIndex &a, const ElementIndex &b) {
        return model->left_coset(model->group().multiply(a, b), bottom).min();
      },
      model->left_coset(model->group().identity(), bottom).min(),
      bottom,
  };
}

} // namespace commensurate::instances
