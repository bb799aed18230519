#pragma once

#include <cstdint>
#include <memory>

#include "commensurate/completion.hpp"
#include "commensurate/instances/bs12.hpp"
#include "commensurate/instances/finite_model.hpp"
#include "commensurate/instances/integers.hpp"

// Discrete targets shipped with the instances, i.e. homomorphisms that kill
// some level of the chain and therefore factor through the completion.
namespace commensurate::instances {

/// BS(1,2) -> Z, (r, m) |-> m. Kills K itself.
DiscreteTarget<BS12Pair, std::int64_t> t_exponent_target();

/// Z -> Z/m. The kill level is the least d with m | modulus(d); throws
/// std::invalid_argument when the chain never reaches a multiple of m.
DiscreteTarget<IntegersPair, BigInt> residue_target(const IntegersPair &pair, const BigInt &m);

/// G -> G / N_bottom, each coset named by its smallest element index.
DiscreteTarget<FiniteModelPair, ElementIndex>
quotient_target(const std::shared_ptr<const FiniteModel> &model);

} // namespace commensurate::instances
