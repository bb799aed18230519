#pragma once

#include <concepts>
#include <vector>

#include "commensurate/bigint.hpp"
#include "commensurate/depth.hpp"

namespace commensurate {

/// A group G with a commensurated subgroup K and a descending chain of
/// finite-index subgroups N_0 = K >= N_1 >= ..., each normal in K.
///
/// Besides exact arithmetic on G an instance supplies
///   in_level(x, d)    deciding x in N_d, and
///   conj_depth(g, d)  a depth j >= d with N_j inside x N_d x^-1 and inside
///                     x^-1 N_d x for every x in the coset g N_d. The bound
///                     must be monotone in d.
template <class P>
concept CommensuratedPair =
    requires(const P &pair, const typename P::element_type &x, Depth d) {
      typename P::element_type;
      { pair.identity() } -> std::convertible_to<typename P::element_type>;
      { pair.multiply(x, x) } -> std::convertible_to<typename P::element_type>;
      { pair.inverse(x) } -> std::convertible_to<typename P::element_type>;
      { pair.equal(x, x) } -> std::same_as<bool>;
      { pair.in_level(x, d) } -> std::same_as<bool>;
      { pair.conj_depth(x, d) } -> std::same_as<Depth>;
    };

/// Instances that know [K : N_d].
template <class P>
concept HasLevelIndex = CommensuratedPair<P> && requires(const P &pair, Depth d) {
  { pair.index_of_level(d) } -> std::convertible_to<BigInt>;
};

/// Instances that can pick a canonical representative of the coset g N_d.
template <class P>
concept HasCanonicalRep =
    CommensuratedPair<P> && requires(const P &pair, const typename P::element_type &x, Depth d) {
      { pair.canonical_rep(x, d) } -> std::convertible_to<typename P::element_type>;
    };

/// Instances that can list a transversal of K / N_d (finite models).
template <class P>
concept HasTransversal = CommensuratedPair<P> && requires(const P &pair, Depth d) {
  { pair.level_transversal(d) } -> std::convertible_to<std::vector<typename P::element_type>>;
};

} // namespace commensurate
