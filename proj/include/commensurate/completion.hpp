#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "commensurate/depth.hpp"
#include "commensurate/errors.hpp"
#include "commensurate/pair.hpp"

namespace commensurate {

/// A truncated Cauchy filter: every filter containing the left coset
/// rep * N_depth. Coarser cosets rep * N_d (d <= depth) are implied by the
/// nesting of the chain.
template <CommensuratedPair P>
class CompletionElement {
public:
  using pair_type = P;
  using element_type = typename P::element_type;

  CompletionElement(std::shared_ptr<const P> pair, element_type rep, Depth depth)
      : pair_(std::move(pair)), rep_(std::move(rep)), depth_(depth) {
    if (!pair_)
      throw std::invalid_argument("CompletionElement: null pair");
  }

  const P &pair() const { return *pair_; }
  const std::shared_ptr<const P> &pair_ptr() const { return pair_; }
  const element_type &rep() const { return rep_; }
  Depth depth() const { return depth_; }

private:
  std::shared_ptr<const P> pair_;
  element_type rep_;
  Depth depth_;
};

/// Outcome of comparing two elements level by level.
struct Valuation {
  enum class Kind {
    disjoint,          ///< different cosets of K already
    level,             ///< agree up to `depth`, differ at depth + 1
    indistinguishable, ///< agree at every level both elements carry
  };

  Kind kind = Kind::disjoint;
  Depth depth{};

  static Valuation disjoint() { return {Kind::disjoint, Depth{}}; }
  static Valuation at(Depth d) { return {Kind::level, d}; }
  static Valuation indistinguishable(Depth d) { return {Kind::indistinguishable, d}; }

  friend bool operator==(const Valuation &, const Valuation &) = default;
};

/// A homomorphism phi: G -> R into a discrete group with phi(N_kill) = {1}.
template <CommensuratedPair P, class R>
struct DiscreteTarget {
  std::string name;
  std::function<R(const typename P::element_type &)> phi;
  std::function<R(const R &, const R &)> product;
  R identity;
  Depth kill_level;
};

namespace detail {

template <CommensuratedPair P>
void require_same_pair(const CompletionElement<P> &f1, const CompletionElement<P> &f2,
                       const char *op) {
  if (f1.pair_ptr().get() != f2.pair_ptr().get())
    throw std::invalid_argument(std::string(op) + ": operands belong to different pairs");
}

} // namespace detail

/// The image of g under the dense embedding, read at depth d.
template <CommensuratedPair P>
CompletionElement<P> embed(std::shared_ptr<const P> pair, typename P::element_type g, Depth d) {
  return CompletionElement<P>(std::move(pair), std::move(g), d);
}

template <CommensuratedPair P>
CompletionElement<P> identity(std::shared_ptr<const P> pair, Depth d) {
  auto one = pair->identity();
  return CompletionElement<P>(std::move(pair), std::move(one), d);
}

template <CommensuratedPair P>
Depth conj_depth(const P &pair, const typename P::element_type &g, Depth d) {
  return pair.conj_depth(g, d);
}

/// Product f1 * f2.
///
/// With j = conj_depth(rep2, d) <= depth1 we have rep2^-1 N_j rep2 inside
/// N_d, so (rep1 N_j)(rep2 N_d) = rep1 rep2 N_d. The output depth is the
/// largest such d not exceeding depth2.
template <CommensuratedPair P>
CompletionElement<P> mul(const CompletionElement<P> &f1, const CompletionElement<P> &f2) {
  detail::require_same_pair(f1, f2, "mul");
  const P &pair = f1.pair();
  // conj_depth(g, d) >= d, so nothing above depth1 can qualify.
  std::size_t d = std::min(f2.depth(), f1.depth()).value();
  for (;;) {
    if (pair.conj_depth(f2.rep(), Depth{d}) <= f1.depth())
      return CompletionElement<P>(f1.pair_ptr(), pair.multiply(f1.rep(), f2.rep()), Depth{d});
    if (d == 0)
      break;
    --d;
  }
  throw PrecisionExhausted("mul", pair.conj_depth(f2.rep(), Depth{0}), f1.depth());
}

/// Inverse. With j = conj_depth(rep, d) <= depth, N_j rep^-1 lies in
/// rep^-1 N_d, so the inverse filter contains rep^-1 N_d.
template <CommensuratedPair P>
CompletionElement<P> inv(const CompletionElement<P> &f) {
  const P &pair = f.pair();
  std::size_t d = f.depth().value();
  for (;;) {
    if (pair.conj_depth(f.rep(), Depth{d}) <= f.depth())
      return CompletionElement<P>(f.pair_ptr(), pair.inverse(f.rep()), Depth{d});
    if (d == 0)
      break;
    --d;
  }
  throw PrecisionExhausted("inv", pair.conj_depth(f.rep(), Depth{0}), f.depth());
}

/// True iff f1 and f2 name the same left coset of N_d.
template <CommensuratedPair P>
bool eq_at_depth(const CompletionElement<P> &f1, const CompletionElement<P> &f2, Depth d) {
  detail::require_same_pair(f1, f2, "eq_at_depth");
  const Depth available = std::min(f1.depth(), f2.depth());
  if (d > available)
    throw PrecisionExhausted("eq_at_depth", d, available);
  const P &pair = f1.pair();
  return pair.in_level(pair.multiply(pair.inverse(f1.rep()), f2.rep()), d);
}

template <CommensuratedPair P>
Valuation valuation(const CompletionElement<P> &f1, const CompletionElement<P> &f2) {
  detail::require_same_pair(f1, f2, "valuation");
  const P &pair = f1.pair();
  const auto quotient = pair.multiply(pair.inverse(f1.rep()), f2.rep());
  const std::size_t top = std::min(f1.depth(), f2.depth()).value();
  for (std::size_t d = 0; d <= top; ++d) {
    if (!pair.in_level(quotient, Depth{d}))
      return d == 0 ? Valuation::disjoint() : Valuation::at(Depth{d - 1});
  }
  return Valuation::indistinguishable(Depth{top});
}

/// Representative h of the right coset N_d h that the filter contains.
template <CommensuratedPair P>
typename P::element_type right_rep(const CompletionElement<P> &f, Depth d) {
  const Depth required = f.pair().conj_depth(f.rep(), d);
  if (required > f.depth())
    throw PrecisionExhausted("right_rep", required, f.depth());
  return f.rep();
}

/// Same representative at a coarser depth. Precision can only be minted by
/// embed, never by truncate.
template <CommensuratedPair P>
CompletionElement<P> truncate(const CompletionElement<P> &f, Depth d) {
  if (d > f.depth())
    throw PrecisionExhausted("truncate", d, f.depth());
  return CompletionElement<P>(f.pair_ptr(), f.rep(), d);
}

/// The universal map psi evaluated at f: phi of any point of rep * N_kill.
template <CommensuratedPair P, class R>
R psi_eval(const DiscreteTarget<P, R> &target, const CompletionElement<P> &f) {
  if (f.depth() < target.kill_level)
    throw PrecisionExhausted("psi(" + target.name + ")", target.kill_level, f.depth());
  return target.phi(f.rep());
}

} // namespace commensurate
